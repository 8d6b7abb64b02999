#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace akchar {

using Integer = mpz_class;

/// Exponent vector (e_q, e_1, ..., e_m). e_q may be negative, the u-exponents
/// never are. Lexicographic comparison is the canonical term order.
using Exponents = std::vector<int>;

/// Exact element of Z[q, q^-1][u_1, ..., u_m].
///
/// Terms are kept sorted by exponent vector with no zero coefficients, so two
/// polynomials are equal iff their term lists are identical.
class MultiPoly {
 public:
  struct Term {
    Exponents exps;
    Integer coeff;

    bool operator==(const Term& other) const = default;
  };

  MultiPoly() = default;
  explicit MultiPoly(std::size_t num_u) : num_u_(num_u) {}

  static MultiPoly constant(const Integer& c, std::size_t num_u = 0);
  static MultiPoly monomial(const Integer& c, int eq, std::vector<int> eu);
  static MultiPoly q_power(int e, std::size_t num_u = 0);
  /// u_i^e with i 1-based.
  static MultiPoly u_power(std::size_t i, int e, std::size_t num_u);
  /// 1 - q.
  static MultiPoly one_minus_q(std::size_t num_u = 0);

  std::size_t num_u() const noexcept { return num_u_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the exponent vector (zero if absent).
  Integer coeff(const Exponents& exps) const;

  int min_q_degree() const;
  int max_q_degree() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Integer& c);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const Integer& c) { return lhs *= c; }
  friend MultiPoly operator*(const Integer& c, MultiPoly rhs) { return rhs *= c; }

  bool operator==(const MultiPoly& rhs) const;

  /// Multiply by c * q^eq * u^eu. Term order is preserved, so this is linear.
  MultiPoly times_monomial(const Integer& c, int eq, const std::vector<int>& eu) const;
  MultiPoly pow(unsigned e) const;

  /// The same polynomial viewed in num_u >= this->num_u() variables.
  MultiPoly embed(std::size_t num_u) const;
  /// Substitute u_i := value (i 1-based); the result has one fewer variable.
  MultiPoly substitute_u(std::size_t i, const Integer& value) const;

  /// Canonical text form, e.g. `2 - 2 * q` or `1 * q^-1 * u2^3`.
  std::string to_string() const;
  /// Inverse of to_string(). Accepts any term order, merges like terms.
  static MultiPoly parse(std::string_view text, std::size_t num_u);

 private:
  void check_same_ring(const MultiPoly& rhs, const char* op) const;
  void normalize();

  std::size_t num_u_ = 0;
  std::vector<Term> terms_;

  friend class MultiPolyBuilder;
};

/// Accumulates terms in arbitrary order and produces a canonical MultiPoly.
class MultiPolyBuilder {
 public:
  explicit MultiPolyBuilder(std::size_t num_u) : num_u_(num_u) {}
  void add(const Exponents& exps, const Integer& c);
  void add(const MultiPoly& p);
  MultiPoly build() &&;

 private:
  std::size_t num_u_;
  std::vector<MultiPoly::Term> pending_;
};

MultiPoly pow(const MultiPoly& p, unsigned e);

}  // namespace akchar
