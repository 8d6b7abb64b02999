#pragma once

#include <memory>
#include <string>
#include <vector>

#include "akchar/multipoly.hpp"

namespace akchar {

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
/// Computed by exact division of x^m - 1 by the Phi_d for proper divisors d.
std::vector<Integer> cyclotomic_polynomial(unsigned m);

/// Euler's totient, the degree of Phi_m.
unsigned euler_phi(unsigned m);

/// Element of Z[x]/Phi_m(x), i.e. of Z[zeta_m]. The representative has
/// exactly phi(m) coefficients (constant term first).
class CycloElem {
 public:
  explicit CycloElem(unsigned m);
  CycloElem(unsigned m, const std::vector<Integer>& coeffs);

  static CycloElem from_integer(unsigned m, const Integer& c);
  /// Class of x^e; e is reduced mod m first since Phi_m divides x^m - 1.
  static CycloElem root_power(unsigned m, long e);

  unsigned modulus() const noexcept { return m_; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;
  /// True when the element lies in Z (all non-constant coefficients vanish).
  bool is_integer() const;
  /// Throws std::domain_error unless is_integer().
  Integer to_integer() const;

  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& rhs);
  CycloElem& operator-=(const CycloElem& rhs);
  CycloElem& operator*=(const CycloElem& rhs);
  CycloElem& operator*=(const Integer& c);

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  friend CycloElem operator*(CycloElem a, const Integer& c) { return a *= c; }

  bool operator==(const CycloElem& rhs) const;
  CycloElem pow(unsigned e) const;

  /// `c0 + c1 * z + c2 * z^2`, z a primitive m-th root of unity.
  std::string to_string() const;

 private:
  void check_same_ring(const CycloElem& rhs) const;
  void reduce(std::vector<Integer> full);

  unsigned m_;
  std::shared_ptr<const std::vector<Integer>> phi_;
  std::vector<Integer> coeffs_;
};

/// Ring homomorphism q -> 1, u_i -> zeta^(i-1) into Z[x]/Phi_m.
/// Requires p.num_u() == m.
CycloElem specialize_to_group(const MultiPoly& p, unsigned m);

}  // namespace akchar
