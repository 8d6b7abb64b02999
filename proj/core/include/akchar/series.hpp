#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "akchar/multipoly.hpp"

namespace akchar {

/// Truncated (1-q)-adic expansion: sum_j c_j t^j mod t^D with t = 1 - q and
/// every c_j a polynomial in u_1..u_m (q-exponent identically zero).
class TruncSeries {
 public:
  static constexpr std::size_t kDefaultOrder = 2;

  TruncSeries(std::size_t order, std::size_t num_u);
  TruncSeries(std::size_t order, std::vector<MultiPoly> coeffs);

  static TruncSeries constant(std::size_t order, const MultiPoly& c);
  /// The series of t itself.
  static TruncSeries t(std::size_t order, std::size_t num_u);

  std::size_t order() const noexcept { return coeffs_.size(); }
  std::size_t num_u() const noexcept { return num_u_; }
  const std::vector<MultiPoly>& coeffs() const noexcept { return coeffs_; }
  const MultiPoly& operator[](std::size_t j) const { return coeffs_.at(j); }
  bool is_zero() const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  TruncSeries& operator*=(const TruncSeries& rhs);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const TruncSeries& b) { return a *= b; }

  bool operator==(const TruncSeries& rhs) const = default;
  TruncSeries pow(unsigned e) const;

  /// Same series in more u-variables.
  TruncSeries embed(std::size_t num_u) const;

  /// E.g. `2 - 2 * t` or `8 * t * u2`; the t-power plays the role of the q slot.
  std::string to_string() const;

 private:
  void check_same_ring(const TruncSeries& rhs) const;

  std::size_t num_u_;
  std::vector<MultiPoly> coeffs_;
};

/// Ring homomorphism q -> 1 - t (q^-1 -> sum_j t^j) followed by truncation mod t^D.
TruncSeries expand_at_q1(const MultiPoly& p, std::size_t order = TruncSeries::kDefaultOrder);

}  // namespace akchar
