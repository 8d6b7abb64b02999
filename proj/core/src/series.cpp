#include "akchar/series.hpp"

#include <sstream>
#include <stdexcept>

#include "akchar/errors.hpp"

namespace akchar {

namespace {

void check_coeff(const MultiPoly& c, std::size_t num_u) {
  if (c.num_u() != num_u) throw DimensionMismatch("TruncSeries: coefficient has wrong u-arity");
  for (const auto& t : c.terms()) {
    if (t.exps[0] != 0) throw std::invalid_argument("TruncSeries: coefficient depends on q");
  }
}

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Coefficient of t^j in (1 - t)^e, e possibly negative.
Integer q_power_coeff(int e, std::size_t j) {
  const long jj = static_cast<long>(j);
  if (e >= 0) {
    if (jj > e) return 0;
    Integer c = binomial(e, jj);
    return (j % 2 == 0) ? c : Integer(-c);
  }
  // (1 - t)^(-k) = sum_j C(k + j - 1, j) t^j
  const long k = -static_cast<long>(e);
  return binomial(k + jj - 1, jj);
}

}  // namespace

TruncSeries::TruncSeries(std::size_t order, std::size_t num_u) : num_u_(num_u) {
  if (order == 0) throw std::invalid_argument("TruncSeries: order must be positive");
  coeffs_.assign(order, MultiPoly(num_u));
}

TruncSeries::TruncSeries(std::size_t order, std::vector<MultiPoly> coeffs) {
  if (order == 0) throw std::invalid_argument("TruncSeries: order must be positive");
  if (coeffs.empty()) throw std::invalid_argument("TruncSeries: need at least one coefficient");
  num_u_ = coeffs.front().num_u();
  for (const auto& c : coeffs) check_coeff(c, num_u_);
  coeffs.resize(order, MultiPoly(num_u_));
  coeffs_ = std::move(coeffs);
}

TruncSeries TruncSeries::constant(std::size_t order, const MultiPoly& c) {
  return TruncSeries(order, std::vector<MultiPoly>{c});
}

TruncSeries TruncSeries::t(std::size_t order, std::size_t num_u) {
  TruncSeries s(order, num_u);
  if (order > 1) s.coeffs_[1] = MultiPoly::constant(1, num_u);
  return s;
}

bool TruncSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void TruncSeries::check_same_ring(const TruncSeries& rhs) const {
  if (order() != rhs.order() || num_u_ != rhs.num_u_) {
    std::ostringstream os;
    os << "TruncSeries: (order " << order() << ", " << num_u_ << " u-vars) vs (order "
       << rhs.order() << ", " << rhs.num_u_ << " u-vars)";
    throw DimensionMismatch(os.str());
  }
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  check_same_ring(rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  check_same_ring(rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& rhs) {
  check_same_ring(rhs);
  std::vector<MultiPoly> out(coeffs_.size(), MultiPoly(num_u_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncSeries TruncSeries::pow(unsigned e) const {
  TruncSeries result = constant(order(), MultiPoly::constant(1, num_u_));
  TruncSeries base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

TruncSeries TruncSeries::embed(std::size_t num_u) const {
  std::vector<MultiPoly> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.push_back(c.embed(num_u));
  return TruncSeries(order(), std::move(cs));
}

std::string TruncSeries::to_string() const {
  // Put t^j into the q slot and reuse the canonical polynomial printer.
  MultiPolyBuilder b(num_u_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    for (const auto& term : coeffs_[j].terms()) {
      Exponents e = term.exps;
      e[0] = static_cast<int>(j);
      b.add(e, term.coeff);
    }
  }
  std::string s = std::move(b).build().to_string();
  for (char& ch : s) {
    if (ch == 'q') ch = 't';
  }
  return s;
}

TruncSeries expand_at_q1(const MultiPoly& p, std::size_t order) {
  if (order == 0) throw std::invalid_argument("expand_at_q1: order must be positive");
  const std::size_t m = p.num_u();
  std::vector<MultiPolyBuilder> builders(order, MultiPolyBuilder(m));
  for (const auto& term : p.terms()) {
    Exponents e = term.exps;
    e[0] = 0;
    for (std::size_t j = 0; j < order; ++j) {
      Integer c = q_power_coeff(term.exps[0], j);
      if (c != 0) builders[j].add(e, term.coeff * c);
    }
  }
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(order);
  for (auto& b : builders) coeffs.push_back(std::move(b).build());
  return TruncSeries(order, std::move(coeffs));
}

}  // namespace akchar
