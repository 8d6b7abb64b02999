#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "akchar/cyclotomic.hpp"
#include "akchar/multipoly.hpp"
#include "akchar/series.hpp"

// Exact reference computations for the ring layer, written without the
// library's own reduction and expansion code.
namespace ring_oracles {

using akchar::CycloElem;
using akchar::Integer;
using akchar::MultiPoly;
using akchar::TruncSeries;

using Dense = std::vector<Integer>;

inline Dense trim(Dense p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline Dense mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return trim(r);
}

// Remainder of a modulo a monic divisor.
inline Dense rem(Dense a, const Dense& monic) {
  a = trim(a);
  const std::size_t d = monic.size() - 1;
  while (a.size() > d) {
    const Integer lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) a[shift + i] -= lead * monic[i];
    a = trim(a);
  }
  return a;
}

inline Dense x_pow_minus_one(unsigned m) {
  Dense p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  return p;
}

inline unsigned phi_by_gcd(unsigned m) {
  unsigned c = 0;
  for (unsigned j = 1; j <= m; ++j) c += std::gcd(j, m) == 1;
  return c;
}

// Generalized binomial C(e, j) for any integer e.
inline Integer gen_binomial(long e, std::size_t j) {
  Integer num = 1;
  Integer den = 1;
  for (std::size_t i = 0; i < j; ++i) {
    num *= Integer(e) - Integer(static_cast<long>(i));
    den *= Integer(static_cast<long>(i + 1));
  }
  return num / den;
}

// q = 1 - t expanded term by term: q^e = sum_j C(e, j) (-t)^j.
inline TruncSeries expand_by_binomials(const MultiPoly& p, std::size_t order) {
  const std::size_t m = p.num_u();
  std::vector<akchar::MultiPolyBuilder> b(order, akchar::MultiPolyBuilder(m));
  for (const auto& term : p.terms()) {
    akchar::Exponents e = term.exps;
    e[0] = 0;
    for (std::size_t j = 0; j < order; ++j) {
      Integer c = gen_binomial(term.exps[0], j);
      if (j % 2) c = -c;
      b[j].add(e, term.coeff * c);
    }
  }
  std::vector<MultiPoly> coeffs;
  for (auto& x : b) coeffs.push_back(std::move(x).build());
  return TruncSeries(order, std::move(coeffs));
}

// q -> 1, u_i -> x^{i-1}, then reduce by the polynomial-division oracle.
inline CycloElem specialize_by_division(const MultiPoly& p, unsigned m) {
  Dense flat;
  for (const auto& term : p.terms()) {
    std::size_t deg = 0;
    for (std::size_t i = 1; i < term.exps.size(); ++i) deg += static_cast<std::size_t>(term.exps[i]) * (i - 1);
    if (flat.size() <= deg) flat.resize(deg + 1, 0);
    flat[deg] += term.coeff;
  }
  const auto phi = akchar::cyclotomic_polynomial(m);
  Dense r = rem(flat, Dense(phi.begin(), phi.end()));
  return CycloElem(m, r);
}

}  // namespace ring_oracles
