#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "akchar/multipoly.hpp"

namespace testing_support {

inline akchar::MultiPoly P(const std::string& text, std::size_t m = 0) {
  return akchar::MultiPoly::parse(text, m);
}

// Small random Laurent polynomial: up to max_terms terms, coefficients in
// [-5, 5], q-exponents in [-3, 3], u-exponents in [0, 3].
inline akchar::MultiPoly random_poly(std::mt19937& rng, std::size_t m, int max_terms = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> qexp(-3, 3);
  std::uniform_int_distribution<int> uexp(0, 3);
  akchar::MultiPolyBuilder b(m);
  const int count = nterms(rng);
  for (int i = 0; i < count; ++i) {
    akchar::Exponents e(m + 1);
    e[0] = qexp(rng);
    for (std::size_t j = 1; j <= m; ++j) e[j] = uexp(rng);
    b.add(e, coeff(rng));
  }
  return std::move(b).build();
}

}  // namespace testing_support
