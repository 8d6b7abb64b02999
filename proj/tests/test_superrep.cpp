#include <cstddef>
#include <random>
#include <vector>

#include "akchar/cyclotomic.hpp"
#include "akchar/partitions.hpp"
#include "akchar/superrep.hpp"
#include "akchar/verify.hpp"
#include "akchar/words.hpp"
#include "doctest.h"
#include "support.hpp"

using akchar::BasisWord;
using akchar::GeneratorSymbol;
using akchar::GeneratorWord;
using akchar::GradedAlphabet;
using akchar::MultiPartition;
using akchar::MultiPoly;
using akchar::OperatorSymbol;
using akchar::OperatorWord;
using akchar::SuperRep;
using akchar::TensorState;
using testing_support::P;

namespace {

MultiPartition MP(const std::vector<std::vector<int>>& parts) { return MultiPartition::from_parts(parts); }

TensorState state(const std::vector<std::pair<BasisWord, MultiPoly>>& terms, int n, std::size_t m) {
  TensorState s(n, m);
  for (const auto& [w, c] : terms) s.add(w, c);
  return s;
}

OperatorWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> pos(1, n - 1);
  std::uniform_int_distribution<int> site(1, n);
  OperatorWord w;
  for (int i = 0; i < len; ++i) {
    switch (kind(rng)) {
      case 0:
        w.push_back(OperatorSymbol::T(pos(rng)));
        break;
      case 1:
        w.push_back(OperatorSymbol::Tinv(pos(rng)));
        break;
      case 2:
        w.push_back(OperatorSymbol::S(pos(rng)));
        break;
      default:
        w.push_back(OperatorSymbol::omega(site(rng), 1 + i % 2));
    }
  }
  return w;
}

}  // namespace

TEST_CASE("graded alphabet layout") {
  const GradedAlphabet a({1, 2}, {1, 0});
  REQUIRE(a.size() == 4);
  CHECK(a.color(0) == 1);
  CHECK(a.parity(0) == 0);
  CHECK(a.color(1) == 1);
  CHECK(a.parity(1) == 1);
  CHECK(a.color(3) == 2);
  CHECK(a.parity(3) == 0);
  CHECK(a.block_offset(0) == 0);
  CHECK(a.block_offset(1) == 2);
  CHECK(a.block_offset(2) == 4);
  CHECK_THROWS(GradedAlphabet({1}, {1, 1}));
}

TEST_CASE("operator examples") {
  const SuperRep rep(GradedAlphabet({1}, {1}), 2);
  CHECK(rep.dimension() == 4);
  CHECK(rep.basis_word(1) == BasisWord{0, 1});
  auto out = rep.apply(OperatorSymbol::T(1), TensorState::basis({0, 1}, 1));
  CHECK(out == state({{{0, 1}, P("1 - q", 1)}, {{1, 0}, P("1", 1)}}, 2, 1));
  out = rep.apply(OperatorSymbol::T(1), TensorState::basis({1, 1}, 1));
  CHECK(out == state({{{1, 1}, P("-q", 1)}}, 2, 1));
  out = rep.apply(OperatorSymbol::T(1), TensorState::basis({1, 0}, 1));
  CHECK(out == state({{{0, 1}, P("q", 1)}}, 2, 1));

  const SuperRep colours(GradedAlphabet({1, 1}, {1, 0}), 2);
  out = colours.apply(OperatorSymbol::omega(1, 2), TensorState::basis({0, 1}, 2));
  CHECK(out == state({{{0, 1}, P("u1^2", 2)}}, 2, 2));
  out = colours.apply(OperatorSymbol::S(1), TensorState::basis({0, 2}, 2));
  CHECK(out == state({{{2, 0}, P("1", 2)}}, 2, 2));
  out = colours.apply(OperatorSymbol::omega(2), TensorState::basis({0, 2}, 2));
  CHECK(out == state({{{0, 2}, P("u2", 2)}}, 2, 2));

  CHECK_THROWS(rep.apply(OperatorSymbol::T(2), TensorState::basis({0, 1}, 1)));
  CHECK_THROWS(rep.apply(OperatorSymbol::omega(3), TensorState::basis({0, 1}, 1)));
}

TEST_CASE("T inverse and the quadratic relation on every small alphabet") {
  const MultiPoly one_minus_q = MultiPoly::one_minus_q();
  for (std::size_t m = 1; m <= 3; ++m) {
    for (const auto& [k, l] : akchar::list_alphabets(m, 2, 1, 4)) {
      const SuperRep rep(GradedAlphabet(k, l), 2);
      for (std::size_t i = 0; i < rep.dimension(); ++i) {
        const auto v = TensorState::basis(rep.basis_word(i), m);
        CHECK(rep.apply(OperatorWord{OperatorSymbol::T(1), OperatorSymbol::Tinv(1)}, v) == v);
        CHECK(rep.apply(OperatorWord{OperatorSymbol::Tinv(1), OperatorSymbol::T(1)}, v) == v);
        auto tt = rep.apply(OperatorWord{OperatorSymbol::T(1), OperatorSymbol::T(1)}, v);
        auto rhs = rep.apply(OperatorSymbol::T(1), v);
        rhs *= one_minus_q.embed(m);
        auto qv = v;
        qv *= MultiPoly::q_power(1, m);
        rhs += qv;
        CHECK(tt == rhs);
      }
    }
  }
}

TEST_CASE("trace examples") {
  CHECK(akchar::trace_of_word(GeneratorWord{3, {}}, GradedAlphabet({1}, {1})) == P("8", 1));
  CHECK(akchar::trace_of_word(GeneratorWord{2, {GeneratorSymbol::g(1)}}, GradedAlphabet({1}, {1})) ==
        P("2 - 2 * q", 1));
  CHECK(akchar::trace_of_word(GeneratorWord{1, {GeneratorSymbol::xi(1, 1)}}, GradedAlphabet({1, 1}, {0, 0})) ==
        P("u1 + u2", 2));
  CHECK(akchar::char_value_oracle(MP({{1, 1}}), {1}, {1}) == P("4", 1));
  CHECK(akchar::char_value_oracle(MP({{2}}), {1}, {1}) == P("2 - 2 * q", 1));
  CHECK(akchar::char_value_oracle(MP({{3}}), {1}, {1}) == P("2 - 2 * q + 2 * q^2", 1));
  CHECK_THROWS(akchar::hecke_operators(GeneratorWord{2, {GeneratorSymbol::s(1)}}));
}

TEST_CASE("trace is cyclic and independent of the job count") {
  std::mt19937 rng(3);
  const SuperRep rep(GradedAlphabet({1, 1}, {1, 0}), 3);
  for (int trial = 0; trial < 20; ++trial) {
    const OperatorWord a = random_word(rng, 3, 2);
    const OperatorWord b = random_word(rng, 3, 2);
    OperatorWord ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    OperatorWord ba = b;
    ba.insert(ba.end(), a.begin(), a.end());
    const MultiPoly t = rep.trace(ab);
    CHECK(t == rep.trace(ba));
    CHECK(t == rep.trace(ab, 4));
  }
}

TEST_CASE("trace of a block product is the product of block traces") {
  for (std::size_t m = 1; m <= 2; ++m) {
    for (const auto& [k, l] : akchar::list_alphabets(m, 1, 1, 2)) {
      for (int n = 2; n <= 4; ++n) {
        for (const auto& mu : akchar::list_multipartitions(m, n)) {
          MultiPoly product = MultiPoly::constant(1, m);
          for (const auto& block : akchar::standard_blocks(mu)) {
            std::vector<std::vector<int>> single(m);
            single[static_cast<std::size_t>(block.color - 1)] = {block.size};
            product *= akchar::char_value_oracle(MultiPartition::from_parts(single), k, l);
          }
          CHECK(akchar::char_value_oracle(mu, k, l) == product);
        }
      }
    }
  }
}

TEST_CASE("the q = 1 trace is the specialization of the generic trace") {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (const auto& [k, l] : akchar::list_alphabets(m, 1, 1, 3)) {
      const GradedAlphabet alphabet(k, l);
      akchar::GroupOracle oracle(k, l);
      for (int n = 1; n <= 3; ++n) {
        for (const auto& mu : akchar::list_multipartitions(m, n)) {
          const auto generic = akchar::specialize_to_group(akchar::char_value_oracle(mu, k, l), static_cast<unsigned>(m));
          CHECK(akchar::group_trace_of_word(akchar::word_hecke(mu), alphabet) == generic);
          CHECK(oracle.value(mu) == generic);
          CHECK(akchar::group_char_value_oracle(mu, k, l) == generic);
        }
      }
    }
  }
}

TEST_CASE("basis word text form") { CHECK(akchar::basis_word_to_string({0, 2}) == "[1,3]"); }
