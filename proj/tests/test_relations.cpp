#include <cstddef>
#include <string>
#include <vector>

#include "akchar/relations.hpp"
#include "akchar/superrep.hpp"
#include "doctest.h"
#include "support.hpp"

using akchar::MultiPoly;
using akchar::OperatorSymbol;
using testing_support::P;

namespace {

void require_all_pass(const akchar::RelationReport& report) {
  CHECK(!report.results.empty());
  for (const auto& r : report.results) {
    INFO(r.relation);
    CHECK(r.passed);
  }
  CHECK(report.all_passed());
  CHECK(report.num_failed() == 0);
}

}  // namespace

TEST_CASE("Ariki-Koike relations hold on sample alphabets") {
  require_all_pass(akchar::check_ak_presentation(2, {1, 0}, {0, 1}));
  require_all_pass(akchar::check_ak_presentation(2, {1}, {1}));
  require_all_pass(akchar::check_ak_presentation(3, {1, 1, 0}, {0, 0, 1}));
}

TEST_CASE("Shoji relations hold on sample alphabets") {
  require_all_pass(akchar::check_shoji_presentation(2, {1, 1}, {1, 1}));
  require_all_pass(akchar::check_shoji_presentation(2, {1}, {1}));
  require_all_pass(akchar::check_shoji_presentation(3, {1, 0}, {0, 1}));
}

TEST_CASE("relation reports do not depend on the job count") {
  const auto a = akchar::check_ak_presentation(3, {1, 1}, {1, 0}, 1);
  const auto b = akchar::check_ak_presentation(3, {1, 1}, {1, 0}, 4);
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) CHECK(a.results[i].relation == b.results[i].relation);
}

TEST_CASE("a false identity is caught with a witness") {
  const akchar::SuperRep rep(akchar::GradedAlphabet({1}, {1}), 2);
  const MultiPoly one = MultiPoly::constant(1, 1);
  const akchar::OpExpr lhs{{one, {{{one, {OperatorSymbol::T(1)}}}}}};
  const akchar::OpExpr rhs{{one, {{{one, {OperatorSymbol::Tinv(1)}}}}}};
  const auto r = akchar::check_identity(rep, "T=Tinv", lhs, rhs);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == akchar::BasisWord{0, 1});
  CHECK(akchar::check_identity(rep, "T=T", lhs, lhs).passed);
}

TEST_CASE("Vandermonde data") {
  const auto one = akchar::vandermonde_data(1);
  CHECK(one.delta == P("1", 1));
  CHECK(akchar::evaluate_f(one, 1, 1) == P("1", 1));

  const auto two = akchar::vandermonde_data(2);
  CHECK(two.delta == P("u2 - u1", 2));
  REQUIRE(two.f.size() == 2);
  CHECK(two.f[0] == std::vector<MultiPoly>{P("u2", 2), P("-1", 2)});
  CHECK(two.f[1] == std::vector<MultiPoly>{P("-u1", 2), P("1", 2)});

  for (std::size_t m = 1; m <= 4; ++m) {
    const auto data = akchar::vandermonde_data(m);
    MultiPoly product = MultiPoly::constant(1, m);
    for (std::size_t a = 1; a <= m; ++a) {
      for (std::size_t b = a + 1; b <= m; ++b) product *= MultiPoly::u_power(b, 1, m) - MultiPoly::u_power(a, 1, m);
    }
    CHECK(data.delta == product);
    for (std::size_t c = 1; c <= m; ++c) {
      for (std::size_t d = 1; d <= m; ++d) {
        CHECK(akchar::evaluate_f(data, c, d) == (c == d ? data.delta : MultiPoly(m)));
      }
    }
  }
}
