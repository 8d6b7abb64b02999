// Acceptance runner: one line per criterion, exit 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "akchar/cyclotomic.hpp"
#include "akchar/series.hpp"
#include "akchar/verify.hpp"
#include "cli.hpp"
#include "ring_oracles.hpp"
#include "support.hpp"

namespace {

struct Outcome {
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string note;

  void add(bool ok) {
    ++total;
    passed += ok;
  }
  void add(const akchar::SuiteReport& r) {
    passed += r.passed;
    total += r.total;
    if (r.counterexample) note += " " + r.suite + " counterexample " + r.counterexample->dump();
  }
  bool ok() const { return total > 0 && passed == total; }
};

akchar::SuiteReport suite(const char* name, std::optional<std::size_t> m = std::nullopt) {
  akchar::VerifyOptions o;
  o.m = m;
  return akchar::run_suite(name, o);
}

struct CliResult {
  int code;
  std::string out;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = akchar::cli::run(args, out, err);
  return {code, out.str()};
}

Outcome oracle_equivalence() {
  Outcome o;
  o.add(suite("oracle"));
  return o;
}

Outcome presentations() {
  Outcome o;
  o.add(suite("ak-relations"));
  o.add(suite("shoji-relations"));
  return o;
}

Outcome group_specialization() {
  Outcome o;
  o.add(suite("specialization"));
  return o;
}

Outcome closed_forms() {
  Outcome o;
  o.add(suite("theta-closed-forms"));
  o.add(suite("coef"));
  return o;
}

Outcome hook_sum() {
  Outcome o;
  o.add(suite("hook-sum"));
  return o;
}

Outcome wreath() {
  Outcome o;
  o.add(suite("wreath"));
  return o;
}

Outcome hook_combinatorics() {
  Outcome o;
  o.add(suite("dimension-identity"));
  return o;
}

Outcome ring_suite() {
  using namespace ring_oracles;
  Outcome o;
  for (unsigned m = 1; m <= 24; ++m) {
    const auto phi = akchar::cyclotomic_polynomial(m);
    o.add(phi.size() - 1 == phi_by_gcd(m));
    o.add(rem(x_pow_minus_one(m), phi).empty());
    o.add(phi.back() == 1);
  }
  for (unsigned m = 2; m <= 12; ++m) {
    for (unsigned t = 1; t < m; ++t) {
      CycloElem sum(m);
      for (unsigned i = 1; i <= m; ++i) sum += CycloElem::root_power(m, static_cast<long>(t * (i - 1)));
      o.add(sum.is_zero());
    }
  }
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned m = 1 + static_cast<unsigned>(trial % 5);
    const std::size_t order = 1 + static_cast<std::size_t>(trial % 4);
    const MultiPoly a = testing_support::random_poly(rng, m);
    const MultiPoly b = testing_support::random_poly(rng, m);
    const auto sa = akchar::specialize_to_group(a, m);
    const auto sb = akchar::specialize_to_group(b, m);
    o.add(sa == specialize_by_division(a, m));
    o.add(akchar::specialize_to_group(a + b, m) == sa + sb);
    o.add(akchar::specialize_to_group(a * b, m) == sa * sb);
    const auto ea = akchar::expand_at_q1(a, order);
    const auto eb = akchar::expand_at_q1(b, order);
    o.add(ea == expand_by_binomials(a, order));
    o.add(akchar::expand_at_q1(a + b, order) == ea + eb);
    o.add(akchar::expand_at_q1(a * b, order) == ea * eb);
  }
  return o;
}

Outcome pair_case() {
  Outcome o;
  o.add(suite("hook-sum", 2));
  o.add(suite("wreath", 2));
  const auto report = cli({"compare-pair-regev", "--max-n", "4"});
  o.add(report.code == 0);
  const auto j = nlohmann::json::parse(report.out, nullptr, false);
  o.add(!j.is_discarded() && j.contains("rows") && !j["rows"].empty());
  if (!j.is_discarded() && j.contains("rows")) {
    std::size_t series = 0;
    std::size_t group = 0;
    for (const auto& row : j["rows"]) {
      series += row.value("series_match", false);
      group += row.value("group_match", false);
    }
    o.note = " pair formula report: " + std::to_string(j["rows"].size()) + " rows, series match " +
             std::to_string(series) + ", group match " + std::to_string(group) + " (not asserted)";
  }
  return o;
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> commands = {
      {"chars", "--m", "2", "--n", "4"},
      {"chars", "--m", "3", "--k", "2,0,1", "--l", "0,1,1", "--n", "3", "--spec", "group", "--format", "csv"},
      {"chars", "--m", "2", "--k", "1,1", "--l", "1,1", "--n", "4", "--spec", "t2:3"},
      {"hooks", "--m", "2", "--k", "2,1", "--l", "1,2", "--n", "5"},
      {"verify", "--max-n", "3"},
      {"verify", "--suite", "specialization", "--max-n", "3", "--format", "csv"},
      {"compare-pair-regev", "--max-n", "4"},
  };
  Outcome o;
  for (auto cmd : commands) {
    auto eight = cmd;
    cmd.insert(cmd.end(), {"--jobs", "1"});
    eight.insert(eight.end(), {"--jobs", "8"});
    const auto a = cli(cmd);
    const auto b = cli(eight);
    o.add(a.code == b.code && a.out == b.out && !a.out.empty());
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle equivalence of the closed form", oracle_equivalence},
      {"Ariki-Koike and Shoji presentations", presentations},
      {"group specialization", group_specialization},
      {"Theta_j and coef closed forms", closed_forms},
      {"hook sum mod t^2", hook_sum},
      {"wreath product values", wreath},
      {"hook and tableau combinatorics", hook_combinatorics},
      {"ring suite", ring_suite},
      {"pair case m = 2", pair_case},
      {"CLI determinism across --jobs", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.note = std::string(" exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.ok();
    std::printf("criterion %2zu %s  %s  %zu/%zu  %.1fs%s\n", i + 1, o.ok() ? "PASS" : "FAIL",
                criteria[i].first.c_str(), o.passed, o.total, secs, o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
