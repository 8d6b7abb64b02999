#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "akchar/errors.hpp"
#include "akchar/partitions.hpp"
#include "akchar/tableaux.hpp"
#include "akchar/words.hpp"
#include "doctest.h"

using akchar::GeneratorSymbol;
using akchar::Integer;
using akchar::MultiPartition;
using akchar::Partition;

namespace {

MultiPartition MP(const std::vector<std::vector<int>>& parts) { return MultiPartition::from_parts(parts); }

// Coefficients of prod_k 1/(1-x^k)^m up to x^n.
std::vector<Integer> multipartition_series(int m, int n) {
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int copy = 0; copy < m; ++copy) {
    for (int k = 1; k <= n; ++k) {
      for (int j = k; j <= n; ++j) c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j - k)];
    }
  }
  return c;
}

// f^lambda by the branching rule: remove each removable corner.
Integer standard_by_branching(const std::vector<int>& parts) {
  if (parts.empty()) return 1;
  Integer total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool corner = i + 1 == parts.size() || parts[i + 1] < parts[i];
    if (!corner) continue;
    std::vector<int> smaller = parts;
    if (--smaller[i] == 0) smaller.pop_back();
    total += standard_by_branching(smaller);
  }
  return total;
}

// Fill every cell with every letter and test the semistandard rules.
Integer semistandard_by_filling(const Partition& lambda, int k, int l) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 1; r <= lambda.length(); ++r) {
    for (int c = 0; c < lambda.part(r); ++c) cells.emplace_back(static_cast<int>(r - 1), c);
  }
  const int d = k + l;
  if (d == 0) return cells.empty() ? 1 : 0;
  std::vector<std::vector<int>> grid(lambda.length());
  for (std::size_t r = 0; r < lambda.length(); ++r) grid[r].assign(static_cast<std::size_t>(lambda.part(r + 1)), 0);
  Integer count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t idx) {
    if (idx == cells.size()) {
      for (std::size_t r = 0; r < grid.size(); ++r) {
        for (std::size_t c = 0; c < grid[r].size(); ++c) {
          const int v = grid[r][c];
          const bool odd = v >= k;
          if (c + 1 < grid[r].size()) {
            const int w = grid[r][c + 1];
            if (odd ? w <= v : w < v) return;
          }
          if (r + 1 < grid.size() && c < grid[r + 1].size()) {
            const int w = grid[r + 1][c];
            if (odd ? w < v : w <= v) return;
          }
        }
      }
      ++count;
      return;
    }
    auto [r, c] = cells[idx];
    for (int v = 0; v < d; ++v) {
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      go(idx + 1);
    }
  };
  go(0);
  return count;
}

Integer binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  Integer v = 1;
  for (int i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
  return v;
}

// Coefficient of x^a in prod_i C_{k_i}(x) C_{l_i}(x), C_k = sum_{j<=k} (x/(1-x))^j.
Integer graded_pair_count(int a, const std::vector<int>& k, const std::vector<int>& l) {
  auto at_most = [a](int len) {
    std::vector<Integer> c(static_cast<std::size_t>(a) + 1, 0);
    c[0] = 1;
    for (int s = 1; s <= a; ++s) {
      for (int j = 1; j <= len; ++j) c[static_cast<std::size_t>(s)] += binom(s - 1, j - 1);
    }
    return c;
  };
  std::vector<Integer> total(static_cast<std::size_t>(a) + 1, 0);
  total[0] = 1;
  auto convolve = [&](const std::vector<Integer>& f) {
    std::vector<Integer> r(total.size(), 0);
    for (std::size_t i = 0; i < total.size(); ++i) {
      for (std::size_t j = 0; i + j < total.size(); ++j) r[i + j] += total[i] * f[j];
    }
    total = r;
  };
  for (std::size_t i = 0; i < k.size(); ++i) {
    convolve(at_most(k[i]));
    convolve(at_most(l[i]));
  }
  return a == 0 ? total[0] - 1 : total[static_cast<std::size_t>(a)];
}

}  // namespace

TEST_CASE("partition validation and conjugate") {
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, 0}));
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  for (int n = 0; n <= 8; ++n) {
    for (const auto& p : akchar::list_partitions(n)) CHECK(p.conjugate().conjugate() == p);
  }
}

TEST_CASE("list_partitions examples") {
  const auto ps = akchar::list_partitions(3);
  REQUIRE(ps.size() == 3);
  CHECK(ps[0] == Partition({3}));
  CHECK(ps[1] == Partition({2, 1}));
  CHECK(ps[2] == Partition({1, 1, 1}));
  const auto two = akchar::list_multipartitions(2, 1);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == MP({{1}, {}}));
  CHECK(two[1] == MP({{}, {1}}));
  CHECK(akchar::list_multipartitions(2, 2).size() == 5);
}

TEST_CASE("multipartition counts match the generating function") {
  for (int m = 1; m <= 3; ++m) {
    const auto series = multipartition_series(m, 8);
    for (int n = 0; n <= 8; ++n) {
      const auto list = akchar::list_multipartitions(static_cast<std::size_t>(m), n);
      CHECK(Integer(static_cast<long>(list.size())) == series[static_cast<std::size_t>(n)]);
      CHECK(std::set<MultiPartition>(list.begin(), list.end()).size() == list.size());
      for (const auto& mu : list) CHECK(mu.size() == n);
    }
  }
  const auto single = multipartition_series(1, 20);
  CHECK(akchar::list_partitions(20).size() == single[20].get_ui());
}

TEST_CASE("multipartition text form") {
  const auto mu = MP({{3, 1}, {}, {2}});
  CHECK(mu.to_string() == "[[3,1],[],[2]]");
  CHECK(MultiPartition::parse("[[3,1],[],[2]]") == mu);
  CHECK(mu.length() == 3);
  CHECK(mu.num_nonzero() == 2);
  CHECK_THROWS_AS(MultiPartition::parse("[[2,]]"), akchar::ParseError);
  CHECK_THROWS_AS(MultiPartition::parse("[[1,2]]"), akchar::ParseError);
  CHECK_THROWS_AS(MultiPartition::parse("[3]"), akchar::ParseError);
}

TEST_CASE("graded pair examples") {
  const auto one = akchar::list_graded_pairs(1, {1}, {1});
  REQUIRE(one.size() == 2);
  const auto two = akchar::list_graded_pairs(2, {1}, {1});
  CHECK(two.size() == 3);
  const auto only_beta = akchar::list_graded_pairs(1, {0}, {1});
  REQUIRE(only_beta.size() == 1);
  CHECK(only_beta[0].beta == akchar::MultiComposition{{1}});

  auto p = akchar::make_graded_pair({{1}}, {{1}});
  CHECK(akchar::pair_stats(p) == akchar::PairStats{2, 1, 1, 1});
  p = akchar::make_graded_pair({{1}, {}}, {{}, {2}});
  CHECK(akchar::pair_stats(p) == akchar::PairStats{2, 2, 2, 1});
  p = akchar::make_graded_pair({{2, 1}, {}}, {{}, {}});
  CHECK(akchar::pair_stats(p) == akchar::PairStats{2, 1, 0, 0});
  CHECK_THROWS(akchar::make_graded_pair({{0}}, {{}}));
}

TEST_CASE("graded pair counts and statistics") {
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> alphabets = {
      {{1}, {1}}, {{2}, {0}}, {{0}, {2}}, {{2}, {1}}, {{1, 1}, {1, 1}}, {{2, 0}, {0, 1}}, {{1, 0, 1}, {0, 2, 0}}};
  for (const auto& [k, l] : alphabets) {
    for (int a = 1; a <= 6; ++a) {
      const auto pairs = akchar::list_graded_pairs(a, k, l);
      CHECK(Integer(static_cast<long>(pairs.size())) == graded_pair_count(a, k, l));
      for (const auto& p : pairs) {
        int total = 0;
        int last = 0;
        int bsize = 0;
        int blen = 0;
        for (std::size_t i = 0; i < k.size(); ++i) {
          CHECK(static_cast<int>(p.alpha[i].size()) <= k[i]);
          CHECK(static_cast<int>(p.beta[i].size()) <= l[i]);
          const int occupied = static_cast<int>(p.alpha[i].size() + p.beta[i].size());
          total += occupied;
          if (occupied > 0) last = static_cast<int>(i) + 1;
          for (int x : p.beta[i]) bsize += x;
          blen += static_cast<int>(p.beta[i].size());
        }
        CHECK(akchar::pair_stats(p) == akchar::PairStats{total, last, bsize, blen});
      }
    }
  }
}

TEST_CASE("compositions") {
  for (int a = 1; a <= 8; ++a) {
    for (int len = 1; len <= a; ++len) {
      Integer expected = 0;
      for (int j = 1; j <= len; ++j) expected += binom(a - 1, j - 1);
      CHECK(Integer(static_cast<long>(akchar::list_compositions(a, len).size())) == expected);
    }
  }
}

TEST_CASE("hook partitions") {
  CHECK(akchar::list_hook_multipartitions(3, {1}, {1}).size() == 3);
  const auto single = akchar::list_hook_multipartitions(3, {1}, {0});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == MP({{3}}));
  CHECK(akchar::list_hook_multipartitions(2, {1, 1}, {1, 1}).size() == 5);
  CHECK_FALSE(akchar::is_hook_partition(Partition({2, 2}), 1, 1));
  CHECK(akchar::is_hook_partition(Partition({5, 1, 1, 1}), 1, 1));
}

TEST_CASE("semistandard counts") {
  CHECK(akchar::count_semistandard(Partition({2}), 1, 1) == 2);
  CHECK(akchar::count_semistandard(MP({{1}, {1}}), {1, 1}, {1, 1}) == 4);
  CHECK(akchar::count_semistandard(Partition({2, 2}), 1, 1) == 0);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : akchar::list_partitions(n)) {
      for (int k = 0; k <= 2; ++k) {
        for (int l = 0; l <= 2; ++l) {
          CHECK(akchar::count_semistandard(lambda, k, l) == semistandard_by_filling(lambda, k, l));
          CHECK(akchar::count_semistandard(lambda, k, l) == akchar::count_semistandard(lambda.conjugate(), l, k));
        }
      }
    }
  }
}

TEST_CASE("standard tableaux counts") {
  CHECK(akchar::count_standard_tableaux(Partition({2, 1})) == 2);
  CHECK(akchar::count_standard_multitableaux(MP({{1}, {1}})) == 2);
  for (int n = 0; n <= 6; ++n) {
    CHECK(akchar::count_standard_tableaux(Partition({n > 0 ? n : 1})) == 1);
    Integer sum_sq = 0;
    for (const auto& lambda : akchar::list_partitions(n)) {
      const Integer f = akchar::count_standard_tableaux(lambda);
      CHECK(f == standard_by_branching(lambda.parts()));
      sum_sq += f * f;
    }
    Integer fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(sum_sq == fact);
  }
}

TEST_CASE("standard words") {
  using S = GeneratorSymbol;
  CHECK(akchar::word_group(MP({{1}, {}})).symbols.empty());
  CHECK(akchar::word_group(MP({{}, {1}})).symbols == std::vector<S>{S::s(0)});
  CHECK(akchar::word_group(MP({{2}})).symbols == std::vector<S>{S::s(1)});
  CHECK(akchar::word_hecke(MP({{2}})).symbols == std::vector<S>{S::g(1)});
  CHECK(akchar::word_hecke(MP({{}, {1, 1}})).symbols == std::vector<S>{S::xi(1, 1), S::xi(2, 1)});
  CHECK(akchar::word_hecke(MP({{1}, {1}})).symbols == std::vector<S>{S::xi(2, 1)});
  CHECK(akchar::word_group(MP({{}, {2}})).symbols == std::vector<S>{S::s(1), S::s(0), S::s(1), S::s(1)});
  const auto blocks = akchar::standard_blocks(MP({{2, 1}, {}, {3}}));
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[2].color == 3);
  CHECK(blocks[2].start == 3);
  CHECK(blocks[2].size == 3);
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& mu : akchar::list_multipartitions(static_cast<std::size_t>(m), n)) {
        const auto w = akchar::word_hecke(mu);
        CHECK(w.n == n);
        CHECK_NOTHROW(w.validate());
        CHECK_NOTHROW(akchar::word_group(mu).validate());
      }
    }
  }
}
