#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "akchar/cyclotomic.hpp"
#include "akchar/multipoly.hpp"
#include "akchar/partitions.hpp"
#include "akchar/series.hpp"

namespace akchar {

enum class SpecKind { kGeneric, kGroup, kTAdic };

/// Which ring a character value is reported in.
struct Specialization {
  SpecKind kind = SpecKind::kGeneric;
  /// Truncation order D for kTAdic.
  std::size_t order = TruncSeries::kDefaultOrder;

  /// `generic`, `group` or `t2:D`; throws ParseError otherwise.
  static Specialization parse(std::string_view text);
  std::string to_string() const;
  bool operator==(const Specialization&) const = default;
};

/// Dimension data (k_i | l_i) of the m coloured superspaces plus the
/// specialization tag.
struct CharSpec {
  std::vector<int> k;
  std::vector<int> l;
  Specialization spec;

  /// Throws on mismatched lengths, negative entries or k + l = 0.
  CharSpec(std::vector<int> k_, std::vector<int> l_, Specialization s = {});
  std::size_t m() const noexcept { return k.size(); }
  /// k + l.
  int total_dim() const;
};

/// (1, ..., 1) of length m.
std::vector<int> ones(std::size_t m);

enum class BracketSign { kQ, kMinusQ };

/// [a]_q = 1 + q + ... + q^{a-1}, or the same in -q. [0] = 0.
MultiPoly bracket(int a, BracketSign sign = BracketSign::kMinusQ, std::size_t num_u = 0);

/// Trace of g(r, a) on V^{tensor a} as the weighted sum over C(a; k|l).
MultiPoly theta(int r, int a, const std::vector<int>& k, const std::vector<int>& l);

/// Memoises theta(r, a) for one (k, l).
class ThetaCache {
 public:
  ThetaCache(std::vector<int> k, std::vector<int> l);
  const MultiPoly& theta(int r, int a);
  /// Same as the free character_value but reuses cached factors.
  MultiPoly character_value(const MultiPartition& mu);

 private:
  std::vector<int> k_;
  std::vector<int> l_;
  std::map<std::pair<int, int>, MultiPoly> cache_;
};

/// Product over the parts mu^(r)_j of theta(r, mu^(r)_j).
MultiPoly character_value(const MultiPartition& mu, const std::vector<int>& k, const std::vector<int>& l);

/// prod_{r,j} sum_i (k_i - (-1)^{mu^(r)_j} l_i) zeta^{(r-1)(i-1)} in Z[zeta_m].
CycloElem group_character_value(const MultiPartition& mu, const std::vector<int>& k, const std::vector<int>& l);

using CharValue = std::variant<MultiPoly, CycloElem, TruncSeries>;

/// The value of chi_{k|l;n} at g_mu (or w_mu) in the ring named by spec.spec.
CharValue evaluate_character(const MultiPartition& mu, const CharSpec& spec);

/// Text form of any CharValue.
std::string to_string(const CharValue& v);

/// Theta_j(i, a) for k = l = 1_i: pairs with j nonzero parts whose last
/// occupied component is i. A polynomial in q alone.
MultiPoly theta_j(int j, int i, int a);

/// 1 + (-q)^{a-1}.
MultiPoly theta1_closed_form(int a);
/// (1-q)((i-1)(a-1)(1 + (-q)^{a-2}) + (2i-1)[a-1]_{-q}); zero when a = 1.
MultiPoly theta2_closed_form(int i, int a);

/// Coef(a, u_i^r) = sum_{j=1}^{2i} Theta_j(i, a); independent of r.
MultiPoly coef(int a, int i);

/// 2[a]_{-q} + 2a(i-1)(1-q)[a-1]_{-q}, the predicted value of coef(a, i) mod t^2.
MultiPoly coef_linear_form(int a, int i);

/// 2^{l(mu)} prod_{r,j} sum_i ([x] + x(i-1)(1-q)[x-1]) u_i^{r-1} mod t^D, x = mu^(r)_j.
TruncSeries hook_sum_rhs(const MultiPartition& mu, std::size_t order = TruncSeries::kDefaultOrder);

/// (2m)^{l(mu^(1))} if only mu^(1) is nonempty and all its parts are odd, else 0.
Integer wreath_hook_value(const MultiPartition& mu);

/// The type B pair formula taken term by term, with u_1 = 1 and u_2 = u
/// (one u-variable), and its group-case number.
struct PairRegevValue {
  TruncSeries series;
  Integer group_value;
};

/// Requires a 2-multipartition.
PairRegevValue pair_regev_rhs(const MultiPartition& mu, std::size_t order = TruncSeries::kDefaultOrder);

}  // namespace akchar
