#include "akchar/regev.hpp"

#include <charconv>
#include <map>
#include <stdexcept>

#include "akchar/errors.hpp"

namespace akchar {

namespace {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

MultiPoly minus_q_power(int e, std::size_t num_u) {
  return MultiPoly::monomial(e % 2 ? -1 : 1, e, std::vector<int>(num_u, 0));
}

void check_kl(const std::vector<int>& k, const std::vector<int>& l, const MultiPartition& mu, const char* who) {
  if (k.size() != l.size()) throw DimensionMismatch(std::string(who) + ": k and l differ in length");
  if (mu.num_components() != k.size()) {
    throw DimensionMismatch(std::string(who) + ": multipartition arity differs from m");
  }
}

}  // namespace

Specialization Specialization::parse(std::string_view text) {
  if (text == "generic") return {SpecKind::kGeneric, TruncSeries::kDefaultOrder};
  if (text == "group") return {SpecKind::kGroup, TruncSeries::kDefaultOrder};
  if (text == "t2") return {SpecKind::kTAdic, TruncSeries::kDefaultOrder};
  constexpr std::string_view prefix = "t2:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string_view digits = text.substr(prefix.size());
    std::size_t order = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), order);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && order >= 1) {
      return {SpecKind::kTAdic, order};
    }
  }
  throw ParseError("unknown specialization '" + std::string(text) + "' (expected generic, group or t2:D)");
}

std::string Specialization::to_string() const {
  switch (kind) {
    case SpecKind::kGeneric:
      return "generic";
    case SpecKind::kGroup:
      return "group";
    case SpecKind::kTAdic:
      return "t2:" + std::to_string(order);
  }
  return "generic";
}

CharSpec::CharSpec(std::vector<int> k_, std::vector<int> l_, Specialization s)
    : k(std::move(k_)), l(std::move(l_)), spec(s) {
  if (k.size() != l.size()) throw DimensionMismatch("CharSpec: k and l differ in length");
  if (k.empty()) throw std::invalid_argument("CharSpec: m must be positive");
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 0 || l[i] < 0) throw std::invalid_argument("CharSpec: negative dimension");
  }
  if (total_dim() == 0) throw std::invalid_argument("CharSpec: k + l must be positive");
}

int CharSpec::total_dim() const {
  int d = 0;
  for (std::size_t i = 0; i < k.size(); ++i) d += k[i] + l[i];
  return d;
}

std::vector<int> ones(std::size_t m) { return std::vector<int>(m, 1); }

MultiPoly bracket(int a, BracketSign sign, std::size_t num_u) {
  if (a < 0) throw std::invalid_argument("bracket: a must be nonnegative");
  MultiPolyBuilder b(num_u);
  Exponents e(num_u + 1, 0);
  for (int j = 0; j < a; ++j) {
    e[0] = j;
    b.add(e, (sign == BracketSign::kMinusQ && j % 2) ? -1 : 1);
  }
  return std::move(b).build();
}

MultiPoly theta(int r, int a, const std::vector<int>& k, const std::vector<int>& l) {
  const std::size_t m = k.size();
  if (r < 1 || static_cast<std::size_t>(r) > m) throw std::invalid_argument("theta: r must lie in 1..m");
  const MultiPoly one_minus_q = MultiPoly::one_minus_q(m);
  std::vector<MultiPoly> omq_pow{MultiPoly::constant(1, m)};
  MultiPolyBuilder sum(m);
  for (const auto& p : list_graded_pairs(a, k, l)) {
    Integer weight = 1;
    for (std::size_t i = 0; i < m; ++i) {
      weight *= binomial(k[i], static_cast<int>(p.alpha[i].size()));
      weight *= binomial(l[i], static_cast<int>(p.beta[i].size()));
    }
    while (omq_pow.size() < static_cast<std::size_t>(p.total_length)) omq_pow.push_back(omq_pow.back() * one_minus_q);
    std::vector<int> eu(m, 0);
    eu[static_cast<std::size_t>(p.last_component - 1)] = r - 1;
    const int eq = p.beta_size - p.beta_length;
    if (eq % 2) weight = -weight;
    sum.add(omq_pow[static_cast<std::size_t>(p.total_length - 1)].times_monomial(weight, eq, eu));
  }
  return std::move(sum).build();
}

ThetaCache::ThetaCache(std::vector<int> k, std::vector<int> l) : k_(std::move(k)), l_(std::move(l)) {
  if (k_.size() != l_.size()) throw DimensionMismatch("ThetaCache: k and l differ in length");
}

const MultiPoly& ThetaCache::theta(int r, int a) {
  const auto key = std::make_pair(r, a);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, akchar::theta(r, a, k_, l_)).first;
  return it->second;
}

MultiPoly ThetaCache::character_value(const MultiPartition& mu) {
  check_kl(k_, l_, mu, "character_value");
  MultiPoly value = MultiPoly::constant(1, k_.size());
  for (std::size_t r = 1; r <= mu.num_components(); ++r) {
    for (int part : mu[r].parts()) value *= theta(static_cast<int>(r), part);
  }
  return value;
}

MultiPoly character_value(const MultiPartition& mu, const std::vector<int>& k, const std::vector<int>& l) {
  return ThetaCache(k, l).character_value(mu);
}

CycloElem group_character_value(const MultiPartition& mu, const std::vector<int>& k, const std::vector<int>& l) {
  check_kl(k, l, mu, "group_character_value");
  const auto m = static_cast<unsigned>(k.size());
  CycloElem value = CycloElem::from_integer(m, 1);
  for (std::size_t r = 1; r <= mu.num_components(); ++r) {
    for (int part : mu[r].parts()) {
      CycloElem factor(m);
      for (std::size_t i = 0; i < k.size(); ++i) {
        const Integer c = part % 2 ? k[i] + l[i] : k[i] - l[i];
        factor += CycloElem::root_power(m, static_cast<long>((r - 1) * i)) * c;
      }
      value *= factor;
    }
  }
  return value;
}

CharValue evaluate_character(const MultiPartition& mu, const CharSpec& spec) {
  switch (spec.spec.kind) {
    case SpecKind::kGeneric:
      return character_value(mu, spec.k, spec.l);
    case SpecKind::kGroup:
      return group_character_value(mu, spec.k, spec.l);
    case SpecKind::kTAdic:
      return expand_at_q1(character_value(mu, spec.k, spec.l), spec.spec.order);
  }
  throw std::logic_error("evaluate_character: unknown specialization");
}

std::string to_string(const CharValue& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

MultiPoly theta_j(int j, int i, int a) {
  if (i < 1) throw std::invalid_argument("theta_j: i must be positive");
  if (j < 1 || j > 2 * i) throw std::invalid_argument("theta_j: j must lie in 1..2i");
  const auto m = static_cast<std::size_t>(i);
  const MultiPoly weight = pow(MultiPoly::one_minus_q(), static_cast<unsigned>(j - 1));
  MultiPolyBuilder sum(0);
  for (const auto& p : list_graded_pairs(a, ones(m), ones(m))) {
    if (p.last_component != i || p.total_length != j) continue;
    sum.add(weight * minus_q_power(p.beta_size - p.beta_length, 0));
  }
  return std::move(sum).build();
}

MultiPoly theta1_closed_form(int a) {
  if (a < 1) throw std::invalid_argument("theta1_closed_form: a must be positive");
  return MultiPoly::constant(1) + minus_q_power(a - 1, 0);
}

MultiPoly theta2_closed_form(int i, int a) {
  if (a < 1 || i < 1) throw std::invalid_argument("theta2_closed_form: i and a must be positive");
  if (a == 1) return MultiPoly();
  MultiPoly inner = (MultiPoly::constant(1) + minus_q_power(a - 2, 0)) * Integer((i - 1) * (a - 1));
  inner += bracket(a - 1) * Integer(2 * i - 1);
  return MultiPoly::one_minus_q() * inner;
}

MultiPoly coef(int a, int i) {
  MultiPoly sum;
  for (int j = 1; j <= 2 * i; ++j) sum += theta_j(j, i, a);
  return sum;
}

MultiPoly coef_linear_form(int a, int i) {
  if (a < 1 || i < 1) throw std::invalid_argument("coef_linear_form: i and a must be positive");
  return bracket(a) * Integer(2) + MultiPoly::one_minus_q() * bracket(a - 1) * Integer(2 * a * (i - 1));
}

TruncSeries hook_sum_rhs(const MultiPartition& mu, std::size_t order) {
  const std::size_t m = mu.num_components();
  if (m == 0) throw std::invalid_argument("hook_sum_rhs: empty multipartition tuple");
  const MultiPoly one_minus_q = MultiPoly::one_minus_q(m);
  MultiPoly value = MultiPoly::constant(Integer(1) << static_cast<mp_bitcnt_t>(mu.length()), m);
  for (std::size_t r = 1; r <= m; ++r) {
    for (int x : mu[r].parts()) {
      MultiPoly factor(m);
      for (std::size_t i = 1; i <= m; ++i) {
        MultiPoly c = bracket(x, BracketSign::kMinusQ, m) +
                      one_minus_q * bracket(x - 1, BracketSign::kMinusQ, m) * Integer(x * static_cast<int>(i - 1));
        factor += c * MultiPoly::u_power(i, static_cast<int>(r - 1), m);
      }
      value *= factor;
    }
  }
  return expand_at_q1(value, order);
}

Integer wreath_hook_value(const MultiPartition& mu) {
  const std::size_t m = mu.num_components();
  if (m == 0) throw std::invalid_argument("wreath_hook_value: empty multipartition tuple");
  for (std::size_t r = 2; r <= m; ++r) {
    if (!mu[r].empty()) return 0;
  }
  for (int part : mu[1].parts()) {
    if (part % 2 == 0) return 0;
  }
  Integer value;
  mpz_ui_pow_ui(value.get_mpz_t(), 2 * m, mu[1].length());
  return value;
}

PairRegevValue pair_regev_rhs(const MultiPartition& mu, std::size_t order) {
  if (mu.num_components() != 2) throw DimensionMismatch("pair_regev_rhs: needs a pair of partitions");
  if (mu.size() < 1) throw std::invalid_argument("pair_regev_rhs: |mu| must be positive");
  const MultiPoly one_minus_q = MultiPoly::one_minus_q(1);
  const MultiPoly u = MultiPoly::u_power(1, 1, 1);
  const auto len = static_cast<mp_bitcnt_t>(mu.length());
  MultiPoly value = MultiPoly::constant(Integer(1) << (len - 1), 1);
  for (int x : mu[1].parts()) {
    value *= bracket(x, BracketSign::kMinusQ, 1) + one_minus_q * bracket(x - 1, BracketSign::kMinusQ, 1) * Integer(x);
  }
  for (int x : mu[2].parts()) {
    value *= bracket(x, BracketSign::kMinusQ, 1) +
             one_minus_q * bracket(x - 1, BracketSign::kMinusQ, 1) * u * Integer(x);
  }
  PairRegevValue out{expand_at_q1(value, order), 0};
  bool odd = mu[2].empty();
  for (int part : mu[1].parts()) odd = odd && part % 2 == 1;
  if (odd) out.group_value = Integer(1) << (2 * len - 1);
  return out;
}

}  // namespace akchar
