#include "akchar/superrep.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <stdexcept>

#include "akchar/errors.hpp"
#include "akchar/parallel.hpp"

namespace akchar {

GradedAlphabet::GradedAlphabet(std::vector<int> k, std::vector<int> l) : k_(std::move(k)), l_(std::move(l)) {
  if (k_.size() != l_.size()) throw DimensionMismatch("GradedAlphabet: k and l differ in length");
  if (k_.empty()) throw std::invalid_argument("GradedAlphabet: need at least one colour");
  for (std::size_t i = 0; i < k_.size(); ++i) {
    if (k_[i] < 0 || l_[i] < 0) throw std::invalid_argument("GradedAlphabet: negative dimension");
    for (int a = 0; a < k_[i]; ++a) {
      color_.push_back(static_cast<int>(i) + 1);
      parity_.push_back(0);
    }
    for (int b = 0; b < l_[i]; ++b) {
      color_.push_back(static_cast<int>(i) + 1);
      parity_.push_back(1);
    }
  }
  if (color_.empty()) throw std::invalid_argument("GradedAlphabet: V must be nonzero");
  if (color_.size() > 255) throw std::invalid_argument("GradedAlphabet: too many letters");
}

int GradedAlphabet::block_offset(std::size_t i) const {
  if (i > k_.size()) throw std::out_of_range("GradedAlphabet::block_offset");
  int d = 0;
  for (std::size_t j = 0; j < i; ++j) d += k_[j] + l_[j];
  return d;
}

TensorState TensorState::basis(const BasisWord& w, std::size_t num_u) {
  TensorState s(static_cast<int>(w.size()), num_u);
  s.terms_.emplace(w, MultiPoly::constant(1, num_u));
  return s;
}

MultiPoly TensorState::coeff(const BasisWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? MultiPoly(num_u_) : it->second;
}

void TensorState::add(const BasisWord& w, const MultiPoly& c) {
  if (static_cast<int>(w.size()) != n_) throw DimensionMismatch("TensorState: word has wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorState& TensorState::operator+=(const TensorState& rhs) {
  if (n_ != rhs.n_ || num_u_ != rhs.num_u_) throw DimensionMismatch("TensorState: incompatible states");
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

TensorState& TensorState::operator*=(const MultiPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

std::string OperatorSymbol::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kT:
      os << "T" << index;
      break;
    case Kind::kTinv:
      os << "Tinv" << index;
      break;
    case Kind::kS:
      os << "S" << index;
      break;
    case Kind::kOmega:
      os << "omega" << index << '^' << power;
      break;
    case Kind::kT0:
      os << "T0";
      break;
  }
  return os.str();
}

SuperRep::SuperRep(GradedAlphabet alphabet, int n) : alphabet_(std::move(alphabet)), n_(n) {
  if (n < 1) throw std::invalid_argument("SuperRep: n must be positive");
  const auto d = static_cast<std::size_t>(alphabet_.size());
  dimension_ = 1;
  for (int i = 0; i < n; ++i) dimension_ *= d;

  const std::size_t m = alphabet_.num_colors();
  const MultiPoly one = MultiPoly::constant(1, m);
  const MultiPoly q = MultiPoly::q_power(1, m);
  const MultiPoly qinv = MultiPoly::q_power(-1, m);
  const MultiPoly one_minus_q = one - q;

  t_table_.assign(d * d, {});
  tinv_table_.assign(d * d, {});
  s_table_.assign(d * d, {});
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const auto ua = static_cast<std::uint8_t>(a);
      const auto ub = static_cast<std::uint8_t>(b);
      const int pa = alphabet_.parity(static_cast<int>(a));
      const int pb = alphabet_.parity(static_cast<int>(b));
      const Integer sign = (pa && pb) ? -1 : 1;
      auto& t = t_table_[a * d + b];
      auto& ti = tinv_table_[a * d + b];
      if (a == b) {
        t.push_back({ua, ua, pa ? MultiPoly(-q) : one});
        ti.push_back({ua, ua, pa ? MultiPoly(-qinv) : one});
      } else if (a < b) {
        t.push_back({ua, ub, one_minus_q});
        t.push_back({ub, ua, sign * one});
        ti.push_back({ub, ua, sign * qinv});
      } else {
        t.push_back({ub, ua, sign * q});
        ti.push_back({ua, ub, one - qinv});
        ti.push_back({ub, ua, sign * one});
      }
      if (alphabet_.color(static_cast<int>(a)) == alphabet_.color(static_cast<int>(b))) {
        s_table_[a * d + b] = t;
      } else {
        s_table_[a * d + b].push_back({ub, ua, a < b ? sign * one : sign * q});
      }
    }
  }
}

BasisWord SuperRep::basis_word(std::size_t i) const {
  const auto d = static_cast<std::size_t>(alphabet_.size());
  BasisWord w(static_cast<std::size_t>(n_));
  for (std::size_t pos = w.size(); pos-- > 0;) {
    w[pos] = static_cast<std::uint8_t>(i % d);
    i /= d;
  }
  return w;
}

void SuperRep::check_position(const OperatorSymbol& sym) const {
  bool ok = true;
  switch (sym.kind) {
    case OperatorSymbol::Kind::kT:
    case OperatorSymbol::Kind::kTinv:
    case OperatorSymbol::Kind::kS:
      ok = sym.index >= 1 && sym.index <= n_ - 1;
      break;
    case OperatorSymbol::Kind::kOmega:
      ok = sym.index >= 1 && sym.index <= n_ && sym.power >= 0;
      break;
    case OperatorSymbol::Kind::kT0:
      break;
  }
  if (!ok) {
    throw std::invalid_argument("SuperRep: " + sym.to_string() + " out of range for n=" + std::to_string(n_));
  }
}

TensorState SuperRep::apply_local(const LocalTable& table, int pos, const TensorState& state) const {
  const auto d = static_cast<std::size_t>(alphabet_.size());
  const auto i = static_cast<std::size_t>(pos - 1);
  TensorState out(n_, num_u());
  BasisWord w;
  for (const auto& [word, c] : state.terms()) {
    for (const auto& term : table[word[i] * d + word[i + 1]]) {
      w = word;
      w[i] = term.first;
      w[i + 1] = term.second;
      out.add(w, c * term.coeff);
    }
  }
  return out;
}

TensorState SuperRep::apply_omega(int pos, int power, const TensorState& state) const {
  if (power == 0) return state;
  const std::size_t m = num_u();
  TensorState out(n_, m);
  std::vector<int> eu(m, 0);
  for (const auto& [word, c] : state.terms()) {
    const int color = alphabet_.color(word[static_cast<std::size_t>(pos - 1)]);
    eu.assign(m, 0);
    eu[static_cast<std::size_t>(color - 1)] = power;
    out.add(word, c.times_monomial(1, 0, eu));
  }
  return out;
}

TensorState SuperRep::apply(const OperatorSymbol& sym, const TensorState& state) const {
  check_position(sym);
  if (state.n() != n_ || state.num_u() != num_u()) throw DimensionMismatch("SuperRep: state has wrong shape");
  switch (sym.kind) {
    case OperatorSymbol::Kind::kT:
      return apply_local(t_table_, sym.index, state);
    case OperatorSymbol::Kind::kTinv:
      return apply_local(tinv_table_, sym.index, state);
    case OperatorSymbol::Kind::kS:
      return apply_local(s_table_, sym.index, state);
    case OperatorSymbol::Kind::kOmega:
      return apply_omega(sym.index, sym.power, state);
    case OperatorSymbol::Kind::kT0: {
      TensorState s = apply_omega(1, 1, state);
      for (int i = 1; i <= n_ - 1; ++i) s = apply_local(s_table_, i, s);
      for (int i = n_ - 1; i >= 1; --i) s = apply_local(tinv_table_, i, s);
      return s;
    }
  }
  throw std::logic_error("SuperRep::apply: unknown operator");
}

TensorState SuperRep::apply(const OperatorWord& word, const TensorState& state) const {
  TensorState s = state;
  for (auto it = word.rbegin(); it != word.rend(); ++it) s = apply(*it, s);
  return s;
}

MultiPoly SuperRep::trace(const OperatorWord& word, unsigned jobs) const {
  for (const auto& sym : word) check_position(sym);
  const std::size_t chunks = std::max<std::size_t>(1, jobs);
  const std::size_t per_chunk = (dimension_ + chunks - 1) / chunks;
  auto partials = parallel_map(chunks, jobs, [&](std::size_t c) {
    MultiPoly acc(num_u());
    const std::size_t begin = c * per_chunk;
    const std::size_t end = std::min(dimension_, begin + per_chunk);
    for (std::size_t i = begin; i < end; ++i) {
      const BasisWord w = basis_word(i);
      acc += apply(word, TensorState::basis(w, num_u())).coeff(w);
    }
    return acc;
  });
  MultiPoly total(num_u());
  for (const auto& p : partials) total += p;
  return total;
}

OperatorWord hecke_operators(const GeneratorWord& word) {
  word.validate();
  OperatorWord ops;
  ops.reserve(word.symbols.size());
  for (const auto& sym : word.symbols) {
    switch (sym.kind) {
      case GeneratorSymbol::Kind::kBraid:
        ops.push_back(OperatorSymbol::T(sym.index));
        break;
      case GeneratorSymbol::Kind::kXi:
        ops.push_back(OperatorSymbol::omega(sym.index, sym.power));
        break;
      case GeneratorSymbol::Kind::kGroup:
        throw std::invalid_argument("hecke_operators: group symbol " + sym.to_string() +
                                    " has no Hecke operator; specialise a Hecke trace instead");
    }
  }
  return ops;
}

MultiPoly trace_of_word(const GeneratorWord& word, const GradedAlphabet& alphabet, unsigned jobs) {
  if (word.n < 1) throw std::invalid_argument("trace_of_word: n must be positive");
  return SuperRep(alphabet, word.n).trace(hecke_operators(word), jobs);
}

MultiPoly char_value_oracle(const MultiPartition& mu, const std::vector<int>& k, const std::vector<int>& l,
                            unsigned jobs) {
  if (mu.num_components() != k.size()) {
    throw DimensionMismatch("char_value_oracle: multipartition arity differs from m");
  }
  if (mu.size() < 1) throw std::invalid_argument("char_value_oracle: |mu| must be positive");
  return trace_of_word(word_hecke(mu), GradedAlphabet(k, l), jobs);
}

CycloElem group_trace_of_word(const GeneratorWord& word, const GradedAlphabet& alphabet) {
  word.validate();
  if (word.n < 1) throw std::invalid_argument("group_trace_of_word: n must be positive");
  for (const auto& sym : word.symbols) {
    if (sym.kind == GeneratorSymbol::Kind::kGroup) {
      throw std::invalid_argument("group_trace_of_word: group symbol " + sym.to_string() + " not allowed");
    }
  }
  const auto m = static_cast<unsigned>(alphabet.num_colors());
  const auto d = static_cast<std::size_t>(alphabet.size());
  const auto n = static_cast<std::size_t>(word.n);
  std::vector<long> counts(m, 0);
  std::vector<std::uint8_t> w(n, 0);
  std::vector<std::uint8_t> image(n);
  while (true) {
    image = w;
    int sign = 1;
    long exponent = 0;
    for (auto it = word.symbols.rbegin(); it != word.symbols.rend(); ++it) {
      if (it->kind == GeneratorSymbol::Kind::kBraid) {
        auto& a = image[static_cast<std::size_t>(it->index - 1)];
        auto& b = image[static_cast<std::size_t>(it->index)];
        if (alphabet.parity(a) && alphabet.parity(b)) sign = -sign;
        std::swap(a, b);
      } else {
        exponent += static_cast<long>(it->power) * (alphabet.color(image[static_cast<std::size_t>(it->index - 1)]) - 1);
      }
    }
    if (image == w) counts[static_cast<std::size_t>(exponent % m)] += sign;
    std::size_t pos = n;
    while (pos > 0 && ++w[pos - 1] == d) w[--pos] = 0;
    if (pos == 0) break;
  }
  CycloElem total(m);
  for (unsigned e = 0; e < m; ++e) total += CycloElem::root_power(m, e) * Integer(counts[e]);
  return total;
}

GroupOracle::GroupOracle(const std::vector<int>& k, const std::vector<int>& l) : alphabet_(k, l) {}

CycloElem GroupOracle::value(const MultiPartition& mu) {
  const std::size_t m = alphabet_.num_colors();
  if (mu.num_components() != m) throw DimensionMismatch("GroupOracle: multipartition arity differs from m");
  if (mu.size() < 1) throw std::invalid_argument("GroupOracle: |mu| must be positive");
  CycloElem value = CycloElem::from_integer(static_cast<unsigned>(m), 1);
  for (const auto& block : standard_blocks(mu)) {
    const auto key = std::make_pair(block.color, block.size);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      std::vector<std::vector<int>> parts(m);
      parts[static_cast<std::size_t>(block.color - 1)] = {block.size};
      const GeneratorWord word = word_hecke(MultiPartition::from_parts(parts));
      it = cache_.emplace(key, group_trace_of_word(word, alphabet_)).first;
    }
    value *= it->second;
  }
  return value;
}

CycloElem group_char_value_oracle(const MultiPartition& mu, const std::vector<int>& k, const std::vector<int>& l) {
  return GroupOracle(k, l).value(mu);
}

std::string basis_word_to_string(const BasisWord& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << static_cast<int>(w[i]) + 1;
  }
  os << ']';
  return os.str();
}

}  // namespace akchar
