#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "akchar/cyclotomic.hpp"
#include "akchar/multipoly.hpp"
#include "akchar/partitions.hpp"
#include "akchar/words.hpp"

namespace akchar {

/// Homogeneous basis v_1 < ... < v_{k+l} of V = V^(1) + ... + V^(m).
/// Within colour i the k_i even letters precede the l_i odd ones.
/// Letters are 0-based here; text output uses 1-based letters.
class GradedAlphabet {
 public:
  GradedAlphabet(std::vector<int> k, std::vector<int> l);

  std::size_t num_colors() const noexcept { return k_.size(); }
  const std::vector<int>& k() const noexcept { return k_; }
  const std::vector<int>& l() const noexcept { return l_; }
  /// k + l.
  int size() const noexcept { return static_cast<int>(color_.size()); }
  /// Colour of a letter, 1-based.
  int color(int letter) const { return color_.at(static_cast<std::size_t>(letter)); }
  /// 0 (even) or 1 (odd).
  int parity(int letter) const { return parity_.at(static_cast<std::size_t>(letter)); }
  /// d_i = sum_{j <= i} (k_j + l_j), i 1-based; d_0 = 0.
  int block_offset(std::size_t i) const;

 private:
  std::vector<int> k_;
  std::vector<int> l_;
  std::vector<int> color_;
  std::vector<int> parity_;
};

using BasisWord = std::vector<std::uint8_t>;

/// Sparse vector in V^{tensor n}: basis words with nonzero MultiPoly coefficients.
class TensorState {
 public:
  TensorState(int n, std::size_t num_u) : n_(n), num_u_(num_u) {}
  static TensorState basis(const BasisWord& w, std::size_t num_u);

  int n() const noexcept { return n_; }
  std::size_t num_u() const noexcept { return num_u_; }
  const std::map<BasisWord, MultiPoly>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  MultiPoly coeff(const BasisWord& w) const;

  void add(const BasisWord& w, const MultiPoly& c);
  TensorState& operator+=(const TensorState& rhs);
  TensorState& operator*=(const MultiPoly& c);
  bool operator==(const TensorState& rhs) const = default;

 private:
  int n_;
  std::size_t num_u_;
  std::map<BasisWord, MultiPoly> terms_;
};

/// Operator on V^{tensor n}.
///   kT, kTinv, kS: act on tensor positions (index, index+1), 1 <= index <= n-1
///   kOmega: omega_index^power, 1 <= index <= n, power >= 0
///   kT0: T_1^-1 ... T_{n-1}^-1 S_{n-1} ... S_1 omega_1
struct OperatorSymbol {
  enum class Kind { kT, kTinv, kS, kOmega, kT0 };

  Kind kind;
  int index = 0;
  int power = 1;

  static OperatorSymbol T(int i) { return {Kind::kT, i, 1}; }
  static OperatorSymbol Tinv(int i) { return {Kind::kTinv, i, 1}; }
  static OperatorSymbol S(int i) { return {Kind::kS, i, 1}; }
  static OperatorSymbol omega(int j, int e = 1) { return {Kind::kOmega, j, e}; }
  static OperatorSymbol T0() { return {Kind::kT0, 0, 1}; }

  bool operator==(const OperatorSymbol&) const = default;
  std::string to_string() const;
};

/// Product of operators; the rightmost symbol acts first.
using OperatorWord = std::vector<OperatorSymbol>;

/// The permutation super representation of H_n(u,q) on V^{tensor n}.
///
/// On V^{tensor 2}, with s = (-1)^{parity(a) parity(b)}:
///   T(a,b) = (1-q)(a,b) + s(b,a)   a < b
///   T(a,a) = (a,a) if a even, -q(a,a) if a odd
///   T(a,b) = s q (b,a)             a > b
/// S agrees with T on equal colours and is the bare swap s(b,a) (times q when
/// a > b) on distinct colours. T^-1 = (T - (1-q)) / q. omega scales a letter
/// by u_{colour}.
class SuperRep {
 public:
  SuperRep(GradedAlphabet alphabet, int n);

  const GradedAlphabet& alphabet() const noexcept { return alphabet_; }
  int n() const noexcept { return n_; }
  std::size_t num_u() const noexcept { return alphabet_.num_colors(); }
  /// (k+l)^n.
  std::size_t dimension() const noexcept { return dimension_; }
  /// The i-th basis word in lexicographic order, 0 <= i < dimension().
  BasisWord basis_word(std::size_t i) const;

  /// Throws std::invalid_argument on an out-of-range index.
  TensorState apply(const OperatorSymbol& sym, const TensorState& state) const;
  TensorState apply(const OperatorWord& word, const TensorState& state) const;

  /// Sum over basis words of the diagonal coefficient; basis words are split
  /// into `jobs` contiguous chunks whose partial sums are added in order.
  MultiPoly trace(const OperatorWord& word, unsigned jobs = 1) const;

 private:
  struct LocalTerm {
    std::uint8_t first;
    std::uint8_t second;
    MultiPoly coeff;
  };
  using LocalTable = std::vector<std::vector<LocalTerm>>;  // indexed by a * d + b

  TensorState apply_local(const LocalTable& table, int pos, const TensorState& state) const;
  TensorState apply_omega(int pos, int power, const TensorState& state) const;
  void check_position(const OperatorSymbol& sym) const;

  GradedAlphabet alphabet_;
  int n_;
  std::size_t dimension_;
  LocalTable t_table_;
  LocalTable tinv_table_;
  LocalTable s_table_;
};

/// Maps g(i) -> T_i and xi(j,e) -> omega_j^e; group symbols are rejected.
OperatorWord hecke_operators(const GeneratorWord& word);

/// Trace of a Hecke generator word on V^{tensor n}.
MultiPoly trace_of_word(const GeneratorWord& word, const GradedAlphabet& alphabet, unsigned jobs = 1);

/// chi_{k|l;n}(g_mu) computed as the literal trace of word_hecke(mu).
MultiPoly char_value_oracle(const MultiPartition& mu, const std::vector<int>& k,
                            const std::vector<int>& l, unsigned jobs = 1);

/// Trace of a Hecke generator word at q = 1, u_i = zeta^{i-1}. There every
/// operator is monomial (T_i is the signed swap), so each basis word maps to a
/// single word and the sum runs over all (k+l)^n basis words.
CycloElem group_trace_of_word(const GeneratorWord& word, const GradedAlphabet& alphabet);

/// Memoises group_trace_of_word per block (colour, size) for one alphabet.
class GroupOracle {
 public:
  GroupOracle(const std::vector<int>& k, const std::vector<int>& l);
  CycloElem value(const MultiPartition& mu);

 private:
  GradedAlphabet alphabet_;
  std::map<std::pair<int, int>, CycloElem> cache_;
};

/// specialize_to_group(char_value_oracle(mu, k, l)) computed as the product of
/// group_trace_of_word over the blocks of g_mu, each on its own V^{tensor a}.
CycloElem group_char_value_oracle(const MultiPartition& mu, const std::vector<int>& k,
                                  const std::vector<int>& l);

/// Letters rendered 1-based, e.g. `[1,3]`.
std::string basis_word_to_string(const BasisWord& w);

}  // namespace akchar
