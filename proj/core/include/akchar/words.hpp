#pragma once

#include <string>
#include <vector>

#include "akchar/partitions.hpp"

namespace akchar {

/// One letter of a generator word.
///   kGroup: s_index, 0 <= index < n
///   kBraid: g_index, 1 <= index <= n-1
///   kXi:    xi_index^power, 1 <= index <= n, power >= 1
struct GeneratorSymbol {
  enum class Kind { kGroup, kBraid, kXi };

  Kind kind;
  int index;
  int power = 1;

  static GeneratorSymbol s(int i) { return {Kind::kGroup, i, 1}; }
  static GeneratorSymbol g(int i) { return {Kind::kBraid, i, 1}; }
  static GeneratorSymbol xi(int j, int e) { return {Kind::kXi, j, e}; }

  bool operator==(const GeneratorSymbol&) const = default;
  std::string to_string() const;
};

/// Word in the generators of W_{m,n} (s-symbols) or of H_n(u,q) (g/xi symbols),
/// read left to right as an algebra product.
struct GeneratorWord {
  int n = 0;
  std::vector<GeneratorSymbol> symbols;

  bool operator==(const GeneratorWord&) const = default;
  /// Throws std::invalid_argument when an index is out of range for n.
  void validate() const;
  std::string to_string() const;
};

/// Block layout shared by both standard elements: blocks run left to right in
/// the order mu^(1)_1, mu^(1)_2, ..., mu^(m)_last.
struct Block {
  int color;  ///< r, 1-based
  int start;  ///< positions start+1 .. start+size
  int size;
};
std::vector<Block> standard_blocks(const MultiPartition& mu);

/// w_mu: per block, t_{b+a}^{r-1} s_{b+a-1} ... s_{b+1}, with
/// t_c = s_{c-1} ... s_1 s_0 s_1 ... s_{c-1}.
GeneratorWord word_group(const MultiPartition& mu);

/// g_mu: per block, xi_{b+a}^{r-1} g_{b+a-1} ... g_{b+1}. Only braid generators
/// strictly interior to a block occur.
GeneratorWord word_hecke(const MultiPartition& mu);

}  // namespace akchar
