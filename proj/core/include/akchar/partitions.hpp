#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace akchar {

/// Weakly decreasing sequence of positive integers. The empty partition is allowed.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument if parts are not positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  /// lambda_i with i 1-based; zero past the end.
  int part(std::size_t i) const noexcept { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
  /// Column lengths.
  Partition conjugate() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// m-tuple of partitions; component order is significant.
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> components);
  /// From raw part lists; each component must be a valid partition.
  static MultiPartition from_parts(const std::vector<std::vector<int>>& parts);

  std::size_t num_components() const noexcept { return comps_.size(); }
  const std::vector<Partition>& components() const noexcept { return comps_; }
  /// Component r with r 1-based.
  const Partition& operator[](std::size_t r) const { return comps_.at(r - 1); }
  int size() const noexcept { return size_; }
  /// Total number of parts over all components.
  std::size_t length() const noexcept;
  /// Number of nonempty components.
  std::size_t num_nonzero() const noexcept;

  /// `[[3,1],[],[2]]`.
  std::string to_string() const;
  /// Parses the JSON array-of-arrays form; throws ParseError.
  static MultiPartition parse(std::string_view text);

  auto operator<=>(const MultiPartition&) const = default;

 private:
  std::vector<Partition> comps_;
  int size_ = 0;
};

/// All partitions of n, in decreasing lexicographic order ((n) first).
std::vector<Partition> list_partitions(int n);

/// All m-multipartitions of n. Size vectors (|l1|, ..., |lm|) run in decreasing
/// lexicographic order and within each, components run in list_partitions order.
std::vector<MultiPartition> list_multipartitions(std::size_t m, int n);

/// m-tuple of compositions with strictly positive parts.
using MultiComposition = std::vector<std::vector<int>>;

/// Element (alpha; beta) of C(a; k|l) with its statistics precomputed.
struct GradedPair {
  MultiComposition alpha;
  MultiComposition beta;

  /// Number of nonzero parts of alpha and beta together.
  int total_length = 0;
  /// Largest component index i (1-based) with alpha^(i) or beta^(i) nonempty.
  int last_component = 0;
  /// |beta|.
  int beta_size = 0;
  /// l(beta).
  int beta_length = 0;

  bool operator==(const GradedPair& other) const {
    return alpha == other.alpha && beta == other.beta;
  }
};

struct PairStats {
  int total_length;
  int last_component;
  int beta_size;
  int beta_length;

  bool operator==(const PairStats&) const = default;
};

/// Builds a GradedPair from its two multicompositions and fills in the statistics.
/// Throws std::invalid_argument on zero parts, unequal arity or empty pairs.
GradedPair make_graded_pair(MultiComposition alpha, MultiComposition beta);

PairStats pair_stats(const GradedPair& p);

/// C(a; k|l): pairs of m-multicompositions with |alpha| + |beta| = a,
/// l(alpha^(i)) <= k_i and l(beta^(i)) <= l_i.
std::vector<GradedPair> list_graded_pairs(int a, const std::vector<int>& k, const std::vector<int>& l);

/// Compositions of a into at most max_len positive parts, lexicographically decreasing.
std::vector<std::vector<int>> list_compositions(int a, int max_len);

}  // namespace akchar
