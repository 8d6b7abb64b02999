#include "akchar/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

#include "akchar/errors.hpp"

namespace akchar {

namespace {

void check_bounds(const std::vector<int>& k, const std::vector<int>& l, std::size_t m) {
  if (k.size() != l.size() || k.size() != m) {
    throw DimensionMismatch("hook bounds must have one entry per component");
  }
}

// Row-major backtracking filler. Letters 0..k-1 are x's, k..k+l-1 are y's.
class SemistandardCounter {
 public:
  SemistandardCounter(const Partition& shape, int k, int l)
      : rows_(shape.parts()), k_(k), alphabet_(k + l) {
    for (int r : rows_) cells_ += r;
    grid_.resize(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) grid_[i].assign(static_cast<std::size_t>(rows_[i]), -1);
  }

  Integer count() {
    total_ = 0;
    if (cells_ == 0) return 1;
    if (alphabet_ == 0) return 0;
    fill(0, 0);
    return total_;
  }

 private:
  bool is_x(int letter) const { return letter < k_; }

  bool admissible(std::size_t r, std::size_t c, int letter) const {
    if (c > 0) {
      const int left = grid_[r][c - 1];
      if (letter < left) return false;
      if (letter == left && !is_x(letter)) return false;  // y strict along rows
    }
    if (r > 0) {
      const int up = grid_[r - 1][c];
      if (letter < up) return false;
      if (letter == up && is_x(letter)) return false;  // x strict down columns
    }
    return true;
  }

  void fill(std::size_t r, std::size_t c) {
    if (c == grid_[r].size()) {
      ++r;
      c = 0;
      if (r == grid_.size()) {
        ++total_;
        return;
      }
    }
    int lo = 0;
    if (c > 0) lo = grid_[r][c - 1];
    if (r > 0) lo = std::max(lo, grid_[r - 1][c]);
    for (int letter = lo; letter < alphabet_; ++letter) {
      if (!admissible(r, c, letter)) continue;
      grid_[r][c] = letter;
      fill(r, c + 1);
    }
    grid_[r][c] = -1;
  }

  std::vector<int> rows_;
  int k_;
  int alphabet_;
  int cells_ = 0;
  std::vector<std::vector<int>> grid_;
  Integer total_;
};

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

bool is_hook_partition(const Partition& lambda, int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("is_hook_partition: negative bound");
  return lambda.part(static_cast<std::size_t>(k) + 1) <= l;
}

std::vector<MultiPartition> list_hook_multipartitions(int n, const std::vector<int>& k,
                                                      const std::vector<int>& l) {
  if (k.empty()) throw std::invalid_argument("list_hook_multipartitions: m must be positive");
  check_bounds(k, l, k.size());
  std::vector<MultiPartition> out;
  for (auto& lambda : list_multipartitions(k.size(), n)) {
    bool hook = true;
    for (std::size_t i = 0; i < k.size() && hook; ++i) hook = is_hook_partition(lambda[i + 1], k[i], l[i]);
    if (hook) out.push_back(std::move(lambda));
  }
  return out;
}

Integer count_semistandard(const Partition& lambda, int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("count_semistandard: negative bound");
  return SemistandardCounter(lambda, k, l).count();
}

Integer count_semistandard(const MultiPartition& lambda, const std::vector<int>& k,
                           const std::vector<int>& l) {
  check_bounds(k, l, lambda.num_components());
  Integer total = 1;
  for (std::size_t i = 0; i < k.size() && total != 0; ++i) {
    total *= count_semistandard(lambda[i + 1], k[i], l[i]);
  }
  return total;
}

Integer count_standard_tableaux(const Partition& lambda) {
  const Partition cols = lambda.conjugate();
  Integer hooks = 1;
  for (std::size_t i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      const int arm = lambda.part(i) - j;
      const int leg = cols.part(static_cast<std::size_t>(j)) - static_cast<int>(i);
      hooks *= arm + leg + 1;
    }
  }
  return factorial(static_cast<unsigned long>(lambda.size())) / hooks;
}

Integer count_standard_multitableaux(const MultiPartition& lambda) {
  Integer result = factorial(static_cast<unsigned long>(lambda.size()));
  for (const auto& comp : lambda.components()) {
    result /= factorial(static_cast<unsigned long>(comp.size()));
    result *= count_standard_tableaux(comp);
  }
  return result;
}

}  // namespace akchar
