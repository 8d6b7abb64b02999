#pragma once

#include <vector>

#include "akchar/multipoly.hpp"
#include "akchar/partitions.hpp"

namespace akchar {

/// lambda_{k+1} <= l.
bool is_hook_partition(const Partition& lambda, int k, int l);

/// H(k|l; n): multipartitions whose i-th component is a (k_i, l_i)-hook partition,
/// in list_multipartitions order.
std::vector<MultiPartition> list_hook_multipartitions(int n, const std::vector<int>& k,
                                                      const std::vector<int>& l);

/// Number of (k|l)-semistandard fillings of one partition: letters x_1 < ... < x_k
/// < y_1 < ... < y_l, x-cells weak along rows and strict down columns, y-cells
/// strict along rows and weak down columns. Exhaustive backtracking.
Integer count_semistandard(const Partition& lambda, int k, int l);

/// s_{k|l}(lambda) = product over components of count_semistandard.
Integer count_semistandard(const MultiPartition& lambda, const std::vector<int>& k,
                           const std::vector<int>& l);

/// f^lambda for a single partition by the hook-length formula.
Integer count_standard_tableaux(const Partition& lambda);

/// Number of standard Young multitableaux:
/// multinomial(n; |l1|, ..., |lm|) * prod f^{l_i}.
Integer count_standard_multitableaux(const MultiPartition& lambda);

}  // namespace akchar
