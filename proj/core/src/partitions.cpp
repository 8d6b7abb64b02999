#include "akchar/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "akchar/errors.hpp"

namespace akchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
      for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    }
  }
  return Partition(std::move(cols));
}

MultiPartition::MultiPartition(std::vector<Partition> components) : comps_(std::move(components)) {
  for (const auto& c : comps_) size_ += c.size();
}

MultiPartition MultiPartition::from_parts(const std::vector<std::vector<int>>& parts) {
  std::vector<Partition> comps;
  comps.reserve(parts.size());
  for (const auto& p : parts) comps.emplace_back(p);
  return MultiPartition(std::move(comps));
}

std::size_t MultiPartition::length() const noexcept {
  std::size_t n = 0;
  for (const auto& c : comps_) n += c.length();
  return n;
}

std::size_t MultiPartition::num_nonzero() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(comps_.begin(), comps_.end(), [](const Partition& p) { return !p.empty(); }));
}

std::string MultiPartition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < comps_.size(); ++r) {
    if (r) os << ',';
    os << '[';
    const auto& parts = comps_[r].parts();
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j) os << ',';
      os << parts[j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

MultiPartition MultiPartition::parse(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("multipartition: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw ParseError("multipartition: expected a non-empty array of arrays");
  std::vector<std::vector<int>> parts;
  for (const auto& comp : j) {
    if (!comp.is_array()) throw ParseError("multipartition: each component must be an array");
    std::vector<int> ps;
    for (const auto& x : comp) {
      if (!x.is_number_integer()) throw ParseError("multipartition: parts must be integers");
      ps.push_back(x.get<int>());
    }
    parts.push_back(std::move(ps));
  }
  try {
    return from_parts(parts);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("multipartition: ") + e.what());
  }
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void size_vectors_rec(std::size_t slot, std::size_t m, int remaining, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (slot + 1 == m) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int s = remaining; s >= 0; --s) {
    cur.push_back(s);
    size_vectors_rec(slot + 1, m, remaining - s, cur, out);
    cur.pop_back();
  }
}

void compositions_rec(int remaining, int slots_left, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (slots_left == 0) return;
  for (int p = remaining; p >= 1; --p) {
    cur.push_back(p);
    compositions_rec(remaining - p, slots_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> list_partitions(int n) {
  if (n < 0) throw std::invalid_argument("list_partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<MultiPartition> list_multipartitions(std::size_t m, int n) {
  if (m == 0) throw std::invalid_argument("list_multipartitions: m must be positive");
  if (n < 0) throw std::invalid_argument("list_multipartitions: n must be nonnegative");
  std::vector<std::vector<int>> sizes;
  std::vector<int> cur;
  size_vectors_rec(0, m, n, cur, sizes);

  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n) + 1);
  for (int s = 0; s <= n; ++s) by_size[static_cast<std::size_t>(s)] = list_partitions(s);

  std::vector<MultiPartition> out;
  std::vector<Partition> comps(m);
  for (const auto& sv : sizes) {
    auto fill = [&](auto&& self, std::size_t r) -> void {
      if (r == m) {
        out.emplace_back(comps);
        return;
      }
      for (const auto& p : by_size[static_cast<std::size_t>(sv[r])]) {
        comps[r] = p;
        self(self, r + 1);
      }
    };
    fill(fill, 0);
  }
  return out;
}

std::vector<std::vector<int>> list_compositions(int a, int max_len) {
  std::vector<std::vector<int>> out;
  if (a < 0 || max_len < 0) return out;
  std::vector<int> cur;
  compositions_rec(a, max_len, cur, out);
  return out;
}

GradedPair make_graded_pair(MultiComposition alpha, MultiComposition beta) {
  if (alpha.size() != beta.size() || alpha.empty()) {
    throw std::invalid_argument("GradedPair: alpha and beta must have the same positive arity");
  }
  GradedPair p;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (int x : alpha[i]) {
      if (x <= 0) throw std::invalid_argument("GradedPair: parts must be positive");
    }
    for (int x : beta[i]) {
      if (x <= 0) throw std::invalid_argument("GradedPair: parts must be positive");
      p.beta_size += x;
    }
    const int len = static_cast<int>(alpha[i].size() + beta[i].size());
    p.total_length += len;
    p.beta_length += static_cast<int>(beta[i].size());
    if (len > 0) p.last_component = static_cast<int>(i) + 1;
  }
  if (p.total_length == 0) throw std::invalid_argument("GradedPair: pair must be nonempty");
  p.alpha = std::move(alpha);
  p.beta = std::move(beta);
  return p;
}

PairStats pair_stats(const GradedPair& p) {
  return {p.total_length, p.last_component, p.beta_size, p.beta_length};
}

namespace {

// Slots are ordered alpha^(1), beta^(1), alpha^(2), beta^(2), ...; each slot
// receives a size and then a composition of that size within its length bound.
void graded_rec(std::size_t slot, int remaining, const std::vector<int>& bounds,
                std::vector<std::vector<int>>& chosen, std::vector<GradedPair>& out) {
  if (slot == bounds.size()) {
    if (remaining != 0) return;
    const std::size_t m = bounds.size() / 2;
    MultiComposition alpha(m), beta(m);
    for (std::size_t i = 0; i < m; ++i) {
      alpha[i] = chosen[2 * i];
      beta[i] = chosen[2 * i + 1];
    }
    out.push_back(make_graded_pair(std::move(alpha), std::move(beta)));
    return;
  }
  for (int s = remaining; s >= 0; --s) {
    for (auto& comp : list_compositions(s, bounds[slot])) {
      chosen[slot] = std::move(comp);
      graded_rec(slot + 1, remaining - s, bounds, chosen, out);
    }
  }
  chosen[slot].clear();
}

}  // namespace

std::vector<GradedPair> list_graded_pairs(int a, const std::vector<int>& k, const std::vector<int>& l) {
  if (k.size() != l.size()) throw DimensionMismatch("list_graded_pairs: k and l differ in length");
  if (k.empty()) throw std::invalid_argument("list_graded_pairs: m must be positive");
  if (a < 1) throw std::invalid_argument("list_graded_pairs: a must be positive");
  std::vector<int> bounds;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 0 || l[i] < 0) throw std::invalid_argument("list_graded_pairs: negative bound");
    bounds.push_back(k[i]);
    bounds.push_back(l[i]);
  }
  std::vector<std::vector<int>> chosen(bounds.size());
  std::vector<GradedPair> out;
  graded_rec(0, a, bounds, chosen, out);
  return out;
}

}  // namespace akchar
