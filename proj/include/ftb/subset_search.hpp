#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "ftb/graph.hpp"

namespace ftb {

struct WeightedSet {
  NodeSet nodes;
  double weight = 0.0;
};

/// Enumerates every subset of `pool` in nondecreasing total weight with a
/// best-first heap. Items are sorted by weight; a heap entry ending at sorted
/// position j spawns "append j+1" and "replace j by j+1", which reaches every
/// subset exactly once. Weights must be nonnegative; |pool| <= 63.
class IncreasingWeightSubsets {
 public:
  IncreasingWeightSubsets(NodeSet pool, const std::vector<double>& weight_of) {
    order_ = std::move(pool);
    std::stable_sort(order_.begin(), order_.end(), [&](NodeId a, NodeId b) {
      return weight_of[static_cast<std::size_t>(a)] < weight_of[static_cast<std::size_t>(b)];
    });
    for (NodeId v : order_) w_.push_back(weight_of[static_cast<std::size_t>(v)]);
    heap_.push({0.0, -1, 0});
  }

  std::optional<WeightedSet> next() {
    if (heap_.empty()) return std::nullopt;
    const Entry top = heap_.top();
    heap_.pop();
    const int n = static_cast<int>(order_.size());
    if (top.last + 1 < n) {
      const int j = top.last + 1;
      heap_.push({top.weight + w_[static_cast<std::size_t>(j)], j, top.mask | bit(j)});
      if (top.last >= 0) {
        const double swapped = top.weight - w_[static_cast<std::size_t>(top.last)] + w_[static_cast<std::size_t>(j)];
        heap_.push({swapped, j, (top.mask & ~bit(top.last)) | bit(j)});
      }
    }
    WeightedSet out;
    out.weight = top.weight;
    for (int i = 0; i < n; ++i) {
      if (top.mask & bit(i)) out.nodes.push_back(order_[static_cast<std::size_t>(i)]);
    }
    std::sort(out.nodes.begin(), out.nodes.end());
    return out;
  }

 private:
  struct Entry {
    double weight;
    int last;
    std::uint64_t mask;
    bool operator<(const Entry& o) const {
      if (weight != o.weight) return weight > o.weight;
      return mask > o.mask;
    }
  };
  static std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

  NodeSet order_;
  std::vector<double> w_;
  std::priority_queue<Entry> heap_;
};

/// Minimum-weight set `base u S`, S a subset of `pool`, accepted by `feasible`.
/// Among sets within `tie_tolerance` of the optimum the lexicographically
/// smallest wins.
template <class Feasible>
std::optional<WeightedSet> min_weight_feasible_set(const NodeSet& base, const NodeSet& pool,
                                                   const std::vector<double>& weight_of, Feasible&& feasible,
                                                   double tie_tolerance = 1e-9) {
  IncreasingWeightSubsets subsets(pool, weight_of);
  std::optional<WeightedSet> best;
  double optimum = 0.0;
  while (auto s = subsets.next()) {
    if (best && s->weight > optimum + tie_tolerance) break;
    NodeSet candidate = set_union(base, s->nodes);
    if (!feasible(candidate)) continue;
    if (!best) optimum = s->weight;
    if (!best || candidate < best->nodes) best = WeightedSet{std::move(candidate), s->weight};
  }
  if (best) {
    double total = 0.0;
    for (NodeId v : best->nodes) total += weight_of[static_cast<std::size_t>(v)];
    best->weight = total;
  }
  return best;
}

}  // namespace ftb
