#pragma once

#include <vector>

#include "ftb/graph.hpp"
#include "ftb/udg.hpp"

namespace ftb {

/// Incremental bookkeeping for an m-fold dominating set under construction.
/// residual(v) is 0 for members and max(0, m - |N(v) n D|) otherwise.
class DominationState {
 public:
  DominationState(const Graph& g, int m);

  void add(NodeId v);
  /// Total deficiency removed by adding v: v's own residual plus one for
  /// every non-member neighbour that still has positive residual.
  int gain(NodeId v) const;

  bool member(NodeId v) const { return member_[idx(v)] != 0; }
  int residual(NodeId v) const { return residual_[idx(v)]; }
  int total_deficiency() const { return total_; }
  NodeSet chosen() const;

 private:
  std::size_t idx(NodeId v) const;

  const Graph* g_;
  std::vector<char> member_;
  std::vector<int> residual_;
  int total_ = 0;
};

/// Every node outside D has at least m neighbours in D.
bool is_mfold_ds(const Graph& g, const NodeSet& d, int m);
inline bool is_mfold_ds(const UnitDiskGraph& g, const NodeSet& d, int m) {
  return is_mfold_ds(g.topology(), d, m);
}

/// Nodes of degree < m, which every m-fold dominating set must contain.
NodeSet forced_members(const Graph& g, int m);

/// Weighted greedy: seed with forced members, then repeatedly add the node
/// with the best deficiency-removed / max(weight, 1e-12) ratio (lowest id on
/// ties) until nothing is left uncovered.
NodeSet greedy_mfold_ds(const UnitDiskGraph& g, int m);

/// Minimum-weight m-fold dominating set by enumeration in increasing weight.
/// Throws CapExceededError for more than `node_cap` nodes.
NodeSet exact_mfold_ds(const UnitDiskGraph& g, int m, std::size_t node_cap = 20);

}  // namespace ftb
