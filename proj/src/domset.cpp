#include "ftb/domset.hpp"

#include <algorithm>
#include <string>

#include "ftb/errors.hpp"
#include "ftb/subset_search.hpp"

namespace ftb {

namespace {
constexpr double kWeightFloor = 1e-12;
}

DominationState::DominationState(const Graph& g, int m)
    : g_(&g), member_(g.size(), 0), residual_(g.size(), std::max(0, m)) {
  total_ = static_cast<int>(g.size()) * std::max(0, m);
}

std::size_t DominationState::idx(NodeId v) const {
  const int a = g_->index_of(v);
  if (a < 0) throw ValidationError("unknown node id " + std::to_string(v));
  return static_cast<std::size_t>(a);
}

void DominationState::add(NodeId v) {
  const std::size_t a = idx(v);
  if (member_[a]) return;
  member_[a] = 1;
  total_ -= residual_[a];
  residual_[a] = 0;
  for (int b : g_->local_adjacency(static_cast<int>(a))) {
    const auto bb = static_cast<std::size_t>(b);
    if (!member_[bb] && residual_[bb] > 0) {
      --residual_[bb];
      --total_;
    }
  }
}

int DominationState::gain(NodeId v) const {
  const std::size_t a = idx(v);
  if (member_[a]) return 0;
  int out = residual_[a];
  for (int b : g_->local_adjacency(static_cast<int>(a))) {
    const auto bb = static_cast<std::size_t>(b);
    if (!member_[bb] && residual_[bb] > 0) ++out;
  }
  return out;
}

NodeSet DominationState::chosen() const {
  NodeSet out;
  for (std::size_t a = 0; a < member_.size(); ++a) {
    if (member_[a]) out.push_back(g_->label(static_cast<int>(a)));
  }
  return out;
}

bool is_mfold_ds(const Graph& g, const NodeSet& d, int m) {
  for (NodeId v : d) {
    if (!g.has_node(v)) throw ValidationError("unknown node id " + std::to_string(v) + " in dominating set");
  }
  for (NodeId v : g.nodes()) {
    if (contains(d, v)) continue;
    int count = 0;
    for (NodeId u : g.neighbors(v)) count += contains(d, u) ? 1 : 0;
    if (count < m) return false;
  }
  return true;
}

NodeSet forced_members(const Graph& g, int m) {
  NodeSet out;
  for (NodeId v : g.nodes()) {
    if (g.degree(v) < m) out.push_back(v);
  }
  return out;
}

NodeSet greedy_mfold_ds(const UnitDiskGraph& g, int m) {
  const Graph& topo = g.topology();
  DominationState state(topo, m);
  for (NodeId v : forced_members(topo, m)) state.add(v);
  while (state.total_deficiency() > 0) {
    NodeId pick = -1;
    double best = -1.0;
    for (NodeId v : topo.nodes()) {
      const int gain = state.gain(v);
      if (gain == 0) continue;
      const double ratio = gain / std::max(g.node(v).weight, kWeightFloor);
      if (ratio > best) {
        best = ratio;
        pick = v;
      }
    }
    state.add(pick);
  }
  return state.chosen();
}

NodeSet exact_mfold_ds(const UnitDiskGraph& g, int m, std::size_t node_cap) {
  if (g.size() > node_cap) {
    throw CapExceededError("exact_mfold_ds: " + std::to_string(g.size()) + " nodes exceed the cap of " +
                           std::to_string(node_cap));
  }
  if (m <= 0) return {};
  const Graph& topo = g.topology();
  const NodeSet forced = forced_members(topo, m);
  const NodeSet pool = set_difference(topo.nodes(), forced);
  const auto best = min_weight_feasible_set(forced, pool, g.weights(),
                                            [&](const NodeSet& d) { return is_mfold_ds(topo, d, m); });
  // D = V is always feasible, so the search cannot come back empty.
  return best->nodes;
}

}  // namespace ftb
