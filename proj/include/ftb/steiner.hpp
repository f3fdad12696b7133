#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ftb/graph.hpp"
#include "ftb/udg.hpp"

namespace ftb {

/// Subset k-connected subgraph instance: find a minimum-w edge set giving
/// every terminal pair k internally disjoint paths.
struct SkcsInstance {
  const UnitDiskGraph* graph = nullptr;
  NodeSet terminals;
  int k = 1;
  std::vector<double> edge_weights;  // indexed by host edge id
};

enum class SkcsSolver { exact, augment };

std::string_view to_string(SkcsSolver s);
SkcsSolver parse_skcs_solver(std::string_view name);

/// w(uv) = (c(u) + c(v)) / 2 for every host edge.
std::vector<double> derive_edge_weights(const UnitDiskGraph& g, const std::vector<double>& node_costs);

/// Exact SkCS by branch and bound over edges in ascending weight order.
/// Throws InfeasibleError when even the full graph fails, CapExceededError
/// above `edge_cap` edges.
EdgeSubgraph skcs_exact(const SkcsInstance& inst, std::size_t edge_cap = 22);

/// Successive shortest augmenting paths: for l = 1..k and each terminal pair
/// (s, t) with fewer than l disjoint paths in the current F0, route one more
/// unit through the node-split residual digraph where F0 arcs cost 0 and
/// other edges cost w(e), and add the new edges to F0.
EdgeSubgraph skcs_augment(const SkcsInstance& inst);

struct BlockExtraction {
  EdgeSubgraph block;
  bool ok = false;
};

/// Separator descent inside the component of F0 holding T: while it is not
/// k-connected, cut along a separator of size < k and keep the side holding
/// the terminals. The result is verified; on failure `ok` is false and the
/// returned subgraph is the terminals' component of F0.
BlockExtraction extract_k_block(const EdgeSubgraph& f0, const NodeSet& terminals, int k);

struct SteinerSolution {
  EdgeSubgraph f;
  EdgeSubgraph f0;
  NodeSet steiner_nodes;  // V(F) \ T
  double node_cost = 0.0;  // c(V(F))
  double edge_cost = 0.0;  // w(E(F))
  SkcsSolver solver = SkcsSolver::augment;
  bool extraction_ok = false;
};

/// Node-weighted k-connected Steiner network: derive edge weights, solve
/// SkCS, extract the k-block holding T. Terminal costs must be zero.
SteinerSolution solve_mnwkcsn(const UnitDiskGraph& g, const std::vector<double>& node_costs,
                              const NodeSet& terminals, int k, SkcsSolver solver, std::size_t edge_cap = 22);

/// (2/k) w(E(F)) - c(V(F)); nonnegative whenever F has minimum degree >= k.
double weight_slack(const EdgeSubgraph& f, const std::vector<double>& node_costs,
                    const std::vector<double>& edge_weights, int k);

}  // namespace ftb
