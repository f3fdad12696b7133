#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ftb/graph.hpp"

namespace ftb {

/// Node set whose removal leaves at least two nonempty components.
struct Separator {
  NodeSet nodes;
  std::size_t size() const { return nodes.size(); }
};

using Path = std::vector<NodeId>;

struct DisjointPaths {
  int count = 0;
  /// Filled only when requested; each path runs u .. v.
  std::vector<Path> witnesses;
};

/// Maximum number of internally node-disjoint u-v paths (a direct edge counts
/// as one path). Unit-capacity augmenting paths on the node-split digraph;
/// `limit` stops early once that many paths are found.
DisjointPaths max_disjoint_paths(const Graph& g, NodeId u, NodeId v, bool with_witnesses = false,
                                 int limit = -1);

/// kappa(G). n - 1 for complete graphs, 0 for disconnected ones.
int vertex_connectivity(const Graph& g);

/// |V| >= k + 1 and kappa(G) >= k. Stops as soon as a pair falls below k.
bool is_k_connected(const Graph& g, int k);

/// Smallest separator with at most max_size nodes; among equal sizes the
/// lexicographically first node set.
std::optional<Separator> find_separator(const Graph& g, int max_size);

/// Every pair of T joined by >= k internally disjoint paths in g. Sets with
/// fewer than two members are accepted vacuously.
bool is_subset_k_connected(const Graph& g, const NodeSet& terminals, int k);

/// G[C u S] plus the clique on S. Virtual edges are listed separately and are
/// never part of any length or weight computation.
struct MarkedComponent {
  Graph graph;                 // includes virtual edges
  std::vector<Edge> virtual_edges;
  std::vector<Edge> real_edges() const;
};

/// Marked S-components, one per component of g - S, ordered by the
/// smallest node of the component.
std::vector<MarkedComponent> marked_components(const Graph& g, const Separator& s);

/// Bipartite tree of k-blocks and the k-separators used to cut them apart.
struct BlockTree {
  int k = 0;
  std::vector<NodeSet> blocks;
  std::vector<std::vector<Edge>> block_real_edges;
  std::vector<std::vector<Edge>> block_virtual_edges;
  std::vector<Separator> separators;
  /// (block index, separator index)
  std::vector<std::pair<int, int>> incidence;

  /// Blocks incident to at most one separator.
  std::vector<int> leaf_blocks() const;
  /// The marked block graph (real plus virtual edges).
  Graph block_graph(int block) const;
};

/// Recursive decomposition along k-separators. Throws InfeasibleError when g
/// is not k-connected.
BlockTree k_block_tree(const Graph& g, int k);

}  // namespace ftb
