#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace ftb {

using NodeId = int;

/// Sorted, duplicate-free list of node ids. Every set the library reports
/// uses this representation so output order is reproducible.
using NodeSet = std::vector<NodeId>;

/// Unordered pair stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  Edge() = default;
  Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

NodeSet make_node_set(std::vector<NodeId> ids);
bool contains(const NodeSet& set, NodeId id);
bool is_subset(const NodeSet& sub, const NodeSet& super);
NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_difference(const NodeSet& a, const NodeSet& b);

/// Simple undirected graph over an explicit, sorted set of node labels.
///
/// Labels are arbitrary non-negative ids; internally nodes are addressed by
/// their dense position in the label list ("local index"), which is what the
/// flow and search routines iterate over.
class Graph {
 public:
  Graph() = default;
  explicit Graph(NodeSet nodes);
  Graph(NodeSet nodes, std::span<const Edge> edges);

  /// Inserts the edge if absent. Self-loops and unknown endpoints throw.
  void add_edge(NodeId u, NodeId v);
  void remove_edge(NodeId u, NodeId v);

  const NodeSet& nodes() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  bool has_node(NodeId id) const { return index_of(id) >= 0; }
  bool adjacent(NodeId u, NodeId v) const;
  int degree(NodeId id) const;
  int min_degree() const;
  int max_degree() const;
  NodeSet neighbors(NodeId id) const;
  std::vector<Edge> edges() const;
  bool is_complete() const;

  Graph induced(const NodeSet& keep) const;
  Graph without_nodes(const NodeSet& drop) const;
  Graph without_edge(Edge e) const;

  /// Connected components as label sets, ordered by smallest member.
  std::vector<NodeSet> components() const;
  bool is_connected() const;

  /// Local index of a label, or -1.
  int index_of(NodeId id) const;
  NodeId label(int local) const { return labels_[static_cast<std::size_t>(local)]; }
  const std::vector<int>& local_adjacency(int local) const {
    return adj_[static_cast<std::size_t>(local)];
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  NodeSet labels_;
  std::vector<std::vector<int>> adj_;
  std::size_t num_edges_ = 0;
};

}  // namespace ftb
