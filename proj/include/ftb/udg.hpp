#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "ftb/graph.hpp"

namespace ftb {

/// An embedded sensor. Coordinates are in units of the transmission radius.
struct PointNode {
  NodeId id = 0;
  Eigen::Vector2d position = Eigen::Vector2d::Zero();
  double weight = 0.0;

  double x() const { return position.x(); }
  double y() const { return position.y(); }
};

struct UdgEdge {
  Edge ends;
  double length = 0.0;
};

/// Immutable unit disk graph: u ~ v iff |p_u - p_v|^2 <= 1 (closed disk).
///
/// Node ids are dense 0..n-1 and equal the position in nodes(). Edges are
/// numbered in ascending (u, v) order; that numbering is the edge id used by
/// EdgeSubgraph.
class UnitDiskGraph {
 public:
  UnitDiskGraph() = default;

  std::size_t size() const { return nodes_.size(); }
  const std::vector<PointNode>& nodes() const { return nodes_; }
  const PointNode& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
  const std::vector<UdgEdge>& edges() const { return edges_; }
  const UdgEdge& edge(int edge_id) const { return edges_[static_cast<std::size_t>(edge_id)]; }
  std::size_t num_edges() const { return edges_.size(); }

  const Graph& topology() const { return topology_; }
  NodeSet all_nodes() const { return topology_.nodes(); }
  std::vector<double> weights() const;

  /// Edge id of {u, v}, if the pair is adjacent.
  std::optional<int> edge_id(NodeId u, NodeId v) const;
  /// Edge ids incident to a node, ascending.
  const std::vector<int>& incident_edges(NodeId id) const {
    return incident_[static_cast<std::size_t>(id)];
  }

  friend UnitDiskGraph build_udg(std::vector<PointNode> points);

 private:
  std::vector<PointNode> nodes_;
  std::vector<UdgEdge> edges_;
  std::vector<std::vector<int>> incident_;
  Graph topology_;
};

/// Throws ValidationError on duplicate / non-contiguous ids, non-finite
/// coordinates or negative weights.
UnitDiskGraph build_udg(std::vector<PointNode> points);

/// Edge subset of a host graph. The node span is the set of endpoints of the
/// chosen edges together with an explicit extra node set (used to keep
/// spanning subgraphs and terminals present even when isolated).
class EdgeSubgraph {
 public:
  EdgeSubgraph() = default;
  EdgeSubgraph(const UnitDiskGraph& host, std::vector<int> edge_ids, NodeSet extra_nodes = {});

  /// Subgraph over every host node.
  static EdgeSubgraph spanning(const UnitDiskGraph& host, std::vector<int> edge_ids);
  static EdgeSubgraph all_edges(const UnitDiskGraph& host);

  const UnitDiskGraph& host() const { return *host_; }
  const std::vector<int>& edge_ids() const { return edge_ids_; }
  const NodeSet& extra_nodes() const { return extra_nodes_; }
  std::size_t num_edges() const { return edge_ids_.size(); }
  bool has_edge(int edge_id) const;

  NodeSet node_span() const;
  std::vector<Edge> edges() const;
  Graph to_graph() const;

  EdgeSubgraph with_edge(int edge_id) const;
  EdgeSubgraph without_edge(int edge_id) const;

  friend bool operator==(const EdgeSubgraph& a, const EdgeSubgraph& b) {
    return a.host_ == b.host_ && a.edge_ids_ == b.edge_ids_ && a.extra_nodes_ == b.extra_nodes_;
  }

 private:
  const UnitDiskGraph* host_ = nullptr;
  std::vector<int> edge_ids_;
  NodeSet extra_nodes_;
};

/// len(F): sum of Euclidean edge lengths, recomputed on every call.
double subgraph_length(const EdgeSubgraph& f);

/// Sum of per-edge values over the edges of F.
double subgraph_sum(const EdgeSubgraph& f, const std::vector<double>& per_edge);

/// Total node weight of a set.
double node_weight(const UnitDiskGraph& g, const NodeSet& set);

// ---------------------------------------------------------------------------
// Instance I/O: {"nodes":[{"id":int,"x":real,"y":real,"w":real},...]}
// Edges are never serialized; adjacency is always re-derived.

UnitDiskGraph parse_instance(std::string_view text);
std::string write_instance(const UnitDiskGraph& g);
UnitDiskGraph load_instance(const std::string& path);
void save_instance(const UnitDiskGraph& g, const std::string& path);

// ---------------------------------------------------------------------------
// Random instances.

struct WeightRange {
  double lo = 1.0;
  double hi = 1.0;
};

/// n points uniform in [0, side]^2, weights uniform in [lo, hi]. Points that
/// would land within 1e-9 of unit distance from an earlier point are
/// resampled. Deterministic in the seed.
UnitDiskGraph random_instance(int n, double side, WeightRange weights, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Named fixtures.

namespace fixtures {
/// Square of side 0.6, ids counter-clockwise from the origin: K4.
UnitDiskGraph sq4(double weight = 1.0);
/// (0,0), (0.9,0), (1.8,0): a path.
UnitDiskGraph path3(double weight = 1.0);
/// Regular pentagon of side 0.9, ids in cycle order: C5.
UnitDiskGraph pent5(double weight = 1.0);
/// Center node 0 plus a regular hexagon of circumradius 0.95 (ids 1..6): the wheel W6.
UnitDiskGraph hex7(double weight = 1.0);
/// Center 0 (weight 1) with four leaves (weight 10) at distance 0.9 on the axes.
UnitDiskGraph star5();
/// Two triangles sharing node 0.
UnitDiskGraph bowtie(double weight = 1.0);
/// Named lookup for the CLI; nullopt for unknown names.
std::optional<UnitDiskGraph> by_name(std::string_view name);
}  // namespace fixtures

}  // namespace ftb
