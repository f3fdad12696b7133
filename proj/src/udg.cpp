#include "ftb/udg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "ftb/errors.hpp"

namespace ftb {

UnitDiskGraph build_udg(std::vector<PointNode> points) {
  std::sort(points.begin(), points.end(),
            [](const PointNode& a, const PointNode& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < points.size(); ++i) {
    const PointNode& p = points[i];
    const std::string where = "node " + std::to_string(p.id);
    if (i > 0 && points[i - 1].id == p.id) throw ValidationError("duplicate id: " + where);
    if (!p.position.allFinite()) throw ValidationError("non-finite coordinate: " + where);
    if (!std::isfinite(p.weight)) throw ValidationError("non-finite weight: " + where);
    if (p.weight < 0.0) throw ValidationError("negative weight: " + where);
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].id != static_cast<NodeId>(i)) {
      throw ValidationError("ids must be contiguous from 0; missing id " + std::to_string(i));
    }
  }

  UnitDiskGraph g;
  const std::size_t n = points.size();
  g.nodes_ = std::move(points);
  g.incident_.assign(n, {});
  NodeSet ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<NodeId>(i);
  g.topology_ = Graph(std::move(ids));

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Eigen::Vector2d d = g.nodes_[j].position - g.nodes_[i].position;
      const double sq = d.squaredNorm();
      if (sq <= 1.0) {
        const int id = static_cast<int>(g.edges_.size());
        g.edges_.push_back({Edge(static_cast<NodeId>(i), static_cast<NodeId>(j)), std::sqrt(sq)});
        g.incident_[i].push_back(id);
        g.incident_[j].push_back(id);
        g.topology_.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
      }
    }
  }
  return g;
}

std::vector<double> UnitDiskGraph::weights() const {
  std::vector<double> w;
  w.reserve(nodes_.size());
  for (const auto& p : nodes_) w.push_back(p.weight);
  return w;
}

std::optional<int> UnitDiskGraph::edge_id(NodeId u, NodeId v) const {
  if (u < 0 || v < 0 || u == v) return std::nullopt;
  if (static_cast<std::size_t>(u) >= size() || static_cast<std::size_t>(v) >= size()) {
    return std::nullopt;
  }
  const Edge key(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key,
                             [](const UdgEdge& e, const Edge& k) { return e.ends < k; });
  if (it == edges_.end() || it->ends != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

// ---------------------------------------------------------------------------

EdgeSubgraph::EdgeSubgraph(const UnitDiskGraph& host, std::vector<int> edge_ids,
                           NodeSet extra_nodes)
    : host_(&host), edge_ids_(std::move(edge_ids)), extra_nodes_(make_node_set(std::move(extra_nodes))) {
  std::sort(edge_ids_.begin(), edge_ids_.end());
  edge_ids_.erase(std::unique(edge_ids_.begin(), edge_ids_.end()), edge_ids_.end());
  for (int id : edge_ids_) {
    if (id < 0 || static_cast<std::size_t>(id) >= host.num_edges()) {
      throw ValidationError("edge id " + std::to_string(id) + " is not an edge of the host");
    }
  }
  for (NodeId v : extra_nodes_) {
    if (v < 0 || static_cast<std::size_t>(v) >= host.size()) {
      throw ValidationError("node " + std::to_string(v) + " is not a node of the host");
    }
  }
}

EdgeSubgraph EdgeSubgraph::spanning(const UnitDiskGraph& host, std::vector<int> edge_ids) {
  return EdgeSubgraph(host, std::move(edge_ids), host.all_nodes());
}

EdgeSubgraph EdgeSubgraph::all_edges(const UnitDiskGraph& host) {
  std::vector<int> ids(host.num_edges());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  return spanning(host, std::move(ids));
}

bool EdgeSubgraph::has_edge(int edge_id) const {
  return std::binary_search(edge_ids_.begin(), edge_ids_.end(), edge_id);
}

NodeSet EdgeSubgraph::node_span() const {
  std::vector<NodeId> ids(extra_nodes_.begin(), extra_nodes_.end());
  for (int id : edge_ids_) {
    const Edge& e = host_->edge(id).ends;
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  return make_node_set(std::move(ids));
}

std::vector<Edge> EdgeSubgraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_ids_.size());
  for (int id : edge_ids_) out.push_back(host_->edge(id).ends);
  return out;
}

Graph EdgeSubgraph::to_graph() const {
  const auto e = edges();
  return Graph(node_span(), e);
}

EdgeSubgraph EdgeSubgraph::with_edge(int edge_id) const {
  auto ids = edge_ids_;
  ids.push_back(edge_id);
  return EdgeSubgraph(*host_, std::move(ids), extra_nodes_);
}

EdgeSubgraph EdgeSubgraph::without_edge(int edge_id) const {
  auto ids = edge_ids_;
  ids.erase(std::remove(ids.begin(), ids.end(), edge_id), ids.end());
  return EdgeSubgraph(*host_, std::move(ids), extra_nodes_);
}

double subgraph_length(const EdgeSubgraph& f) {
  double total = 0.0;
  for (int id : f.edge_ids()) total += f.host().edge(id).length;
  return total;
}

double subgraph_sum(const EdgeSubgraph& f, const std::vector<double>& per_edge) {
  double total = 0.0;
  for (int id : f.edge_ids()) total += per_edge[static_cast<std::size_t>(id)];
  return total;
}

double node_weight(const UnitDiskGraph& g, const NodeSet& set) {
  double total = 0.0;
  for (NodeId v : set) total += g.node(v).weight;
  return total;
}

// ---------------------------------------------------------------------------

UnitDiskGraph random_instance(int n, double side, WeightRange weights, std::uint64_t seed) {
  if (n <= 0) throw ValidationError("random_instance: n must be at least 1");
  if (!(side > 0.0) || !std::isfinite(side)) throw ValidationError("random_instance: side must be positive");
  if (!(weights.lo >= 0.0) || !(weights.lo <= weights.hi)) {
    throw ValidationError("random_instance: weight range must satisfy 0 <= lo <= hi");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, side);
  std::uniform_real_distribution<double> weight(weights.lo, weights.hi);

  std::vector<PointNode> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Eigen::Vector2d p;
    for (;;) {
      p = Eigen::Vector2d(coord(rng), coord(rng));
      const bool near_unit = std::any_of(pts.begin(), pts.end(), [&](const PointNode& q) {
        return std::abs((q.position - p).norm() - 1.0) < 1e-9;
      });
      if (!near_unit) break;
    }
    const double w = weights.lo == weights.hi ? weights.lo : weight(rng);
    pts.push_back({i, p, w});
  }
  return build_udg(std::move(pts));
}

// ---------------------------------------------------------------------------

namespace fixtures {
namespace {

UnitDiskGraph from_coords(const std::vector<Eigen::Vector2d>& coords, const std::vector<double>& w) {
  std::vector<PointNode> pts;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    pts.push_back({static_cast<NodeId>(i), coords[i], w[i]});
  }
  return build_udg(std::move(pts));
}

UnitDiskGraph uniform(const std::vector<Eigen::Vector2d>& coords, double weight) {
  return from_coords(coords, std::vector<double>(coords.size(), weight));
}

}  // namespace

UnitDiskGraph sq4(double weight) {
  return uniform({{0.0, 0.0}, {0.6, 0.0}, {0.6, 0.6}, {0.0, 0.6}}, weight);
}

UnitDiskGraph path3(double weight) { return uniform({{0.0, 0.0}, {0.9, 0.0}, {1.8, 0.0}}, weight); }

UnitDiskGraph pent5(double weight) {
  const double radius = 0.9 / (2.0 * std::sin(std::numbers::pi / 5.0));
  std::vector<Eigen::Vector2d> c;
  for (int i = 0; i < 5; ++i) {
    const double a = 2.0 * std::numbers::pi * i / 5.0;
    c.emplace_back(radius * std::cos(a), radius * std::sin(a));
  }
  return uniform(c, weight);
}

UnitDiskGraph hex7(double weight) {
  std::vector<Eigen::Vector2d> c{{0.0, 0.0}};
  for (int i = 0; i < 6; ++i) {
    const double a = std::numbers::pi * i / 3.0;
    c.emplace_back(0.95 * std::cos(a), 0.95 * std::sin(a));
  }
  return uniform(c, weight);
}

UnitDiskGraph star5() {
  return from_coords({{0.0, 0.0}, {0.9, 0.0}, {0.0, 0.9}, {-0.9, 0.0}, {0.0, -0.9}},
                     {1.0, 10.0, 10.0, 10.0, 10.0});
}

UnitDiskGraph bowtie(double weight) {
  return uniform({{0.0, 0.0}, {0.9, 0.3}, {0.9, -0.3}, {-0.9, 0.3}, {-0.9, -0.3}}, weight);
}

std::optional<UnitDiskGraph> by_name(std::string_view name) {
  if (name == "sq4") return sq4();
  if (name == "path3") return path3();
  if (name == "pent5") return pent5();
  if (name == "hex7") return hex7();
  if (name == "star5") return star5();
  if (name == "bowtie") return bowtie();
  return std::nullopt;
}

}  // namespace fixtures
}  // namespace ftb
