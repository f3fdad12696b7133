#include "ftb/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ftb/errors.hpp"

namespace ftb {

NodeSet make_node_set(std::vector<NodeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool contains(const NodeSet& set, NodeId id) {
  return std::binary_search(set.begin(), set.end(), id);
}

bool is_subset(const NodeSet& sub, const NodeSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Graph::Graph(NodeSet nodes) : labels_(make_node_set(std::move(nodes))), adj_(labels_.size()) {}

Graph::Graph(NodeSet nodes, std::span<const Edge> edges) : Graph(std::move(nodes)) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

int Graph::index_of(NodeId id) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), id);
  if (it == labels_.end() || *it != id) return -1;
  return static_cast<int>(it - labels_.begin());
}

void Graph::add_edge(NodeId u, NodeId v) {
  if (u == v) throw ValidationError("self-loop on node " + std::to_string(u));
  const int a = index_of(u);
  const int b = index_of(v);
  if (a < 0 || b < 0) {
    throw ValidationError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                          " references a node outside the graph");
  }
  auto& na = adj_[static_cast<std::size_t>(a)];
  auto pos = std::lower_bound(na.begin(), na.end(), b);
  if (pos != na.end() && *pos == b) return;
  na.insert(pos, b);
  auto& nb = adj_[static_cast<std::size_t>(b)];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
  ++num_edges_;
}

void Graph::remove_edge(NodeId u, NodeId v) {
  const int a = index_of(u);
  const int b = index_of(v);
  if (a < 0 || b < 0) return;
  auto& na = adj_[static_cast<std::size_t>(a)];
  auto pos = std::lower_bound(na.begin(), na.end(), b);
  if (pos == na.end() || *pos != b) return;
  na.erase(pos);
  auto& nb = adj_[static_cast<std::size_t>(b)];
  nb.erase(std::lower_bound(nb.begin(), nb.end(), a));
  --num_edges_;
}

bool Graph::adjacent(NodeId u, NodeId v) const {
  const int a = index_of(u);
  const int b = index_of(v);
  if (a < 0 || b < 0) return false;
  const auto& na = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(na.begin(), na.end(), b);
}

int Graph::degree(NodeId id) const {
  const int a = index_of(id);
  return a < 0 ? 0 : static_cast<int>(adj_[static_cast<std::size_t>(a)].size());
}

int Graph::min_degree() const {
  int best = 0;
  bool first = true;
  for (const auto& n : adj_) {
    const int d = static_cast<int>(n.size());
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& n : adj_) best = std::max(best, static_cast<int>(n.size()));
  return best;
}

NodeSet Graph::neighbors(NodeId id) const {
  NodeSet out;
  const int a = index_of(id);
  if (a < 0) return out;
  for (int b : adj_[static_cast<std::size_t>(a)]) out.push_back(label(b));
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t a = 0; a < adj_.size(); ++a) {
    for (int b : adj_[a]) {
      if (static_cast<std::size_t>(b) > a) out.emplace_back(labels_[a], label(b));
    }
  }
  return out;
}

bool Graph::is_complete() const {
  const std::size_t n = labels_.size();
  return num_edges_ == n * (n - (n > 0 ? 1 : 0)) / 2;
}

Graph Graph::induced(const NodeSet& keep) const {
  NodeSet kept;
  for (NodeId id : keep) {
    if (has_node(id)) kept.push_back(id);
  }
  Graph out(std::move(kept));
  for (std::size_t i = 0; i < out.labels_.size(); ++i) {
    const int a = index_of(out.labels_[i]);
    for (int b : adj_[static_cast<std::size_t>(a)]) {
      const int j = out.index_of(label(b));
      if (j > static_cast<int>(i)) {
        out.adj_[i].push_back(j);
        out.adj_[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
        ++out.num_edges_;
      }
    }
  }
  for (auto& n : out.adj_) std::sort(n.begin(), n.end());
  return out;
}

Graph Graph::without_nodes(const NodeSet& drop) const {
  return induced(set_difference(labels_, make_node_set(drop)));
}

Graph Graph::without_edge(Edge e) const {
  Graph out = *this;
  out.remove_edge(e.u, e.v);
  return out;
}

std::vector<NodeSet> Graph::components() const {
  std::vector<NodeSet> out;
  std::vector<char> seen(labels_.size(), 0);
  std::vector<int> stack;
  for (std::size_t s = 0; s < labels_.size(); ++s) {
    if (seen[s]) continue;
    NodeSet comp;
    seen[s] = 1;
    stack.push_back(static_cast<int>(s));
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      comp.push_back(label(x));
      for (int y : adj_[static_cast<std::size_t>(x)]) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

}  // namespace ftb
