#include "ftb/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "ftb/errors.hpp"

namespace ftb {

namespace {

// Node-split digraph for internally disjoint paths: local node x becomes
// in(x) = 2x -> out(x) = 2x + 1 with capacity 1. The two endpoints have no
// internal arc; the source is out(s) and the sink in(t). Every undirected
// edge xy yields out(x) -> in(y) and out(y) -> in(x), capacity 1 each.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, int s, int t) : adj_(2 * g.size()), source_(2 * s + 1), sink_(2 * t) {
    const int n = static_cast<int>(g.size());
    for (int x = 0; x < n; ++x) {
      if (x != s && x != t) add_arc(2 * x, 2 * x + 1);
    }
    for (int x = 0; x < n; ++x) {
      for (int y : g.local_adjacency(x)) add_arc(2 * x + 1, 2 * y);
    }
  }

  int run(int limit) {
    int flow = 0;
    while ((limit < 0 || flow < limit) && augment()) ++flow;
    return flow;
  }

  // Valid after run(); paths are local-index sequences s .. t.
  std::vector<std::vector<int>> decompose() const {
    std::vector<std::vector<int>> paths;
    for (const Arc& a : adj_[static_cast<std::size_t>(source_)]) {
      if (!a.forward || a.cap != 0) continue;
      std::vector<int> path{source_ / 2};
      int at = a.to;  // an in-node
      while (at != sink_) {
        const int out = at + 1;
        path.push_back(at / 2);
        int next = -1;
        for (const Arc& b : adj_[static_cast<std::size_t>(out)]) {
          if (b.forward && b.cap == 0) {
            next = b.to;
            break;
          }
        }
        if (next < 0) break;
        at = next;
      }
      path.push_back(sink_ / 2);
      paths.push_back(std::move(path));
    }
    return paths;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int rev;
    bool forward;
  };

  void add_arc(int from, int to) {
    auto& f = adj_[static_cast<std::size_t>(from)];
    auto& t = adj_[static_cast<std::size_t>(to)];
    f.push_back({to, 1, static_cast<int>(t.size()), true});
    t.push_back({from, 0, static_cast<int>(f.size()) - 1, false});
  }

  bool augment() {
    const std::size_t n = adj_.size();
    std::vector<int> parent_node(n, -1);
    std::vector<int> parent_arc(n, -1);
    std::deque<int> queue{source_};
    parent_node[static_cast<std::size_t>(source_)] = source_;
    while (!queue.empty() && parent_node[static_cast<std::size_t>(sink_)] < 0) {
      const int x = queue.front();
      queue.pop_front();
      const auto& arcs = adj_[static_cast<std::size_t>(x)];
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& a = arcs[i];
        if (a.cap > 0 && parent_node[static_cast<std::size_t>(a.to)] < 0) {
          parent_node[static_cast<std::size_t>(a.to)] = x;
          parent_arc[static_cast<std::size_t>(a.to)] = static_cast<int>(i);
          queue.push_back(a.to);
        }
      }
    }
    if (parent_node[static_cast<std::size_t>(sink_)] < 0) return false;
    for (int y = sink_; y != source_;) {
      const int x = parent_node[static_cast<std::size_t>(y)];
      Arc& a = adj_[static_cast<std::size_t>(x)][static_cast<std::size_t>(parent_arc[static_cast<std::size_t>(y)])];
      a.cap -= 1;
      adj_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += 1;
      y = x;
    }
    return true;
  }

  std::vector<std::vector<Arc>> adj_;
  int source_;
  int sink_;
};

int local_paths(const Graph& g, int s, int t, int limit) { return SplitFlow(g, s, t).run(limit); }

bool local_adjacent(const Graph& g, int a, int b) {
  const auto& na = g.local_adjacency(a);
  return std::binary_search(na.begin(), na.end(), b);
}

// Pairs whose local connectivities realize kappa(G) for a non-complete G:
// a minimum-degree node against each of its non-neighbours, plus
// non-adjacent pairs inside its neighbourhood. Small graphs use every
// non-adjacent pair.
std::vector<std::pair<int, int>> pair_family(const Graph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<std::pair<int, int>> pairs;
  if (n <= 12) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (!local_adjacent(g, a, b)) pairs.emplace_back(a, b);
      }
    }
    return pairs;
  }
  int v = 0;
  for (int x = 1; x < n; ++x) {
    if (g.local_adjacency(x).size() < g.local_adjacency(v).size()) v = x;
  }
  for (int w = 0; w < n; ++w) {
    if (w != v && !local_adjacent(g, v, w)) pairs.emplace_back(std::min(v, w), std::max(v, w));
  }
  const auto& nv = g.local_adjacency(v);
  for (std::size_t i = 0; i < nv.size(); ++i) {
    for (std::size_t j = i + 1; j < nv.size(); ++j) {
      if (!local_adjacent(g, nv[i], nv[j])) pairs.emplace_back(nv[i], nv[j]);
    }
  }
  return pairs;
}

int require_node(const Graph& g, NodeId id) {
  const int a = g.index_of(id);
  if (a < 0) throw ValidationError("unknown node id " + std::to_string(id));
  return a;
}

// Components of g after deleting the marked local indices.
int count_components_without(const Graph& g, const std::vector<char>& removed) {
  const std::size_t n = g.size();
  std::vector<char> seen(removed);
  std::vector<int> stack;
  int count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(static_cast<int>(s));
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : g.local_adjacency(x)) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

}  // namespace

DisjointPaths max_disjoint_paths(const Graph& g, NodeId u, NodeId v, bool with_witnesses, int limit) {
  if (u == v) throw ValidationError("max_disjoint_paths: endpoints must differ");
  const int s = require_node(g, u);
  const int t = require_node(g, v);
  SplitFlow flow(g, s, t);
  DisjointPaths out;
  out.count = flow.run(limit);
  if (with_witnesses) {
    for (const auto& local : flow.decompose()) {
      Path p;
      for (int x : local) p.push_back(g.label(x));
      out.witnesses.push_back(std::move(p));
    }
  }
  return out;
}

int vertex_connectivity(const Graph& g) {
  if (g.size() < 2) throw ValidationError("vertex_connectivity: need at least two nodes");
  if (g.is_complete()) return static_cast<int>(g.size()) - 1;
  int best = g.min_degree();
  for (auto [a, b] : pair_family(g)) {
    best = std::min(best, local_paths(g, a, b, best));
    if (best == 0) break;
  }
  return best;
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return !g.nodes().empty();
  if (g.size() < static_cast<std::size_t>(k) + 1) return false;
  if (g.is_complete()) return true;
  if (g.min_degree() < k) return false;
  for (auto [a, b] : pair_family(g)) {
    if (local_paths(g, a, b, k) < k) return false;
  }
  return true;
}

std::optional<Separator> find_separator(const Graph& g, int max_size) {
  const int n = static_cast<int>(g.size());
  // Removing s nodes must leave at least two.
  const int top = std::min(max_size, n - 2);
  for (int s = 1; s <= top; ++s) {
    std::vector<int> pick(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
      std::vector<char> removed(static_cast<std::size_t>(n), 0);
      for (int x : pick) removed[static_cast<std::size_t>(x)] = 1;
      if (count_components_without(g, removed) >= 2) {
        Separator sep;
        for (int x : pick) sep.nodes.push_back(g.label(x));
        return sep;
      }
      // next combination in lexicographic order
      int i = s - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - s + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < s; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

bool is_subset_k_connected(const Graph& g, const NodeSet& terminals, int k) {
  for (NodeId t : terminals) require_node(g, t);
  if (terminals.size() < 2 || k <= 0) return true;
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    for (std::size_t j = i + 1; j < terminals.size(); ++j) {
      if (max_disjoint_paths(g, terminals[i], terminals[j], false, k).count < k) return false;
    }
  }
  return true;
}

std::vector<Edge> MarkedComponent::real_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : graph.edges()) {
    if (!std::binary_search(virtual_edges.begin(), virtual_edges.end(), e)) out.push_back(e);
  }
  return out;
}

std::vector<MarkedComponent> marked_components(const Graph& g, const Separator& s) {
  for (NodeId x : s.nodes) require_node(g, x);
  const Graph rest = g.without_nodes(s.nodes);
  const auto comps = rest.components();
  if (comps.size() < 2) throw ValidationError("marked_components: S is not a separator");
  std::vector<MarkedComponent> out;
  for (const NodeSet& c : comps) {
    MarkedComponent mc;
    mc.graph = g.induced(set_union(c, s.nodes));
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < s.nodes.size(); ++j) {
        if (!mc.graph.adjacent(s.nodes[i], s.nodes[j])) {
          mc.graph.add_edge(s.nodes[i], s.nodes[j]);
          mc.virtual_edges.emplace_back(s.nodes[i], s.nodes[j]);
        }
      }
    }
    std::sort(mc.virtual_edges.begin(), mc.virtual_edges.end());
    out.push_back(std::move(mc));
  }
  return out;
}

std::vector<int> BlockTree::leaf_blocks() const {
  std::vector<int> degree(blocks.size(), 0);
  for (auto [b, s] : incidence) ++degree[static_cast<std::size_t>(b)];
  std::vector<int> out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (degree[b] <= 1) out.push_back(static_cast<int>(b));
  }
  return out;
}

Graph BlockTree::block_graph(int block) const {
  const auto b = static_cast<std::size_t>(block);
  Graph out(blocks[b], block_real_edges[b]);
  for (const Edge& e : block_virtual_edges[b]) out.add_edge(e.u, e.v);
  return out;
}

BlockTree k_block_tree(const Graph& g, int k) {
  if (k < 1) throw ValidationError("k_block_tree: k must be at least 1");
  if (!is_k_connected(g, k)) {
    throw InfeasibleError("k_block_tree: graph is not " + std::to_string(k) + "-connected");
  }

  struct Piece {
    Graph graph;
    std::set<Edge> virt;
    std::vector<int> seps;
  };

  BlockTree tree;
  tree.k = k;
  std::deque<Piece> work;
  work.push_back({g, {}, {}});
  while (!work.empty()) {
    Piece piece = std::move(work.front());
    work.pop_front();
    const auto sep = find_separator(piece.graph, k);
    if (!sep) {
      std::vector<Edge> real;
      std::vector<Edge> virt(piece.virt.begin(), piece.virt.end());
      for (const Edge& e : piece.graph.edges()) {
        if (!piece.virt.contains(e)) real.push_back(e);
      }
      const int b = static_cast<int>(tree.blocks.size());
      tree.blocks.push_back(piece.graph.nodes());
      tree.block_real_edges.push_back(std::move(real));
      tree.block_virtual_edges.push_back(std::move(virt));
      for (int s : piece.seps) tree.incidence.emplace_back(b, s);
      continue;
    }
    const int y = static_cast<int>(tree.separators.size());
    tree.separators.push_back(*sep);
    auto children = marked_components(piece.graph, *sep);
    std::vector<Piece> next;
    for (auto& mc : children) {
      Piece child;
      for (const Edge& e : piece.virt) {
        if (mc.graph.adjacent(e.u, e.v)) child.virt.insert(e);
      }
      child.virt.insert(mc.virtual_edges.begin(), mc.virtual_edges.end());
      child.graph = std::move(mc.graph);
      child.seps.push_back(y);
      next.push_back(std::move(child));
    }
    // Each separator already attached to this piece moves to the one child
    // that holds all of its nodes.
    for (int s : piece.seps) {
      const NodeSet& nodes = tree.separators[static_cast<std::size_t>(s)].nodes;
      for (auto& child : next) {
        if (is_subset(nodes, child.graph.nodes())) {
          child.seps.push_back(s);
          break;
        }
      }
    }
    for (auto& child : next) {
      std::sort(child.seps.begin(), child.seps.end());
      work.push_back(std::move(child));
    }
  }
  std::sort(tree.incidence.begin(), tree.incidence.end());
  return tree;
}

}  // namespace ftb
