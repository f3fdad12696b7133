#include "ftb/steiner.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <string>

#include "ftb/connectivity.hpp"
#include "ftb/errors.hpp"

namespace ftb {

std::string_view to_string(SkcsSolver s) { return s == SkcsSolver::exact ? "exact" : "augment"; }

SkcsSolver parse_skcs_solver(std::string_view name) {
  if (name == "exact") return SkcsSolver::exact;
  if (name == "augment") return SkcsSolver::augment;
  throw ValidationError("unknown SkCS solver \"" + std::string(name) + "\" (expected exact|augment)");
}

std::vector<double> derive_edge_weights(const UnitDiskGraph& g, const std::vector<double>& node_costs) {
  if (node_costs.size() != g.size()) {
    throw ValidationError("derive_edge_weights: expected " + std::to_string(g.size()) + " node costs, got " +
                          std::to_string(node_costs.size()));
  }
  for (double c : node_costs) {
    if (!(c >= 0.0)) throw ValidationError("derive_edge_weights: node costs must be nonnegative");
  }
  std::vector<double> w;
  w.reserve(g.num_edges());
  for (const UdgEdge& e : g.edges()) {
    w.push_back((node_costs[static_cast<std::size_t>(e.ends.u)] + node_costs[static_cast<std::size_t>(e.ends.v)]) /
                2.0);
  }
  return w;
}

namespace {

void check_instance(const SkcsInstance& inst) {
  if (inst.graph == nullptr) throw ValidationError("SkCS instance has no graph");
  if (inst.k < 1) throw ValidationError("SkCS: k must be at least 1");
  if (inst.edge_weights.size() != inst.graph->num_edges()) {
    throw ValidationError("SkCS: one weight per edge required");
  }
  for (NodeId t : inst.terminals) {
    if (t < 0 || static_cast<std::size_t>(t) >= inst.graph->size()) {
      throw ValidationError("SkCS: unknown terminal " + std::to_string(t));
    }
  }
}

Graph terminal_graph(const UnitDiskGraph& g, const std::vector<int>& ids, const NodeSet& terminals) {
  return EdgeSubgraph(g, ids, terminals).to_graph();
}

// Node-split residual digraph for one augmentation step of skcs_augment.
class AugmentNet {
 public:
  AugmentNet(const UnitDiskGraph& g, const std::vector<char>& in_f0, const std::vector<double>& w, int s, int t)
      : adj_(2 * g.size()), source_(2 * s + 1), sink_(2 * t) {
    for (int x = 0; x < static_cast<int>(g.size()); ++x) {
      if (x != s && x != t) add_arc(2 * x, 2 * x + 1, 0.0, -1, true);
    }
    for (std::size_t id = 0; id < g.num_edges(); ++id) {
      const Edge& e = g.edge(static_cast<int>(id)).ends;
      const bool free = in_f0[id] != 0;
      const double cost = free ? 0.0 : w[id];
      add_arc(2 * e.u + 1, 2 * e.v, cost, static_cast<int>(id), free);
      add_arc(2 * e.v + 1, 2 * e.u, cost, static_cast<int>(id), free);
    }
  }

  // Max flow restricted to arcs of F0; returns its value.
  int saturate_f0(int limit) {
    int flow = 0;
    while (flow < limit && bfs_augment()) ++flow;
    return flow;
  }

  // Cheapest residual s-t path over every arc; returns the host edges that
  // carry new flow and are not yet in F0, or nullopt if t is unreachable.
  std::optional<std::vector<int>> cheapest_augment() {
    const std::size_t n = adj_.size();
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<int> parent_node(n, -1);
    std::vector<int> parent_arc(n, -1);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[static_cast<std::size_t>(source_)] = 0.0;
    heap.push({0.0, source_});
    while (!heap.empty()) {
      const auto [d, x] = heap.top();
      heap.pop();
      if (d > dist[static_cast<std::size_t>(x)]) continue;
      const auto& arcs = adj_[static_cast<std::size_t>(x)];
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& a = arcs[i];
        if (a.cap <= 0) continue;
        const double nd = d + a.cost;
        if (nd < dist[static_cast<std::size_t>(a.to)]) {
          dist[static_cast<std::size_t>(a.to)] = nd;
          parent_node[static_cast<std::size_t>(a.to)] = x;
          parent_arc[static_cast<std::size_t>(a.to)] = static_cast<int>(i);
          heap.push({nd, a.to});
        }
      }
    }
    if (parent_node[static_cast<std::size_t>(sink_)] < 0) return std::nullopt;
    std::vector<int> added;
    for (int y = sink_; y != source_;) {
      const int x = parent_node[static_cast<std::size_t>(y)];
      Arc& a = adj_[static_cast<std::size_t>(x)][static_cast<std::size_t>(parent_arc[static_cast<std::size_t>(y)])];
      a.cap -= 1;
      adj_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += 1;
      if (a.forward && a.edge >= 0 && !a.free) added.push_back(a.edge);
      y = x;
    }
    return added;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int rev;
    double cost;
    int edge;
    bool free;
    bool forward;
  };

  void add_arc(int from, int to, double cost, int edge, bool free) {
    auto& f = adj_[static_cast<std::size_t>(from)];
    auto& t = adj_[static_cast<std::size_t>(to)];
    f.push_back({to, 1, static_cast<int>(t.size()), cost, edge, free, true});
    t.push_back({from, 0, static_cast<int>(f.size()) - 1, -cost, edge, free, false});
  }

  bool bfs_augment() {
    const std::size_t n = adj_.size();
    std::vector<int> parent_node(n, -1);
    std::vector<int> parent_arc(n, -1);
    std::queue<int> queue;
    queue.push(source_);
    parent_node[static_cast<std::size_t>(source_)] = source_;
    while (!queue.empty() && parent_node[static_cast<std::size_t>(sink_)] < 0) {
      const int x = queue.front();
      queue.pop();
      const auto& arcs = adj_[static_cast<std::size_t>(x)];
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& a = arcs[i];
        if (a.cap > 0 && a.free && parent_node[static_cast<std::size_t>(a.to)] < 0) {
          parent_node[static_cast<std::size_t>(a.to)] = x;
          parent_arc[static_cast<std::size_t>(a.to)] = static_cast<int>(i);
          queue.push(a.to);
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

}  // namespace

EdgeSubgraph skcs_exact(const SkcsInstance& inst, std::size_t edge_cap) {
  check_instance(inst);
  const UnitDiskGraph& g = *inst.graph;
  const int k = inst.k;
  const NodeSet& terms = inst.terminals;
  if (g.num_edges() > edge_cap) {
    throw CapExceededError("skcs_exact: " + std::to_string(g.num_edges()) + " edges exceed the cap of " +
                           std::to_string(edge_cap));
  }
  if (!is_subset_k_connected(g.topology(), terms, k)) {
    throw InfeasibleError("skcs_exact: terminals are not " + std::to_string(k) + "-connected in the graph");
  }
  if (terms.size() < 2) return EdgeSubgraph(g, {}, terms);

  const std::size_t m = g.num_edges();
  std::vector<int> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.edge_weights[static_cast<std::size_t>(a)] < inst.edge_weights[static_cast<std::size_t>(b)];
  });

  // Terminal-degree bookkeeping drives both the cheap feasibility filter and
  // the lower bound (each chosen edge serves at most two terminals).
  std::vector<int> tdeg(g.size(), 0);
  std::vector<std::vector<std::size_t>> t_incident(g.size());
  for (std::size_t pos = 0; pos < m; ++pos) {
    const Edge& e = g.edge(order[pos]).ends;
    if (contains(terms, e.u)) t_incident[static_cast<std::size_t>(e.u)].push_back(pos);
    if (contains(terms, e.v)) t_incident[static_cast<std::size_t>(e.v)].push_back(pos);
  }

  std::vector<char> chosen(m, 0);
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_ids;

  auto weight_at = [&](std::size_t pos) { return inst.edge_weights[static_cast<std::size_t>(order[pos])]; };

  auto lower_bound_from = [&](std::size_t pos, double acc) {
    double extra = 0.0;
    for (NodeId t : terms) {
      int need = k - tdeg[static_cast<std::size_t>(t)];
      if (need <= 0) continue;
      for (std::size_t i : t_incident[static_cast<std::size_t>(t)]) {
        if (i < pos) continue;
        extra += weight_at(i);
        if (--need == 0) break;
      }
      if (need > 0) return std::numeric_limits<double>::infinity();
    }
    return acc + 0.5 * extra;
  };

  auto feasible_now = [&]() {
    for (NodeId t : terms) {
      if (tdeg[static_cast<std::size_t>(t)] < k) return false;
    }
    std::vector<int> ids;
    for (std::size_t i = 0; i < m; ++i) {
      if (chosen[i]) ids.push_back(order[i]);
    }
    return is_subset_k_connected(terminal_graph(g, ids, terms), terms, k);
  };

  auto bump = [&](std::size_t pos, int delta) {
    const Edge& e = g.edge(order[pos]).ends;
    tdeg[static_cast<std::size_t>(e.u)] += delta;
    tdeg[static_cast<std::size_t>(e.v)] += delta;
  };

  auto search = [&](auto&& self, std::size_t pos, double acc) -> void {
    if (feasible_now()) {
      if (acc < best - 1e-12) {
        best = acc;
        best_ids.clear();
        for (std::size_t i = 0; i < m; ++i) {
          if (chosen[i]) best_ids.push_back(order[i]);
        }
      }
      return;
    }
    if (pos == m) return;
    if (lower_bound_from(pos, acc) >= best - 1e-12) return;
    chosen[pos] = 1;
    bump(pos, +1);
    self(self, pos + 1, acc + weight_at(pos));
    chosen[pos] = 0;
    bump(pos, -1);
    self(self, pos + 1, acc);
  };
  search(search, 0, 0.0);
  return EdgeSubgraph(g, std::move(best_ids), terms);
}

EdgeSubgraph skcs_augment(const SkcsInstance& inst) {
  check_instance(inst);
  const UnitDiskGraph& g = *inst.graph;
  if (!is_k_connected(g.topology(), inst.k)) {
    throw InfeasibleError("skcs_augment: graph is not " + std::to_string(inst.k) + "-connected");
  }
  const NodeSet& terms = inst.terminals;
  std::vector<char> in_f0(g.num_edges(), 0);
  for (int level = 1; level <= inst.k; ++level) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      for (std::size_t j = i + 1; j < terms.size(); ++j) {
        for (;;) {
          AugmentNet net(g, in_f0, inst.edge_weights, terms[i], terms[j]);
          if (net.saturate_f0(level) >= level) break;
          const auto added = net.cheapest_augment();
          if (!added) {
            throw InfeasibleError("skcs_augment: no augmenting path between " + std::to_string(terms[i]) +
                                  " and " + std::to_string(terms[j]));
          }
          for (int id : *added) in_f0[static_cast<std::size_t>(id)] = 1;
        }
      }
    }
  }
  std::vector<int> ids;
  for (std::size_t id = 0; id < in_f0.size(); ++id) {
    if (in_f0[id]) ids.push_back(static_cast<int>(id));
  }
  return EdgeSubgraph(g, std::move(ids), terms);
}

BlockExtraction extract_k_block(const EdgeSubgraph& f0, const NodeSet& terminals, int k) {
  const UnitDiskGraph& g = f0.host();
  const auto f0_edges = f0.edges();
  const Graph whole(set_union(f0.node_span(), terminals), f0_edges);

  auto restrict_to = [&](const NodeSet& nodes) {
    std::vector<int> ids;
    for (int id : f0.edge_ids()) {
      const Edge& e = g.edge(id).ends;
      if (contains(nodes, e.u) && contains(nodes, e.v)) ids.push_back(id);
    }
    return EdgeSubgraph(g, std::move(ids), nodes);
  };

  NodeSet home;
  for (const NodeSet& c : whole.components()) {
    if (!terminals.empty() && contains(c, terminals.front())) home = c;
  }
  BlockExtraction fail{restrict_to(home), false};
  if (terminals.empty() || !is_subset(terminals, home)) return fail;

  Graph h = whole.induced(home);
  while (!is_k_connected(h, k)) {
    const auto sep = find_separator(h, k - 1);
    if (!sep) return fail;
    const NodeSet rest = set_difference(terminals, sep->nodes);
    if (rest.empty()) return fail;
    NodeSet keep;
    for (const NodeSet& c : h.without_nodes(sep->nodes).components()) {
      if (contains(c, rest.front())) keep = c;
    }
    if (!is_subset(rest, keep)) return fail;
    h = h.induced(set_union(keep, sep->nodes));
  }
  if (!is_subset(terminals, h.nodes()) || !is_subset_k_connected(h, terminals, k)) return fail;
  return {restrict_to(h.nodes()), true};
}

SteinerSolution solve_mnwkcsn(const UnitDiskGraph& g, const std::vector<double>& node_costs,
                              const NodeSet& terminals, int k, SkcsSolver solver, std::size_t edge_cap) {
  for (NodeId t : terminals) {
    if (t < 0 || static_cast<std::size_t>(t) >= g.size()) {
      throw ValidationError("solve_mnwkcsn: unknown terminal " + std::to_string(t));
    }
    if (node_costs.size() == g.size() && node_costs[static_cast<std::size_t>(t)] != 0.0) {
      throw ValidationError("solve_mnwkcsn: terminal " + std::to_string(t) + " must have cost zero");
    }
  }
  SkcsInstance inst{&g, make_node_set(terminals), k, derive_edge_weights(g, node_costs)};
  SteinerSolution sol;
  sol.solver = solver;
  sol.f0 = solver == SkcsSolver::exact ? skcs_exact(inst, edge_cap) : skcs_augment(inst);
  auto extraction = extract_k_block(sol.f0, inst.terminals, k);
  sol.f = std::move(extraction.block);
  sol.extraction_ok = extraction.ok;
  const NodeSet span = sol.f.node_span();
  sol.steiner_nodes = set_difference(span, inst.terminals);
  for (NodeId v : span) sol.node_cost += node_costs[static_cast<std::size_t>(v)];
  sol.edge_cost = subgraph_sum(sol.f, inst.edge_weights);
  return sol;
}

double weight_slack(const EdgeSubgraph& f, const std::vector<double>& node_costs,
                    const std::vector<double>& edge_weights, int k) {
  double c = 0.0;
  for (NodeId v : f.node_span()) c += node_costs[static_cast<std::size_t>(v)];
  return 2.0 / k * subgraph_sum(f, edge_weights) - c;
}

}  // namespace ftb
