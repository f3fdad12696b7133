#include "ftb/spanning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ftb/connectivity.hpp"
#include "ftb/errors.hpp"

namespace ftb {

namespace {

constexpr double kThird = std::numbers::pi / 3.0;

std::string id_list(const NodeSet& ids) {
  std::string out;
  for (NodeId v : ids) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

int edge_between(const UnitDiskGraph& g, NodeId a, NodeId b) {
  const auto id = g.edge_id(a, b);
  if (!id) throw std::logic_error("no host edge " + std::to_string(a) + "-" + std::to_string(b));
  return *id;
}

// Keeps the original node span so that dropping edges never un-spans a node.
EdgeSubgraph respan(const EdgeSubgraph& like, std::vector<int> ids, const NodeSet& span) {
  return EdgeSubgraph(like.host(), std::move(ids), span);
}

}  // namespace

double angle_at(const UnitDiskGraph& g, NodeId apex, NodeId a, NodeId b) {
  const Eigen::Vector2d p = g.node(a).position - g.node(apex).position;
  const Eigen::Vector2d q = g.node(b).position - g.node(apex).position;
  const double cross = p.x() * q.y() - p.y() * q.x();
  return std::atan2(std::abs(cross), p.dot(q));
}

EdgeSubgraph reduce_to_minimal(const EdgeSubgraph& f, int k) {
  const NodeSet span = f.node_span();
  Graph current = f.to_graph();
  if (!is_k_connected(current, k)) {
    throw InfeasibleError("reduce_to_minimal: input is not " + std::to_string(k) + "-connected");
  }
  std::vector<int> order = f.edge_ids();
  const UnitDiskGraph& g = f.host();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const double la = g.edge(a).length;
    const double lb = g.edge(b).length;
    if (la != lb) return la > lb;
    return g.edge(a).ends < g.edge(b).ends;
  });
  std::vector<int> kept = f.edge_ids();
  for (int id : order) {
    const Edge e = g.edge(id).ends;
    Graph trial = current.without_edge(e);
    if (is_k_connected(trial, k)) {
      current = std::move(trial);
      kept.erase(std::find(kept.begin(), kept.end(), id));
    }
  }
  return respan(f, std::move(kept), span);
}

MssReport exact_k_mss(const UnitDiskGraph& g, int k, const ExactMssOptions& options) {
  if (k < 1) throw ValidationError("exact_k_mss: k must be at least 1");
  const NodeSet span = options.span.empty() ? g.all_nodes() : make_node_set(options.span);

  std::vector<int> cand;
  for (std::size_t id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(static_cast<int>(id)).ends;
    if (contains(span, e.u) && contains(span, e.v)) cand.push_back(static_cast<int>(id));
  }
  std::stable_sort(cand.begin(), cand.end(),
                   [&](int a, int b) { return g.edge(a).length < g.edge(b).length; });
  if (cand.size() > options.edge_cap) {
    throw CapExceededError("exact_k_mss: " + std::to_string(cand.size()) + " edges exceed the cap of " +
                           std::to_string(options.edge_cap));
  }
  if (!is_k_connected(EdgeSubgraph(g, cand, span).to_graph(), k)) {
    throw InfeasibleError("exact_k_mss: graph is not " + std::to_string(k) + "-connected");
  }

  const std::size_t m = cand.size();
  const std::size_t n = span.size();
  auto local = [&](NodeId v) { return static_cast<std::size_t>(std::lower_bound(span.begin(), span.end(), v) - span.begin()); };
  std::vector<std::size_t> end_a(m), end_b(m);
  std::vector<double> len(m);
  std::vector<std::vector<std::size_t>> incident(n);  // positions in cand, ascending
  for (std::size_t i = 0; i < m; ++i) {
    const UdgEdge& e = g.edge(cand[i]);
    end_a[i] = local(e.ends.u);
    end_b[i] = local(e.ends.v);
    len[i] = e.length;
    incident[end_a[i]].push_back(i);
    incident[end_b[i]].push_back(i);
  }

  std::vector<char> chosen(m, 0);
  std::vector<int> degree(n, 0);
  double best = std::numeric_limits<double>::infinity();
  std::vector<char> best_set;

  auto lower_bound_from = [&](std::size_t pos, double acc) {
    double extra = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      int need = k - degree[v];
      if (need <= 0) continue;
      for (std::size_t i : incident[v]) {
        if (i < pos) continue;
        extra += len[i];
        if (--need == 0) break;
      }
      if (need > 0) return std::numeric_limits<double>::infinity();
    }
    return acc + 0.5 * extra;
  };

  auto feasible_now = [&]() {
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] < k) return false;
    }
    std::vector<int> ids;
    for (std::size_t i = 0; i < m; ++i) {
      if (chosen[i]) ids.push_back(cand[i]);
    }
    return is_k_connected(EdgeSubgraph(g, std::move(ids), span).to_graph(), k);
  };

  auto search = [&](auto&& self, std::size_t pos, double acc) -> void {
    if (feasible_now()) {
      if (acc < best - 1e-12) {
        best = acc;
        best_set = chosen;
      }
      return;
    }
    if (pos == m) return;
    if (lower_bound_from(pos, acc) >= best - 1e-12) return;
    chosen[pos] = 1;
    ++degree[end_a[pos]];
    ++degree[end_b[pos]];
    self(self, pos + 1, acc + len[pos]);
    chosen[pos] = 0;
    --degree[end_a[pos]];
    --degree[end_b[pos]];
    self(self, pos + 1, acc);
  };
  search(search, 0, 0.0);

  std::vector<int> ids;
  for (std::size_t i = 0; i < m; ++i) {
    if (best_set[i]) ids.push_back(cand[i]);
  }
  return check_mss_properties(EdgeSubgraph(g, std::move(ids), span), k);
}

EdgeSubgraph local_improve(const EdgeSubgraph& f, int k) {
  const NodeSet span = f.node_span();
  const UnitDiskGraph& g = f.host();
  EdgeSubgraph current = respan(f, f.edge_ids(), span);
  if (!is_k_connected(current.to_graph(), k)) {
    throw InfeasibleError("local_improve: input is not " + std::to_string(k) + "-connected");
  }

  auto try_exchange = [&]() -> bool {
    const Graph graph = current.to_graph();
    const double before = subgraph_length(current);
    for (NodeId u : span) {
      const NodeSet nb = graph.neighbors(u);
      if (nb.size() < 3) continue;
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          const NodeId a = nb[i];
          const NodeId b = nb[j];
          if (angle_at(g, u, a, b) >= kThird) continue;
          const double la = g.edge(edge_between(g, u, a)).length;
          const double lb = g.edge(edge_between(g, u, b)).length;
          const NodeId far = la >= lb ? a : b;
          // |ab| < max(|ua|, |ub|) <= 1 below pi/3, so the closing edge is in G.
          const int close = edge_between(g, a, b);
          EdgeSubgraph next = current.without_edge(edge_between(g, u, far)).with_edge(close);
          next = respan(current, next.edge_ids(), span);
          if (subgraph_length(next) < before - 1e-12 && is_k_connected(next.to_graph(), k)) {
            current = std::move(next);
            return true;
          }
        }
      }
    }
    return false;
  };
  while (try_exchange()) {
  }
  return current;
}

EdgeSubgraph degree_six_reduction(const EdgeSubgraph& f) {
  const NodeSet span = f.node_span();
  const UnitDiskGraph& g = f.host();
  EdgeSubgraph current = respan(f, f.edge_ids(), span);
  {
    const Graph graph = current.to_graph();
    if (!is_k_connected(graph, 2)) throw ValidationError("degree_six_reduction: input is not 2-connected");
    for (NodeId u : span) {
      const NodeSet nb = graph.neighbors(u);
      if (nb.size() < 3) continue;
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (angle_at(g, u, nb[i], nb[j]) < kThird - kAngleTolerance) {
            throw ValidationError("degree_six_reduction: angle below pi/3 at node " + std::to_string(u));
          }
        }
      }
    }
  }

  for (;;) {
    const Graph graph = current.to_graph();
    NodeId hub = -1;
    for (NodeId u : span) {
      if (graph.degree(u) >= 6) {
        hub = u;
        break;
      }
    }
    if (hub < 0) return current;

    // Clockwise from the positive x-axis.
    NodeSet nb = graph.neighbors(hub);
    auto clockwise = [&](NodeId v) {
      const Eigen::Vector2d d = g.node(v).position - g.node(hub).position;
      double a = -std::atan2(d.y(), d.x());
      if (a < 0.0) a += 2.0 * std::numbers::pi;
      return a;
    };
    std::stable_sort(nb.begin(), nb.end(), [&](NodeId a, NodeId b) { return clockwise(a) < clockwise(b); });

    const double before = subgraph_length(current);
    bool applied = false;
    const std::size_t d = nb.size();
    for (std::size_t i = 0; i < d && !applied; ++i) {
      const NodeId ui = nb[i];
      const NodeId prev = nb[(i + d - 1) % d];
      const auto repl = g.edge_id(ui, prev);
      if (!repl || current.has_edge(*repl) || graph.degree(prev) > 4) continue;
      EdgeSubgraph next = current.without_edge(edge_between(g, hub, ui)).with_edge(*repl);
      next = respan(current, next.edge_ids(), span);
      if (std::abs(subgraph_length(next) - before) <= kLengthTolerance && is_k_connected(next.to_graph(), 2)) {
        current = std::move(next);
        applied = true;
      }
    }
    if (!applied) {
      throw ValidationError("degree_six_reduction: no legal replacement edge at node " + std::to_string(hub) +
                            " (neighbours " + id_list(nb) + ")");
    }
  }
}

MssReport check_mss_properties(const EdgeSubgraph& f, int k) {
  MssReport report;
  report.subgraph = f;
  report.total_length = subgraph_length(f);
  const UnitDiskGraph& g = f.host();
  const Graph graph = f.to_graph();
  report.max_degree = graph.max_degree();

  for (NodeId u : graph.nodes()) {
    const NodeSet nb = graph.neighbors(u);
    const int deg = static_cast<int>(nb.size());
    if (deg > 5 * k) {
      report.violations.push_back({"degree_bound", {u}, static_cast<double>(deg),
                                         "degree " + std::to_string(deg) + " exceeds 5k", deg});
    }
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const NodeId a = nb[i];
        const NodeId b = nb[j];
        const double theta = angle_at(g, u, a, b);
        if (!report.min_adjacent_edge_angle || theta < *report.min_adjacent_edge_angle) {
          report.min_adjacent_edge_angle = theta;
        }
        if (k != 2) continue;
        if (theta < kThird - kAngleTolerance) {
          report.violations.push_back({"angle", {u, a, b}, theta, "adjacent edges meet below pi/3", deg});
        }
        if (deg >= 3 && graph.adjacent(a, b)) {
          report.violations.push_back(
              {"neighbor_independence", {u, a, b}, 0.0, "two neighbours of a degree>=3 node are adjacent", deg});
        }
        if (std::abs(theta - kThird) <= kAngleTolerance) {
          const int ea = edge_between(g, u, a);
          const int eb = edge_between(g, u, b);
          const double la = g.edge(ea).length;
          const double lb = g.edge(eb).length;
          if (std::abs(la - lb) > kLengthTolerance) {
            report.violations.push_back(
                {"equilateral", {u, a, b}, la - lb, "edges at angle pi/3 differ in length", deg});
            continue;
          }
          const auto close = g.edge_id(a, b);
          bool ok = close.has_value();
          for (int drop : {ea, eb}) {
            if (!ok) break;
            EdgeSubgraph alt(g, f.without_edge(drop).with_edge(*close).edge_ids(), f.node_span());
            ok = std::abs(subgraph_length(alt) - report.total_length) <= kLengthTolerance &&
                 is_k_connected(alt.to_graph(), 2);
          }
          if (!ok) {
            report.violations.push_back(
                {"equilateral", {u, a, b}, 0.0, "equilateral exchange does not give an equal-length 2-connected subgraph", deg});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace ftb
