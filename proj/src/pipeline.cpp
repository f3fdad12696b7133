#include "ftb/pipeline.hpp"

#include <chrono>
#include <string>

#include "ftb/connectivity.hpp"
#include "ftb/domset.hpp"
#include "ftb/errors.hpp"

namespace ftb {

std::string_view to_string(DsSolver s) { return s == DsSolver::exact ? "exact" : "greedy"; }

DsSolver parse_ds_solver(std::string_view name) {
  if (name == "greedy") return DsSolver::greedy;
  if (name == "exact") return DsSolver::exact;
  throw ValidationError("unknown dominating-set solver \"" + std::string(name) + "\" (expected greedy|exact)");
}

std::string_view to_string(Rung r) {
  switch (r) {
    case Rung::primary:
      return "primary";
    case Rung::f0_union_d:
      return "f0_union_d";
    case Rung::all_nodes:
      return "all_nodes";
  }
  return "primary";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

Verdict verify_kmcds(const UnitDiskGraph& g, const NodeSet& d, int k, int m) {
  for (NodeId v : d) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.size()) {
      throw ValidationError("verify_kmcds: unknown node id " + std::to_string(v));
    }
  }
  const NodeSet set = make_node_set(d);
  Verdict out;
  out.dominating = is_mfold_ds(g.topology(), set, m);
  out.connected = set.size() >= static_cast<std::size_t>(k) + 1 && is_k_connected(g.topology().induced(set), k);
  out.ok = out.dominating && out.connected;
  if (!out.dominating) {
    out.reason = "some node outside D has fewer than " + std::to_string(m) + " neighbours in D";
  } else if (!out.connected) {
    out.reason = "G[D] is not " + std::to_string(k) + "-connected";
  }
  return out;
}

WeightedSet exact_kmcds(const UnitDiskGraph& g, int k, int m, std::size_t node_cap) {
  if (g.size() > node_cap) {
    throw CapExceededError("exact_kmcds: " + std::to_string(g.size()) + " nodes exceed the oracle cap of " +
                           std::to_string(node_cap));
  }
  if (!is_k_connected(g.topology(), k)) {
    throw InfeasibleError("exact_kmcds: graph is not " + std::to_string(k) + "-connected; no feasible solution");
  }
  auto best = min_weight_feasible_set({}, g.all_nodes(), g.weights(),
                                      [&](const NodeSet& d) { return verify_kmcds(g, d, k, m).ok; });
  return *best;
}

SolveReport solve_kmcds(const ProblemSpec& spec) {
  if (spec.graph == nullptr) throw ValidationError("solve_kmcds: no graph");
  const UnitDiskGraph& g = *spec.graph;
  const int k = spec.k;
  const int m = spec.m;
  const SolveOptions& opt = spec.options;
  if (k < 1) throw ValidationError("k must be at least 1");
  if (m < 0) throw ValidationError("m must be nonnegative");
  if (m < k && !opt.allow_m_lt_k) {
    throw ValidationError("m < k is rejected unless explicitly allowed (m=" + std::to_string(m) +
                          ", k=" + std::to_string(k) + ")");
  }
  if (!is_k_connected(g.topology(), k)) {
    throw InfeasibleError("graph is not " + std::to_string(k) + "-connected; no feasible solution exists");
  }

  SolveReport r;
  r.k = k;
  r.m = m;

  auto t0 = Clock::now();
  r.ds_set = opt.ds == DsSolver::exact ? exact_mfold_ds(g, m, opt.ds_node_cap) : greedy_mfold_ds(g, m);
  r.ds_weight = node_weight(g, r.ds_set);
  r.ds_ms = elapsed_ms(t0);

  t0 = Clock::now();
  std::vector<double> costs = g.weights();
  for (NodeId v : r.ds_set) costs[static_cast<std::size_t>(v)] = 0.0;
  const SteinerSolution steiner = solve_mnwkcsn(g, costs, r.ds_set, k, opt.skcs, opt.skcs_edge_cap);
  r.extraction_ok = steiner.extraction_ok;
  r.weight_slack = weight_slack(steiner.f, costs, derive_edge_weights(g, costs), k);

  NodeSet answer = set_union(steiner.f.node_span(), r.ds_set);
  Verdict verdict = verify_kmcds(g, answer, k, m);
  r.rung = Rung::primary;
  if (!steiner.extraction_ok || !verdict.ok) {
    answer = set_union(steiner.f0.node_span(), r.ds_set);
    verdict = verify_kmcds(g, answer, k, m);
    r.rung = Rung::f0_union_d;
    if (!verdict.ok) {
      answer = g.all_nodes();
      verdict = verify_kmcds(g, answer, k, m);
      r.rung = Rung::all_nodes;
    }
  }
  r.connect_ms = elapsed_ms(t0);

  r.solution = answer;
  r.weight = node_weight(g, answer);
  r.added = set_difference(answer, r.ds_set);
  r.added_weight = node_weight(g, r.added);
  r.verdict = verdict;
  r.feasible = verdict.ok;

  if (opt.run_oracle && g.size() <= opt.oracle_cap) {
    t0 = Clock::now();
    const WeightedSet best = exact_kmcds(g, k, m, opt.oracle_cap);
    r.oracle_weight = best.weight;
    if (best.weight > 0.0) {
      r.empirical_ratio = r.weight / best.weight;
    } else if (r.weight == 0.0) {
      r.empirical_ratio = 1.0;
    }
    r.oracle_ms = elapsed_ms(t0);
  }

  if (m >= k) {
    r.solver_metadata = {
        {"alpha", opt.ds == DsSolver::exact ? "1 (exact m-fold dominating set)"
                                            : "weighted greedy m-fold dominating set (no proven ratio)"},
        {"rho", opt.skcs == SkcsSolver::exact ? "1 (exact SkCS)" : "successive augmentation SkCS (no proven ratio)"},
        {"gamma", k == 2 ? "2.5*rho" : "5*rho"},
        {"guarantee", "alpha+gamma on the primary rung"},
    };
  }
  return r;
}

}  // namespace ftb
