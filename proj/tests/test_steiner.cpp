#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>

#include "doctest.h"

#include "ftb/bench.hpp"
#include "ftb/connectivity.hpp"
#include "ftb/errors.hpp"
#include "ftb/steiner.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace ftb;

namespace {

SkcsInstance instance(const UnitDiskGraph& g, NodeSet t, int k) {
  return {&g, std::move(t), k, derive_edge_weights(g, g.weights())};
}

NodeSet pick_terminals(const UnitDiskGraph& g, std::uint64_t seed, int count) {
  NodeSet t;
  for (int i = 0; static_cast<int>(t.size()) < count; ++i) {
    const NodeId v = static_cast<NodeId>(mix_seed(seed, i) % g.size());
    if (!contains(t, v)) t = set_union(t, {v});
  }
  return t;
}

}  // namespace

TEST_CASE("derive_edge_weights") {
  const auto pair = build_udg({{0, {0, 0}, 2.0}, {1, {0.5, 0}, 4.0}});
  CHECK(derive_edge_weights(pair, pair.weights()) == std::vector<double>{3.0});
  CHECK(derive_edge_weights(pair, {0.0, 0.0}) == std::vector<double>{0.0});
  CHECK_THROWS_AS(derive_edge_weights(pair, {1.0}), ValidationError);

  const auto pent = fixtures::pent5();
  const auto w = derive_edge_weights(pent, pent.weights());
  CHECK(std::accumulate(w.begin(), w.end(), 0.0) == doctest::Approx(5.0));
}

TEST_CASE("edge weights satisfy the handshake identity on every subgraph") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_instance(10, 2.0, {0.0, 5.0}, seed);
    const auto c = g.weights();
    const auto w = derive_edge_weights(g, c);
    std::vector<int> pick;
    for (int e = 0; e < static_cast<int>(g.num_edges()); ++e) {
      if (mix_seed(seed, e) % 2) pick.push_back(e);
    }
    const EdgeSubgraph f(g, pick);
    const Graph fg = f.to_graph();
    double half = 0.0;
    for (NodeId v : fg.nodes()) half += c[v] * fg.degree(v);
    CHECK(subgraph_sum(f, w) == doctest::Approx(half / 2));
  }
}

TEST_CASE("skcs_exact on fixtures") {
  const auto pent = fixtures::pent5();
  CHECK(skcs_exact(instance(pent, pent.all_nodes(), 2)) == EdgeSubgraph::all_edges(pent));

  const auto sq = fixtures::sq4();
  const auto inst1 = instance(sq, {0, 1}, 1);
  const EdgeSubgraph one = skcs_exact(inst1);
  CHECK(one.edge_ids() == std::vector<int>{*sq.edge_id(0, 1)});
  CHECK(subgraph_sum(one, inst1.edge_weights) == 1.0);

  const auto inst3 = instance(sq, {0, 1}, 3);
  const EdgeSubgraph three = skcs_exact(inst3);
  CHECK(three.node_span() == NodeSet{0, 1, 2, 3});
  CHECK(subgraph_sum(three, inst3.edge_weights) ==
        doctest::Approx(oracle::min_skcs_weight(sq, inst3.edge_weights, oracle::to_mask({0, 1}), 3)));

  CHECK_THROWS_AS(skcs_exact(instance(fixtures::path3(), {0, 2}, 2)), InfeasibleError);
  CHECK_THROWS_AS(skcs_exact(instance(sq, {0, 1}, 1), 3), CapExceededError);
}

TEST_CASE("skcs_augment on fixtures") {
  const auto pent = fixtures::pent5();
  CHECK(skcs_augment(instance(pent, pent.all_nodes(), 2)) == EdgeSubgraph::all_edges(pent));

  const auto sq = fixtures::sq4();
  const auto inst = instance(sq, {0, 1}, 2);
  const EdgeSubgraph f = skcs_augment(inst);
  CHECK(f.has_edge(*sq.edge_id(0, 1)));
  CHECK(f.num_edges() == 3);
  CHECK(subgraph_sum(f, inst.edge_weights) == doctest::Approx(3.0));
  CHECK(max_disjoint_paths(f.to_graph(), 0, 1).count == 2);

  CHECK_THROWS_AS(skcs_augment(instance(fixtures::path3(), {0, 2}, 2)), InfeasibleError);
}

TEST_CASE("SkCS solvers against the exhaustive edge-subset oracle") {
  for (int k = 1; k <= 3; ++k) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      KConnectedOptions opt{.mean_degree = 2.0 * k + 1.0, .max_edges = 15, .weights = {0.5, 4.0}};
      const auto g = random_k_connected_instance(7 + static_cast<int>(seed % 2), k, seed + 60 * k, opt);
      const auto t = pick_terminals(g, seed, k + 1);
      const auto inst = instance(g, t, k);
      const double best = oracle::min_skcs_weight(g, inst.edge_weights, oracle::to_mask(t), k);
      const EdgeSubgraph ex = skcs_exact(inst);
      const EdgeSubgraph aug = skcs_augment(inst);
      CHECK(subgraph_sum(ex, inst.edge_weights) == doctest::Approx(best));
      CHECK(subgraph_sum(aug, inst.edge_weights) >= subgraph_sum(ex, inst.edge_weights) - 1e-9);
      CHECK(is_subset_k_connected(ex.to_graph(), t, k));
      CHECK(is_subset_k_connected(aug.to_graph(), t, k));
    }
  }
}

TEST_CASE("extract_k_block") {
  const auto pent = fixtures::pent5();
  const EdgeSubgraph cycle = EdgeSubgraph::all_edges(pent);
  const BlockExtraction same = extract_k_block(cycle, pent.all_nodes(), 2);
  CHECK(same.ok);
  CHECK(same.block.edge_ids() == cycle.edge_ids());

  std::vector<PointNode> pts = pent.nodes();
  pts.push_back({5, pts[0].position + Eigen::Vector2d(0.9, 0.0), 1.0});
  const auto tail = build_udg(pts);
  REQUIRE(tail.num_edges() == 6);
  const BlockExtraction cut = extract_k_block(EdgeSubgraph::all_edges(tail), {0, 1, 2, 3, 4}, 2);
  CHECK(cut.ok);
  CHECK(cut.block.node_span() == NodeSet{0, 1, 2, 3, 4});
  CHECK(cut.block.num_edges() == 5);

  for (int k = 2; k <= 3; ++k) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const auto g = random_k_connected_instance(10, k, seed + 11 * k, {.weights = {1.0, 3.0}});
      const auto t = pick_terminals(g, seed, k + 1);
      const EdgeSubgraph f0 = skcs_augment(instance(g, t, k));
      const BlockExtraction ex = extract_k_block(f0, t, k);
      CHECK(node_weight(g, ex.block.node_span()) <= node_weight(g, f0.node_span()) + 1e-12);
      CHECK(is_subset(ex.block.node_span(), f0.node_span()));
      if (ex.ok) {
        CHECK(is_k_connected(ex.block.to_graph(), k));
        CHECK(is_subset(t, ex.block.node_span()));
      }
    }
  }
}

TEST_CASE("solve_mnwkcsn on fixtures") {
  const auto sq = fixtures::sq4();
  const SteinerSolution all = solve_mnwkcsn(sq, {0, 0, 0, 0}, sq.all_nodes(), 2, SkcsSolver::exact);
  CHECK(all.steiner_nodes.empty());
  CHECK(all.node_cost == 0.0);
  CHECK(all.extraction_ok);
  CHECK(is_k_connected(all.f.to_graph(), 2));

  const auto pent = fixtures::pent5();
  for (SkcsSolver s : {SkcsSolver::exact, SkcsSolver::augment}) {
    const SteinerSolution r = solve_mnwkcsn(pent, {0, 0, 0, 1, 1}, {0, 1, 2}, 2, s);
    CHECK(r.steiner_nodes == NodeSet{3, 4});
    CHECK(r.node_cost == 2.0);
    CHECK(r.solver == s);
  }
  CHECK_THROWS_AS(solve_mnwkcsn(pent, {1, 0, 0, 1, 1}, {0, 1, 2}, 2, SkcsSolver::exact), ValidationError);
}

TEST_CASE("Steiner networks against the exhaustive node-subset oracle") {
  int strictly_worse = 0;
  int exact_above_augment = 0;
  for (int k = 2; k <= 3; ++k) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const auto g = random_k_connected_instance(8 + static_cast<int>(seed % 3), k, seed + 5 * k,
                                                 {.max_edges = 22, .weights = {1.0, 5.0}});
      const auto t = pick_terminals(g, seed + 3, k);
      std::vector<double> cost = g.weights();
      for (NodeId v : t) cost[v] = 0.0;
      const double best = oracle::min_steiner_network(oracle::from_graph(g.topology()), cost, oracle::to_mask(t), k);
      std::optional<double> exact_cost;
      for (SkcsSolver s : {SkcsSolver::exact, SkcsSolver::augment}) {
        const SteinerSolution r = solve_mnwkcsn(g, cost, t, k, s);
        const auto w = derive_edge_weights(g, cost);
        CHECK(r.edge_cost == doctest::Approx(subgraph_sum(r.f, w)));
        CHECK(r.steiner_nodes == set_difference(r.f.node_span(), t));
        if (!r.extraction_ok) continue;
        const NodeSet used = set_union(t, r.steiner_nodes);
        CHECK(is_k_connected(g.topology().induced(used), k));
        CHECK(r.node_cost >= best - 1e-9);
        CHECK(weight_slack(r.f, cost, w, k) >= -1e-9);
        if (s == SkcsSolver::exact) exact_cost = r.node_cost;
        if (s == SkcsSolver::augment && exact_cost && *exact_cost > r.node_cost + 1e-9) ++exact_above_augment;
        if (s == SkcsSolver::exact && r.node_cost > best + 1e-9) ++strictly_worse;
      }
    }
  }
  MESSAGE("exact-SkCS Steiner networks strictly above the node-weighted optimum: " << strictly_worse);
  MESSAGE("instances where exact SkCS costs more node weight than augmentation: " << exact_above_augment);
}

TEST_CASE("weight slack is zero exactly on k-regular subgraphs") {
  const auto pent = fixtures::pent5();
  const auto c = pent.weights();
  const auto w = derive_edge_weights(pent, c);
  CHECK(weight_slack(EdgeSubgraph::all_edges(pent), c, w, 2) == doctest::Approx(0.0));
  const auto sq = fixtures::sq4();
  CHECK(weight_slack(EdgeSubgraph::all_edges(sq), sq.weights(), derive_edge_weights(sq, sq.weights()), 2) ==
        doctest::Approx(2.0));
}
