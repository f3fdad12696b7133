#include <set>

#include "doctest.h"

#include "ftb/bench.hpp"
#include "ftb/connectivity.hpp"
#include "ftb/errors.hpp"
#include "ftb/udg.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace ftb;

namespace {

bool is_path(const Graph& g, const Path& p, NodeId u, NodeId v) {
  if (p.empty() || p.front() != u || p.back() != v) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!g.adjacent(p[i], p[i + 1])) return false;
  }
  return true;
}

bool incidence_is_tree(const BlockTree& t) {
  const int nb = static_cast<int>(t.blocks.size());
  const int ns = static_cast<int>(t.separators.size());
  NodeSet nodes;
  for (int i = 0; i < nb + ns; ++i) nodes.push_back(i);
  Graph bip(nodes);
  for (auto [b, s] : t.incidence) bip.add_edge(b, nb + s);
  return bip.is_connected() && bip.num_edges() + 1 == bip.size() && t.incidence.size() == bip.num_edges();
}

}  // namespace

TEST_CASE("max_disjoint_paths on fixtures") {
  const Graph sq = fixtures::sq4().topology();
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) CHECK(max_disjoint_paths(sq, u, v).count == 3);
  }
  CHECK(max_disjoint_paths(fixtures::path3().topology(), 0, 2).count == 1);
  CHECK(max_disjoint_paths(fixtures::pent5().topology(), 0, 1).count == 2);
  CHECK_THROWS_AS(max_disjoint_paths(sq, 1, 1), ValidationError);
  CHECK_THROWS_AS(max_disjoint_paths(sq, 1, 8), ValidationError);
  CHECK(max_disjoint_paths(sq, 0, 1, false, 2).count == 2);
}

TEST_CASE("witness paths are internally disjoint") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = testing::random_graph(9, 0.45, seed);
    const DisjointPaths r = max_disjoint_paths(g, 0, 8, true);
    CHECK(r.witnesses.size() == static_cast<std::size_t>(r.count));
    std::set<NodeId> inner;
    std::size_t total = 0;
    for (const Path& p : r.witnesses) {
      CHECK(is_path(g, p, 0, 8));
      for (std::size_t i = 1; i + 1 < p.size(); ++i) inner.insert(p[i]);
      total += p.size() - 2;
    }
    CHECK(inner.size() == total);
  }
}

TEST_CASE("Menger duality against exhaustive separating sets") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 5 + static_cast<int>(seed % 6);
    const Graph g = testing::random_graph(n, 0.3 + 0.05 * static_cast<double>(seed % 7), seed);
    const auto a = oracle::from_graph(g);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const int flow = max_disjoint_paths(g, u, v).count;
        CHECK(flow == oracle::local_connectivity(a, oracle::full(n), u, v));
      }
    }
  }
}

TEST_CASE("vertex_connectivity") {
  CHECK(vertex_connectivity(fixtures::sq4().topology()) == 3);
  CHECK(vertex_connectivity(fixtures::pent5().topology()) == 2);
  CHECK(vertex_connectivity(fixtures::path3().topology()) == 1);
  CHECK(vertex_connectivity(fixtures::hex7().topology()) == 3);
  CHECK_THROWS_AS(vertex_connectivity(Graph({4})), ValidationError);
  Graph split({0, 1, 2});
  split.add_edge(0, 1);
  CHECK(vertex_connectivity(split) == 0);

  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 3 + static_cast<int>(seed % 12);
    const Graph g = testing::random_graph(n, 0.55, seed * 7 + 1);
    const auto a = oracle::from_graph(g);
    const int expect = oracle::kappa(a, oracle::full(n));
    CHECK(vertex_connectivity(g) == expect);
    for (int k = 1; k <= 4; ++k) CHECK(is_k_connected(g, k) == oracle::k_connected(a, oracle::full(n), k));
  }
}

TEST_CASE("vertex_connectivity uses the pair-family shortcut above 12 nodes") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 13 + static_cast<int>(seed % 4);
    const Graph g = testing::random_graph(n, 0.6, seed + 500);
    CHECK(vertex_connectivity(g) == oracle::kappa(oracle::from_graph(g), oracle::full(n)));
  }
}

TEST_CASE("find_separator") {
  CHECK(find_separator(fixtures::path3().topology(), 1)->nodes == NodeSet{1});
  CHECK_FALSE(find_separator(fixtures::sq4().topology(), 2).has_value());
  CHECK(find_separator(fixtures::pent5().topology(), 2)->nodes == NodeSet{0, 2});
  CHECK_FALSE(find_separator(fixtures::pent5().topology(), 1).has_value());

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = testing::random_graph(8, 0.5, seed + 90);
    if (!g.is_connected() || g.is_complete()) continue;
    const auto s = find_separator(g, 8);
    REQUIRE(s.has_value());
    CHECK(static_cast<int>(s->size()) == vertex_connectivity(g));
    CHECK(g.without_nodes(s->nodes).components().size() >= 2);
  }
}

TEST_CASE("is_subset_k_connected") {
  const Graph pent = fixtures::pent5().topology();
  CHECK(is_subset_k_connected(pent, pent.nodes(), 2));
  CHECK_FALSE(is_subset_k_connected(fixtures::path3().topology(), {0, 2}, 2));
  CHECK(is_subset_k_connected(fixtures::sq4().topology(), {1, 3}, 3));
  CHECK(is_subset_k_connected(pent, {3}, 4));

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = testing::random_graph(8, 0.5, seed + 300);
    const auto a = oracle::from_graph(g);
    const NodeSet t{1, 4, 6};
    for (int k = 1; k <= 3; ++k) {
      bool expect = true;
      for (int s : t) {
        for (int u : t) {
          if (s < u) expect = expect && oracle::local_connectivity(a, oracle::full(8), s, u) >= k;
        }
      }
      CHECK(is_subset_k_connected(g, t, k) == expect);
    }
  }
}

TEST_CASE("marked components of fixtures") {
  const auto pent = marked_components(fixtures::pent5().topology(), {{0, 2}});
  REQUIRE(pent.size() == 2);
  CHECK(pent[0].graph.nodes() == NodeSet{0, 1, 2});
  CHECK(pent[0].graph.num_edges() == 3);
  CHECK(pent[0].real_edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(pent[1].graph.nodes() == NodeSet{0, 2, 3, 4});
  CHECK(pent[1].virtual_edges == std::vector<Edge>{{0, 2}});
  CHECK(pent[1].graph.num_edges() == 4);

  const auto path = marked_components(fixtures::path3().topology(), {{1}});
  REQUIRE(path.size() == 2);
  CHECK(path[0].graph.edges() == std::vector<Edge>{{0, 1}});
  CHECK(path[1].graph.edges() == std::vector<Edge>{{1, 2}});
  CHECK(path[0].virtual_edges.empty());

  CHECK_THROWS_AS(marked_components(fixtures::sq4().topology(), {{0}}), ValidationError);
}

TEST_CASE("marked components of k-separators stay k-connected") {
  int checked = 0;
  for (int k = 1; k <= 3; ++k) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const auto g = random_k_connected_instance(9 + static_cast<int>(seed % 3), k, seed + 17 * k);
      const Graph& topo = g.topology();
      if (vertex_connectivity(topo) != k) continue;
      const auto s = find_separator(topo, k);
      REQUIRE(s.has_value());
      for (const auto& mc : marked_components(topo, *s)) {
        CHECK(is_k_connected(mc.graph, k));
        ++checked;
      }
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("k_block_tree on fixtures") {
  const BlockTree path = k_block_tree(fixtures::path3().topology(), 1);
  CHECK(path.blocks == std::vector<NodeSet>{{0, 1}, {1, 2}});
  REQUIRE(path.separators.size() == 1);
  CHECK(path.separators[0].nodes == NodeSet{1});
  CHECK(incidence_is_tree(path));
  CHECK(path.leaf_blocks() == std::vector<int>{0, 1});

  const BlockTree sq = k_block_tree(fixtures::sq4().topology(), 3);
  CHECK(sq.blocks == std::vector<NodeSet>{{0, 1, 2, 3}});
  CHECK(sq.separators.empty());

  const BlockTree bow = k_block_tree(fixtures::bowtie().topology(), 1);
  CHECK(bow.blocks.size() == 2);
  CHECK(bow.separators.size() == 1);
  CHECK(bow.separators[0].nodes == NodeSet{0});
  CHECK(incidence_is_tree(bow));

  CHECK_THROWS_AS(k_block_tree(fixtures::path3().topology(), 2), InfeasibleError);
}

TEST_CASE("k_block_tree shape on random k-connected graphs") {
  for (int k = 1; k <= 3; ++k) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto g = random_k_connected_instance(10, k, seed * 3 + k, {.mean_degree = 2.0 * k + 1.5});
      const Graph& topo = g.topology();
      const BlockTree t = k_block_tree(topo, k);
      CHECK(incidence_is_tree(t));
      std::set<Edge> pasted;
      for (const auto& edges : t.block_real_edges) pasted.insert(edges.begin(), edges.end());
      const auto all = topo.edges();
      CHECK(std::vector<Edge>(pasted.begin(), pasted.end()) == all);
      for (auto [b, s] : t.incidence) CHECK(is_subset(t.separators[s].nodes, t.blocks[b]));
      for (std::size_t b = 0; b < t.blocks.size(); ++b) {
        const Graph block = t.block_graph(static_cast<int>(b));
        const bool clique = block.size() == static_cast<std::size_t>(k) + 1 && block.is_complete();
        CHECK((clique || is_k_connected(block, k + 1)));
      }
    }
  }
}

TEST_CASE("joining a node to k nodes keeps k-connectivity") {
  for (int k = 1; k <= 3; ++k) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const int n = 6 + static_cast<int>(seed % 6);
      const auto g = random_k_connected_instance(n, k, seed + 1000 * k);
      NodeSet nodes = g.all_nodes();
      nodes.push_back(n);
      Graph ext(nodes, g.topology().edges());
      for (int i = 0; i < k + static_cast<int>(seed % 2); ++i) ext.add_edge(n, (i + static_cast<int>(seed)) % n);
      CHECK(vertex_connectivity(ext) >= k);
    }
  }
}
