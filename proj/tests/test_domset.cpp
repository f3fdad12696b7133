#include "doctest.h"

#include "ftb/domset.hpp"
#include "ftb/errors.hpp"
#include "ftb/subset_search.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace ftb;

TEST_CASE("is_mfold_ds on fixtures") {
  CHECK(is_mfold_ds(fixtures::sq4(), {0, 1}, 2));
  CHECK(is_mfold_ds(fixtures::path3(), {0, 2}, 2));
  CHECK_FALSE(is_mfold_ds(fixtures::pent5(), {0, 1}, 2));
  CHECK(is_mfold_ds(fixtures::pent5(), {0, 1, 2, 3, 4}, 7));
  CHECK(is_mfold_ds(fixtures::pent5(), {}, 0));
  CHECK_THROWS_AS(is_mfold_ds(fixtures::sq4(), {0, 9}, 1), ValidationError);
}

TEST_CASE("greedy on fixtures") {
  const auto star = fixtures::star5();
  CHECK(greedy_mfold_ds(star, 1) == NodeSet{0});
  CHECK(greedy_mfold_ds(fixtures::path3(), 2) == NodeSet{0, 2});
  const NodeSet sq = greedy_mfold_ds(fixtures::sq4(), 2);
  CHECK(sq.size() == 2);
  CHECK(node_weight(fixtures::sq4(), sq) == 2.0);
  CHECK(greedy_mfold_ds(fixtures::sq4(), 0).empty());
  CHECK(greedy_mfold_ds(fixtures::sq4(), 9) == NodeSet{0, 1, 2, 3});
}

TEST_CASE("exact on fixtures") {
  CHECK(exact_mfold_ds(fixtures::path3(), 2) == NodeSet{0, 2});
  CHECK(exact_mfold_ds(fixtures::sq4(), 3) == NodeSet{0, 1, 2});
  CHECK(exact_mfold_ds(fixtures::pent5(), 0).empty());
  CHECK(exact_mfold_ds(fixtures::star5(), 1) == NodeSet{0});
  CHECK_THROWS_AS(exact_mfold_ds(random_instance(12, 2.0, {}, 1), 1, 10), CapExceededError);
}

TEST_CASE("forced members") {
  CHECK(forced_members(fixtures::path3().topology(), 2) == NodeSet{0, 2});
  CHECK(forced_members(fixtures::sq4().topology(), 3).empty());
  CHECK(forced_members(fixtures::sq4().topology(), 4) == NodeSet{0, 1, 2, 3});
}

TEST_CASE("increasing weight subsets visit every subset in order") {
  const std::vector<double> w{3.0, 1.0, 2.0, 2.0, 0.5};
  IncreasingWeightSubsets subsets({0, 1, 2, 3, 4}, w);
  std::vector<NodeSet> seen;
  double last = -1.0;
  while (auto s = subsets.next()) {
    CHECK(s->weight >= last);
    last = s->weight;
    double total = 0.0;
    for (NodeId v : s->nodes) total += w[v];
    CHECK(total == doctest::Approx(s->weight));
    seen.push_back(s->nodes);
  }
  CHECK(seen.size() == 32);
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("greedy and exact against the exhaustive oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 5 + static_cast<int>(seed % 8);
    const auto g = random_instance(n, 1.8, {0.5, 4.0}, seed + 5);
    const auto a = oracle::from_graph(g.topology());
    const auto w = g.weights();
    for (int m = 0; m <= 3; ++m) {
      const double best = oracle::min_mfold_ds(a, w, m);
      const NodeSet exact = exact_mfold_ds(g, m);
      const NodeSet greedy = greedy_mfold_ds(g, m);
      CHECK(is_mfold_ds(g, exact, m));
      CHECK(is_mfold_ds(g, greedy, m));
      CHECK(node_weight(g, exact) == doctest::Approx(best));
      CHECK(node_weight(g, greedy) >= best - 1e-9);
      for (NodeId v : forced_members(g.topology(), m)) {
        CHECK(contains(exact, v));
        CHECK(contains(greedy, v));
      }
    }
  }
}

TEST_CASE("greedy deficiency strictly decreases") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_instance(12, 2.0, {1.0, 3.0}, seed);
    for (int m = 1; m <= 3; ++m) {
      DominationState st(g.topology(), m);
      CHECK(st.total_deficiency() > 0);
      int before = st.total_deficiency();
      for (NodeId v : greedy_mfold_ds(g, m)) {
        if (st.member(v)) continue;
        const int gain = st.gain(v);
        st.add(v);
        CHECK(st.total_deficiency() == before - gain);
        before = st.total_deficiency();
        int sum = 0;
        for (NodeId u : g.all_nodes()) {
          sum += st.residual(u);
          if (st.member(u)) CHECK(st.residual(u) == 0);
        }
        CHECK(sum == st.total_deficiency());
      }
      CHECK(st.total_deficiency() == 0);
    }
  }
}

TEST_CASE("zero-weight nodes are taken first") {
  std::vector<PointNode> pts{{0, {0, 0}, 5.0}, {1, {0.5, 0}, 0.0}, {2, {1.0, 0}, 5.0}};
  CHECK(greedy_mfold_ds(build_udg(pts), 1) == NodeSet{1});
}
