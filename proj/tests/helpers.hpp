#pragma once

#include <random>
#include <vector>

#include "ftb/graph.hpp"
#include "ftb/udg.hpp"

namespace testing {

/// Erdos-Renyi graph on labels 0..n-1.
inline ftb::Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  ftb::NodeSet nodes;
  for (int i = 0; i < n; ++i) nodes.push_back(i);
  ftb::Graph g(nodes);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline ftb::UnitDiskGraph from_xy(const std::vector<std::pair<double, double>>& xy, double w = 1.0) {
  std::vector<ftb::PointNode> pts;
  for (std::size_t i = 0; i < xy.size(); ++i) {
    pts.push_back({static_cast<int>(i), {xy[i].first, xy[i].second}, w});
  }
  return ftb::build_udg(pts);
}

}  // namespace testing
