#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftb/graph.hpp"
#include "ftb/udg.hpp"

namespace ftb {

inline constexpr double kAngleTolerance = 1e-9;
inline constexpr double kLengthTolerance = 1e-9;

/// One failed geometric property of a candidate k-MSS.
struct PropertyFinding {
  std::string property;  // "degree_bound", "angle", "neighbor_independence", "equilateral"
  NodeSet nodes;
  double value = 0.0;
  std::string detail;
  int apex_degree = 0;  // degree in F of nodes.front()
};

struct MssReport {
  EdgeSubgraph subgraph;
  double total_length = 0.0;
  int max_degree = 0;
  /// Smallest angle between two edges sharing a node; empty when no node has
  /// two incident edges.
  std::optional<double> min_adjacent_edge_angle;
  std::vector<PropertyFinding> violations;
};

/// Angle at `apex` between the segments to `a` and `b`, in [0, pi].
double angle_at(const UnitDiskGraph& g, NodeId apex, NodeId a, NodeId b);

/// Drops edges longest-first (ties by (u, v) ascending) while k-connectivity
/// of the spanning subgraph survives. Throws InfeasibleError if F is not
/// k-connected.
EdgeSubgraph reduce_to_minimal(const EdgeSubgraph& f, int k);

struct ExactMssOptions {
  std::size_t edge_cap = 22;
  /// Span to connect; empty means every host node. Only host edges inside the
  /// span are considered.
  NodeSet span;
};

/// Minimum-length k-connected spanning subgraph by branch and bound. Ties go
/// to the lexicographically smallest edge set in length-sorted order.
MssReport exact_k_mss(const UnitDiskGraph& g, int k, const ExactMssOptions& options = {});

/// Exchange F - uv + u'v whenever uv, uu' meet at an angle below pi/3,
/// |uv| >= |uu'|, and the swap keeps k-connectivity; repeats until no
/// exchange applies. Never increases length.
EdgeSubgraph local_improve(const EdgeSubgraph& f, int k);

/// k = 2 only. The angle precondition is checked at nodes of degree >= 3;
/// degree-two nodes of an optimum may carry sharper angles. Rewires every
/// degree-six node u: with neighbours u_0..u_5 in
/// clockwise order from the positive x-axis, F := F - u u_i + u_i u_{i-1} for
/// the first i whose replacement edge is in the host graph and whose
/// receiving endpoint u_{i-1} has degree <= 4. Throws ValidationError when
/// the preconditions fail or no legal replacement exists.
EdgeSubgraph degree_six_reduction(const EdgeSubgraph& f);

/// Recomputes degree and angle statistics and lists geometric violations:
/// degree above 5k for every k; for k = 2 also angles below pi/3, adjacent
/// neighbour pairs at degree >= 3 nodes, and unequal lengths (or failing
/// exchanges) at angles of exactly pi/3.
MssReport check_mss_properties(const EdgeSubgraph& f, int k);

}  // namespace ftb
