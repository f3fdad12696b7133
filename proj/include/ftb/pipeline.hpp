#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ftb/graph.hpp"
#include "ftb/steiner.hpp"
#include "ftb/subset_search.hpp"
#include "ftb/udg.hpp"

namespace ftb {

enum class DsSolver { greedy, exact };

std::string_view to_string(DsSolver s);
DsSolver parse_ds_solver(std::string_view name);

struct SolveOptions {
  DsSolver ds = DsSolver::greedy;
  SkcsSolver skcs = SkcsSolver::augment;
  bool allow_m_lt_k = false;
  /// Run the exhaustive (k,m) oracle when n <= oracle_cap.
  bool run_oracle = false;
  std::size_t oracle_cap = 14;
  std::size_t skcs_edge_cap = 22;
  std::size_t ds_node_cap = 20;
};

struct ProblemSpec {
  const UnitDiskGraph* graph = nullptr;
  int k = 1;
  int m = 1;
  SolveOptions options;
};

/// Which rung of the fallback ladder produced the answer.
enum class Rung { primary, f0_union_d, all_nodes };
std::string_view to_string(Rung r);

struct Verdict {
  bool ok = false;
  bool dominating = false;
  bool connected = false;
  std::string reason;
};

struct SolveReport {
  int k = 0;
  int m = 0;
  NodeSet solution;
  double weight = 0.0;

  NodeSet ds_set;
  double ds_weight = 0.0;

  NodeSet added;  // solution \ D
  double added_weight = 0.0;
  bool extraction_ok = false;
  Rung rung = Rung::primary;
  /// (2/k) w(E(F)) - c(V(F)) of the Steiner phase under the reweighted costs.
  double weight_slack = 0.0;

  Verdict verdict;  // from verify_kmcds only
  bool feasible = false;

  std::optional<double> oracle_weight;
  std::optional<double> empirical_ratio;

  double ds_ms = 0.0;
  double connect_ms = 0.0;
  double oracle_ms = 0.0;

  /// Names for the abstract ratios alpha, rho, gamma; empty when m < k was
  /// forced through.
  std::vector<std::pair<std::string, std::string>> solver_metadata;
};

/// Two-phase (k,m)-CDS solver: m-fold dominating set D, then a k-connected
/// Steiner network on terminals D with D reweighted to zero; outputs V(F).
/// Falls back to V(F0) u D and then V if the verifier rejects. Throws
/// InfeasibleError if G is not k-connected, ValidationError for m < k
/// without the override.
SolveReport solve_kmcds(const ProblemSpec& spec);

/// Exhaustive minimum-weight (k,m)-CDS in increasing weight order.
WeightedSet exact_kmcds(const UnitDiskGraph& g, int k, int m, std::size_t node_cap = 14);

/// Independent check: D is m-fold dominating and G[D] is k-connected
/// (|D| >= k + 1).
Verdict verify_kmcds(const UnitDiskGraph& g, const NodeSet& d, int k, int m);

}  // namespace ftb
