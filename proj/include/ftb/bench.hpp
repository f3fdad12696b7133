#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ftb/pipeline.hpp"
#include "ftb/udg.hpp"

namespace ftb {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

struct KConnectedOptions {
  /// Expected mean degree used to size the square; <= 0 picks 2k + 3.
  double mean_degree = 0.0;
  std::size_t max_edges = std::numeric_limits<std::size_t>::max();
  WeightRange weights{1.0, 10.0};
  int max_attempts = 20000;
};

/// Random instance that is k-connected (and within max_edges). Rejection
/// sampling over derived seeds; throws InfeasibleError when every attempt
/// fails.
UnitDiskGraph random_k_connected_instance(int n, int k, std::uint64_t seed, const KConnectedOptions& options = {});

struct BenchConfig {
  int instances = 100;  // per (k, m) combination
  int n_min = 10;
  int n_max = 10;
  std::vector<int> ks{2};
  std::vector<int> m_offsets{0};  // m = k + offset
  std::uint64_t seed = 1;
  KConnectedOptions generator;
  SolveOptions options{.run_oracle = true};
  unsigned threads = 1;
};

BenchConfig parse_bench_config(std::string_view json_text);
void validate(const BenchConfig& config);

struct BenchRow {
  int index = 0;
  std::uint64_t seed = 0;
  int n = 0;
  std::size_t edges = 0;
  int k = 0;
  int m = 0;
  bool feasible = false;
  Rung rung = Rung::primary;
  bool extraction_ok = false;
  double weight = 0.0;
  double ds_weight = 0.0;
  double added_weight = 0.0;
  std::optional<double> oracle_weight;
  std::optional<double> ratio;
  double weight_slack = 0.0;
};

struct BenchAggregate {
  int k = 0;
  int m = 0;
  int count = 0;
  int feasible = 0;
  int rung_primary = 0;
  int rung_f0_union_d = 0;
  int rung_all_nodes = 0;
  int with_oracle = 0;
  std::optional<double> max_ratio;
  std::optional<double> mean_ratio;
  double min_weight_slack = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<BenchAggregate> aggregates;
};

/// Generates instances, solves each, runs the oracle where n fits under the
/// cap and aggregates per (k, m). Row order is fixed by the config, not by
/// thread scheduling.
BenchReport bench(const BenchConfig& config);

std::string bench_csv(const BenchReport& report);

}  // namespace ftb
