#include "ftb/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "ftb/connectivity.hpp"
#include "ftb/errors.hpp"

namespace ftb {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer over a combined state
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

UnitDiskGraph random_k_connected_instance(int n, int k, std::uint64_t seed, const KConnectedOptions& options) {
  if (n < k + 1) throw ValidationError("a k-connected instance needs at least k + 1 nodes");
  const double degree = options.mean_degree > 0.0 ? options.mean_degree : 2.0 * k + 3.0;
  const double side = std::sqrt(std::max(1, n - 1) * std::numbers::pi / degree);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    UnitDiskGraph g = random_instance(n, side, options.weights, mix_seed(seed, static_cast<std::uint64_t>(attempt)));
    if (g.num_edges() <= options.max_edges && is_k_connected(g.topology(), k)) return g;
  }
  throw InfeasibleError("no " + std::to_string(k) + "-connected instance found for n=" + std::to_string(n));
}

void validate(const BenchConfig& c) {
  if (c.instances < 0) throw ValidationError("bench: instances must be nonnegative");
  if (c.ks.empty() || c.m_offsets.empty()) throw ValidationError("bench: k and m_offsets must be nonempty");
  if (c.n_min > c.n_max) throw ValidationError("bench: n_min exceeds n_max");
  if (!(c.generator.weights.lo >= 0.0 && c.generator.weights.lo <= c.generator.weights.hi)) {
    throw ValidationError("bench: weight range must satisfy 0 <= lo <= hi");
  }
  for (int k : c.ks) {
    if (k < 1) throw ValidationError("bench: k must be at least 1");
    if (c.n_min < k + 1) throw ValidationError("bench: n_min must be at least k + 1");
  }
  for (int off : c.m_offsets) {
    if (off < 0 && !c.options.allow_m_lt_k) {
      throw ValidationError("bench: negative m offset requires allow_m_lt_k");
    }
  }
}

BenchConfig parse_bench_config(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed bench config: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("bench config: top level must be an object");
  static const std::set<std::string> known{"instances", "n_min", "n_max", "k", "m_offsets",
                                           "seed", "ds", "skcs", "oracle", "oracle_cap",
                                           "weight_lo", "weight_hi", "mean_degree", "threads", "allow_m_lt_k"};
  for (const auto& item : doc.items()) {
    if (!known.contains(item.key())) throw ValidationError("bench config: unknown key \"" + item.key() + "\"");
  }
  BenchConfig c;
  try {
    c.instances = doc.value("instances", c.instances);
    c.n_min = doc.value("n_min", c.n_min);
    c.n_max = doc.value("n_max", c.n_max);
    c.ks = doc.value("k", c.ks);
    c.m_offsets = doc.value("m_offsets", c.m_offsets);
    c.seed = doc.value("seed", c.seed);
    c.generator.weights.lo = doc.value("weight_lo", c.generator.weights.lo);
    c.generator.weights.hi = doc.value("weight_hi", c.generator.weights.hi);
    c.generator.mean_degree = doc.value("mean_degree", c.generator.mean_degree);
    c.options.ds = parse_ds_solver(doc.value("ds", std::string(to_string(c.options.ds))));
    c.options.skcs = parse_skcs_solver(doc.value("skcs", std::string(to_string(c.options.skcs))));
    c.options.oracle_cap = doc.value("oracle_cap", c.options.oracle_cap);
    c.options.run_oracle = doc.value("oracle", c.options.run_oracle);
    c.options.allow_m_lt_k = doc.value("allow_m_lt_k", c.options.allow_m_lt_k);
    c.threads = doc.value("threads", c.threads);
  } catch (const json::type_error& e) {
    throw ValidationError(std::string("bench config: ") + e.what());
  }
  validate(c);
  return c;
}

namespace {

struct Job {
  int index;
  int k;
  int m;
  std::uint64_t seed;
};

BenchRow run_job(const Job& job, const BenchConfig& c) {
  const int span = c.n_max - c.n_min + 1;
  const int n = c.n_min + static_cast<int>(mix_seed(job.seed, 0xabcdef) % static_cast<std::uint64_t>(span));
  const UnitDiskGraph g = random_k_connected_instance(n, job.k, job.seed, c.generator);

  ProblemSpec spec{&g, job.k, job.m, c.options};
  const SolveReport r = solve_kmcds(spec);

  BenchRow row;
  row.index = job.index;
  row.seed = job.seed;
  row.n = n;
  row.edges = g.num_edges();
  row.k = job.k;
  row.m = job.m;
  row.feasible = r.feasible;
  row.rung = r.rung;
  row.extraction_ok = r.extraction_ok;
  row.weight = r.weight;
  row.ds_weight = r.ds_weight;
  row.added_weight = r.added_weight;
  row.oracle_weight = r.oracle_weight;
  row.ratio = r.empirical_ratio;
  row.weight_slack = r.weight_slack;
  return row;
}

}  // namespace

BenchReport bench(const BenchConfig& config) {
  validate(config);
  std::vector<Job> jobs;
  for (int k : config.ks) {
    for (int off : config.m_offsets) {
      for (int i = 0; i < config.instances; ++i) {
        const int m = k + off;
        const std::uint64_t s = mix_seed(mix_seed(mix_seed(config.seed, static_cast<std::uint64_t>(k)),
                                                  static_cast<std::uint64_t>(m)),
                                         static_cast<std::uint64_t>(i));
        jobs.push_back({static_cast<int>(jobs.size()), k, m, s});
      }
    }
  }

  BenchReport report;
  report.rows.resize(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        report.rows[i] = run_job(jobs[i], config);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (const BenchRow& row : report.rows) {
    auto it = std::find_if(report.aggregates.begin(), report.aggregates.end(),
                           [&](const BenchAggregate& a) { return a.k == row.k && a.m == row.m; });
    if (it == report.aggregates.end()) {
      report.aggregates.push_back({});
      it = std::prev(report.aggregates.end());
      it->k = row.k;
      it->m = row.m;
      it->min_weight_slack = row.weight_slack;
    }
    ++it->count;
    it->feasible += row.feasible ? 1 : 0;
    it->rung_primary += row.rung == Rung::primary ? 1 : 0;
    it->rung_f0_union_d += row.rung == Rung::f0_union_d ? 1 : 0;
    it->rung_all_nodes += row.rung == Rung::all_nodes ? 1 : 0;
    it->min_weight_slack = std::min(it->min_weight_slack, row.weight_slack);
    if (row.ratio) {
      const double sum = it->mean_ratio.value_or(0.0) * it->with_oracle + *row.ratio;
      ++it->with_oracle;
      it->mean_ratio = sum / it->with_oracle;
      it->max_ratio = std::max(it->max_ratio.value_or(*row.ratio), *row.ratio);
    }
  }
  return report;
}

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

}  // namespace

std::string bench_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "row,index,seed,n,edges,k,m,feasible,rung,extraction_ok,weight,ds_weight,added_weight,"
         "oracle_weight,ratio,weight_slack\n";
  for (const BenchRow& r : report.rows) {
    out << "instance," << r.index << ',' << r.seed << ',' << r.n << ',' << r.edges << ',' << r.k << ',' << r.m
        << ',' << (r.feasible ? "true" : "false") << ',' << to_string(r.rung) << ','
        << (r.extraction_ok ? "true" : "false") << ',' << num(r.weight) << ',' << num(r.ds_weight) << ','
        << num(r.added_weight) << ',' << opt_num(r.oracle_weight) << ',' << opt_num(r.ratio) << ','
        << num(r.weight_slack) << '\n';
  }
  out << "\nrow,k,m,count,feasible,rung_primary,rung_f0_union_d,rung_all_nodes,with_oracle,max_ratio,"
         "mean_ratio,min_weight_slack\n";
  for (const BenchAggregate& a : report.aggregates) {
    out << "aggregate," << a.k << ',' << a.m << ',' << a.count << ',' << a.feasible << ',' << a.rung_primary << ','
        << a.rung_f0_union_d << ',' << a.rung_all_nodes << ',' << a.with_oracle << ',' << opt_num(a.max_ratio)
        << ',' << opt_num(a.mean_ratio) << ',' << num(a.min_weight_slack) << '\n';
  }
  return out.str();
}

}  // namespace ftb
