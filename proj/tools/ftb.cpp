#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ftb/bench.hpp"
#include "ftb/connectivity.hpp"
#include "ftb/domset.hpp"
#include "ftb/errors.hpp"
#include "ftb/pipeline.hpp"
#include "ftb/report_json.hpp"
#include "ftb/spanning.hpp"
#include "ftb/steiner.hpp"
#include "ftb/udg.hpp"

namespace {

using namespace ftb;
using nlohmann::ordered_json;

struct Common {
  std::string instance;
  int k = 1;
  int m = 1;
  std::string ds = "greedy";
  std::string skcs = "augment";
  std::size_t oracle_cap = 14;
  bool csv = false;
  bool json = false;
  bool allow_m_lt_k = false;
  bool timings = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

UnitDiskGraph load(const std::string& spec) {
  if (spec.empty()) throw ValidationError("--instance is required");
  if (spec.rfind("fixture:", 0) == 0) {
    auto g = fixtures::by_name(spec.substr(8));
    if (!g) throw ValidationError("unknown fixture " + spec.substr(8));
    return *g;
  }
  return load_instance(spec);
}

NodeSet parse_set(const std::string& text) {
  NodeSet out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("bad node id \"" + item + "\" in set");
    }
  }
  return make_node_set(out);
}

void print(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string join(const NodeSet& s) {
  std::string out;
  for (NodeId v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

void add_instance(CLI::App* app, Common& c) {
  app->add_option("--instance", c.instance, "instance JSON path, or fixture:NAME")->required();
}

void add_format(CLI::App* app, Common& c) {
  auto* json = app->add_flag("--json", c.json, "JSON output (default)");
  app->add_flag("--csv", c.csv, "CSV output")->excludes(json);
}

int run(int argc, char** argv) {
  CLI::App app{"Fault-tolerant connected dominating sets in unit disk graphs"};
  app.require_subcommand(1);
  Common c;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  int gen_n = 10;
  double gen_side = 0.0;
  std::uint64_t gen_seed = 1;
  double wlo = 1.0, whi = 1.0;
  int gen_k = 0;
  std::string gen_out;
  gen->add_option("-n", gen_n, "number of nodes")->required();
  gen->add_option("--side", gen_side, "square side length (default: sized for k-connectivity)");
  gen->add_option("-k", gen_k, "resample until the graph is k-connected");
  gen->add_option("--seed", gen_seed);
  gen->add_option("--weight-lo", wlo);
  gen->add_option("--weight-hi", whi);
  gen->add_option("-o,--output", gen_out, "write here instead of stdout");

  // solve
  auto* solve = app.add_subcommand("solve", "two-phase (k,m)-CDS solver");
  bool solve_oracle = false;
  add_instance(solve, c);
  solve->add_option("-k", c.k)->required();
  solve->add_option("-m", c.m)->required();
  solve->add_option("--ds", c.ds)->check(CLI::IsMember({"greedy", "exact"}));
  solve->add_option("--skcs", c.skcs)->check(CLI::IsMember({"exact", "augment"}));
  solve->add_flag("--oracle", solve_oracle, "also run the exhaustive oracle when n <= cap");
  solve->add_option("--oracle-cap", c.oracle_cap);
  solve->add_flag("--allow-m-lt-k", c.allow_m_lt_k);
  solve->add_flag("--timings", c.timings, "include per-phase timings");
  add_format(solve, c);

  // verify
  auto* verify = app.add_subcommand("verify", "check a candidate (k,m)-CDS");
  std::string set_text;
  bool dump_blocks = false;
  add_instance(verify, c);
  verify->add_option("--set", set_text, "comma-separated node ids")->required();
  verify->add_option("-k", c.k)->required();
  verify->add_option("-m", c.m)->required();
  verify->add_flag("--dump-blocks", dump_blocks, "also print the k-block tree of G[D]");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive minimum-weight (k,m)-CDS");
  add_instance(oracle, c);
  oracle->add_option("-k", c.k)->required();
  oracle->add_option("-m", c.m)->required();
  oracle->add_option("--oracle-cap", c.oracle_cap);

  // steiner
  auto* steiner = app.add_subcommand("steiner", "node-weighted k-connected Steiner network");
  std::string terminals_text;
  add_instance(steiner, c);
  steiner->add_option("--terminals", terminals_text, "comma-separated terminal ids")->required();
  steiner->add_option("-k", c.k)->required();
  steiner->add_option("--skcs", c.skcs)->check(CLI::IsMember({"exact", "augment"}));

  // domset
  auto* domset = app.add_subcommand("domset", "m-fold dominating set");
  bool ds_exact = false;
  add_instance(domset, c);
  domset->add_option("-m", c.m)->required();
  domset->add_flag("--exact", ds_exact);

  // mss
  auto* mss = app.add_subcommand("mss", "minimum-length k-connected spanning subgraph");
  bool mss_local = false;
  std::size_t edge_cap = 22;
  add_instance(mss, c);
  mss->add_option("-k", c.k)->required();
  auto* exact_flag = mss->add_flag("--exact", "exact branch and bound (default)");
  mss->add_flag("--local", mss_local, "minimal reduction plus local exchanges")->excludes(exact_flag);
  mss->add_option("--edge-cap", edge_cap);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "benchmark against the exhaustive oracle");
  std::string config_path;
  BenchConfig cfg;
  bench_cmd->add_option("--config", config_path, "JSON config; flags below override nothing when given");
  bench_cmd->add_option("--instances", cfg.instances, "instances per (k, m)");
  bench_cmd->add_option("--n-min", cfg.n_min);
  bench_cmd->add_option("--n-max", cfg.n_max);
  bench_cmd->add_option("-k", cfg.ks)->delimiter(',');
  bench_cmd->add_option("--m-offsets", cfg.m_offsets, "m = k + offset")->delimiter(',');
  bench_cmd->add_option("--seed", cfg.seed);
  bench_cmd->add_option("--threads", cfg.threads);
  bench_cmd->add_option("--ds", c.ds)->check(CLI::IsMember({"greedy", "exact"}));
  bench_cmd->add_option("--skcs", c.skcs)->check(CLI::IsMember({"exact", "augment"}));
  bench_cmd->add_option("--oracle-cap", c.oracle_cap);
  bench_cmd->add_flag("--allow-m-lt-k", c.allow_m_lt_k);
  add_format(bench_cmd, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  if (*gen) {
    UnitDiskGraph g = [&] {
      if (gen_k > 0 && gen_side <= 0.0) {
        KConnectedOptions opt;
        opt.weights = {wlo, whi};
        return random_k_connected_instance(gen_n, gen_k, gen_seed, opt);
      }
      const double side = gen_side > 0.0 ? gen_side : 2.0;
      for (int attempt = 0; attempt < 20000; ++attempt) {
        UnitDiskGraph cand = random_instance(gen_n, side, {wlo, whi}, mix_seed(gen_seed, attempt));
        if (gen_k <= 0 || is_k_connected(cand.topology(), gen_k)) return cand;
      }
      throw InfeasibleError("no " + std::to_string(gen_k) + "-connected instance at this side length");
    }();
    if (gen_out.empty()) {
      std::cout << write_instance(g);
    } else {
      save_instance(g, gen_out);
    }
    return 0;
  }

  if (*solve) {
    const UnitDiskGraph g = load(c.instance);
    SolveOptions opt;
    opt.ds = parse_ds_solver(c.ds);
    opt.skcs = parse_skcs_solver(c.skcs);
    opt.allow_m_lt_k = c.allow_m_lt_k;
    opt.run_oracle = solve_oracle;
    opt.oracle_cap = c.oracle_cap;
    const SolveReport r = solve_kmcds({&g, c.k, c.m, opt});
    if (c.csv) {
      std::cout << "k,m,weight,ds_weight,added_weight,rung,extraction_ok,feasible,oracle_weight,ratio,solution\n";
      std::cout << r.k << ',' << r.m << ',' << num(r.weight) << ',' << num(r.ds_weight) << ','
                << num(r.added_weight) << ',' << to_string(r.rung) << ',' << (r.extraction_ok ? "true" : "false")
                << ',' << (r.feasible ? "true" : "false") << ',' << (r.oracle_weight ? num(*r.oracle_weight) : "")
                << ',' << (r.empirical_ratio ? num(*r.empirical_ratio) : "") << ',' << join(r.solution) << '\n';
    } else {
      print(to_json(r, c.timings));
    }
    return 0;
  }

  if (*verify) {
    const UnitDiskGraph g = load(c.instance);
    const NodeSet d = parse_set(set_text);
    const Verdict v = verify_kmcds(g, d, c.k, c.m);
    ordered_json j = to_json(v);
    if (dump_blocks) {
      const Graph h = g.topology().induced(d);
      if (v.connected) {
        j["block_tree"] = to_json(k_block_tree(h, c.k));
      } else {
        j["block_tree"] = nullptr;
      }
    }
    print(j);
    return 0;
  }

  if (*oracle) {
    const UnitDiskGraph g = load(c.instance);
    const WeightedSet best = exact_kmcds(g, c.k, c.m, c.oracle_cap);
    print({{"k", c.k}, {"m", c.m}, {"solution", best.nodes}, {"weight", best.weight}});
    return 0;
  }

  if (*steiner) {
    const UnitDiskGraph g = load(c.instance);
    const NodeSet t = parse_set(terminals_text);
    std::vector<double> costs = g.weights();
    for (NodeId v : t) {
      if (v < 0 || static_cast<std::size_t>(v) >= g.size()) {
        throw ValidationError("unknown terminal id " + std::to_string(v));
      }
      costs[static_cast<std::size_t>(v)] = 0.0;
    }
    print(to_json(solve_mnwkcsn(g, costs, t, c.k, parse_skcs_solver(c.skcs))));
    return 0;
  }

  if (*domset) {
    const UnitDiskGraph g = load(c.instance);
    const NodeSet d = ds_exact ? exact_mfold_ds(g, c.m) : greedy_mfold_ds(g, c.m);
    print({{"m", c.m}, {"solver", ds_exact ? "exact" : "greedy"}, {"set", d}, {"weight", node_weight(g, d)}});
    return 0;
  }

  if (*mss) {
    const UnitDiskGraph g = load(c.instance);
    MssReport r;
    if (mss_local) {
      const EdgeSubgraph minimal = reduce_to_minimal(EdgeSubgraph::all_edges(g), c.k);
      r = check_mss_properties(local_improve(minimal, c.k), c.k);
    } else {
      r = exact_k_mss(g, c.k, {.edge_cap = edge_cap, .span = {}});
    }
    ordered_json j = to_json(r);
    j["k"] = c.k;
    j["solver"] = mss_local ? "local" : "exact";
    print(j);
    return 0;
  }

  if (*bench_cmd) {
    if (!config_path.empty()) {
      const unsigned threads = cfg.threads;
      cfg = parse_bench_config(read_file(config_path));
      if (bench_cmd->count("--threads") > 0) cfg.threads = threads;
    } else {
      cfg.options.ds = parse_ds_solver(c.ds);
      cfg.options.skcs = parse_skcs_solver(c.skcs);
      cfg.options.oracle_cap = c.oracle_cap;
      cfg.options.allow_m_lt_k = c.allow_m_lt_k;
    }
    const BenchReport r = bench(cfg);
    if (c.csv) {
      std::cout << bench_csv(r);
    } else {
      print(to_json(r));
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ftb::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 2;
  } catch (const ftb::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 3;
  }
}
