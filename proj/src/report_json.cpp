#include "ftb/report_json.hpp"

namespace ftb {

using nlohmann::ordered_json;

namespace {

ordered_json edge_list(const std::vector<Edge>& edges) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

ordered_json optional_number(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(); }

}  // namespace

ordered_json to_json(const Verdict& v) {
  ordered_json j;
  j["ok"] = v.ok;
  j["dominating"] = v.dominating;
  j["connected"] = v.connected;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

ordered_json to_json(const SolveReport& r, bool with_timings) {
  ordered_json j;
  j["k"] = r.k;
  j["m"] = r.m;
  j["solution"] = r.solution;
  j["weight"] = r.weight;
  j["phase_ds"] = {{"set", r.ds_set}, {"weight", r.ds_weight}};
  j["phase_connect"] = {{"added", r.added},
                        {"weight", r.added_weight},
                        {"extraction_ok", r.extraction_ok},
                        {"weight_slack", r.weight_slack}};
  j["rung"] = std::string(to_string(r.rung));
  j["feasible"] = r.feasible;
  j["verdict"] = to_json(r.verdict);
  j["oracle_weight"] = optional_number(r.oracle_weight);
  j["empirical_ratio"] = optional_number(r.empirical_ratio);
  ordered_json meta = ordered_json::object();
  for (const auto& [key, value] : r.solver_metadata) meta[key] = value;
  j["solver_metadata"] = meta;
  if (with_timings) {
    j["timings_ms"] = {{"ds", r.ds_ms}, {"connect", r.connect_ms}, {"oracle", r.oracle_ms}};
  }
  return j;
}

ordered_json to_json(const EdgeSubgraph& f) {
  ordered_json j;
  j["nodes"] = f.node_span();
  j["edges"] = edge_list(f.edges());
  j["length"] = subgraph_length(f);
  return j;
}

ordered_json to_json(const MssReport& r) {
  ordered_json j = to_json(r.subgraph);
  j["total_length"] = r.total_length;
  j["max_degree"] = r.max_degree;
  j["min_adjacent_edge_angle"] = optional_number(r.min_adjacent_edge_angle);
  ordered_json findings = ordered_json::array();
  for (const PropertyFinding& f : r.violations) {
    findings.push_back({{"property", f.property}, {"nodes", f.nodes}, {"value", f.value}, {"apex_degree", f.apex_degree}, {"detail", f.detail}});
  }
  j["violations"] = findings;
  return j;
}

ordered_json to_json(const BlockTree& t) {
  ordered_json j;
  j["k"] = t.k;
  ordered_json blocks = ordered_json::array();
  for (std::size_t i = 0; i < t.blocks.size(); ++i) {
    blocks.push_back({{"nodes", t.blocks[i]},
                      {"real_edges", edge_list(t.block_real_edges[i])},
                      {"virtual_edges", edge_list(t.block_virtual_edges[i])}});
  }
  j["blocks"] = blocks;
  ordered_json seps = ordered_json::array();
  for (const Separator& s : t.separators) seps.push_back(s.nodes);
  j["separators"] = seps;
  ordered_json inc = ordered_json::array();
  for (const auto& [b, s] : t.incidence) inc.push_back({b, s});
  j["incidence"] = inc;
  j["leaf_blocks"] = t.leaf_blocks();
  return j;
}

ordered_json to_json(const SteinerSolution& s) {
  ordered_json j;
  j["solver"] = std::string(to_string(s.solver));
  j["extraction_ok"] = s.extraction_ok;
  j["steiner_nodes"] = s.steiner_nodes;
  j["node_cost"] = s.node_cost;
  j["edge_cost"] = s.edge_cost;
  j["f"] = to_json(s.f);
  j["f0"] = to_json(s.f0);
  return j;
}

ordered_json to_json(const BenchReport& r) {
  ordered_json rows = ordered_json::array();
  for (const BenchRow& row : r.rows) {
    rows.push_back({{"index", row.index},
                    {"seed", row.seed},
                    {"n", row.n},
                    {"edges", row.edges},
                    {"k", row.k},
                    {"m", row.m},
                    {"feasible", row.feasible},
                    {"rung", std::string(to_string(row.rung))},
                    {"extraction_ok", row.extraction_ok},
                    {"weight", row.weight},
                    {"ds_weight", row.ds_weight},
                    {"added_weight", row.added_weight},
                    {"oracle_weight", optional_number(row.oracle_weight)},
                    {"ratio", optional_number(row.ratio)},
                    {"weight_slack", row.weight_slack}});
  }
  ordered_json aggs = ordered_json::array();
  for (const BenchAggregate& a : r.aggregates) {
    aggs.push_back({{"k", a.k},
                    {"m", a.m},
                    {"count", a.count},
                    {"feasible", a.feasible},
                    {"rung_primary", a.rung_primary},
                    {"rung_f0_union_d", a.rung_f0_union_d},
                    {"rung_all_nodes", a.rung_all_nodes},
                    {"with_oracle", a.with_oracle},
                    {"max_ratio", optional_number(a.max_ratio)},
                    {"mean_ratio", optional_number(a.mean_ratio)},
                    {"min_weight_slack", a.min_weight_slack}});
  }
  return {{"rows", rows}, {"aggregates", aggs}};
}

}  // namespace ftb
