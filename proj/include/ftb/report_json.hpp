#pragma once

#include "json.hpp"

#include "ftb/bench.hpp"
#include "ftb/connectivity.hpp"
#include "ftb/pipeline.hpp"
#include "ftb/spanning.hpp"
#include "ftb/steiner.hpp"

namespace ftb {

// Stable-ordered JSON views of the solver outputs. Timings are only emitted
// when requested so that repeated runs stay byte-identical.

nlohmann::ordered_json to_json(const Verdict& v);
nlohmann::ordered_json to_json(const SolveReport& r, bool with_timings = false);
nlohmann::ordered_json to_json(const EdgeSubgraph& f);
nlohmann::ordered_json to_json(const MssReport& r);
nlohmann::ordered_json to_json(const BlockTree& t);
nlohmann::ordered_json to_json(const SteinerSolution& s);
nlohmann::ordered_json to_json(const BenchReport& r);

}  // namespace ftb
