#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "geomed/bounds.hpp"
#include "geomed/oracles.hpp"

namespace geomed {

/// Instance document:
/// { "manifold": {"family", "dimension", "curvature"},
///   "ball": {"center": [...], "rho", "delta"?, "Delta"?},
///   "atoms": [{"coords": [...], "weight"}, ...], "name"?, "seed"? }
/// Doubles round-trip exactly (shortest representation on write).
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

nlohmann::json solve_result_to_json(const SolveResult& result,
                                    std::uint64_t seed);

/// Trace serialization: one JSON object per line for streamability.
void write_trace_jsonl(const IterateTrace& trace, std::ostream& os);
nlohmann::json trace_record_to_json(const TraceRecord& rec);

nlohmann::json grid_result_to_json(const GridOracleResult& res);
nlohmann::json domination_report_to_json(const DominationReport& rep);

}  // namespace geomed
