#pragma once

/**
 * @file report.hpp
 * @brief JSON reports, text formatters, grid execution and golden files.
 *
 * Every subcommand result can be wrapped into a Report carrying the command
 * name, its inputs, the result and provenance (tool, version, effective
 * parameters).  Serialization is deterministic: keys keep insertion order
 * and the grid runner sorts results by input key, so identical reruns are
 * byte-identical.
 */

#include <json.hpp>

#include <string>
#include <vector>

#include "circulant/families.hpp"
#include "circulant/oracle.hpp"
#include "circulant/orbits.hpp"
#include "circulant/zmod.hpp"

namespace circulant {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "circiso";
inline constexpr const char* kToolVersion = "0.1.0";

/// Wraps a result with provenance.
json make_report(const std::string& command, const json& inputs, const json& result,
                 const json& parameters);

json verdict_to_json(const IsoVerdict& verdict);
json orbit_to_json(const AdamsOrbit& orbit);
json type2_group_to_json(const Type2Group& group, i64 v_orbit_size);
json theta_table_to_json(const ThetaTable& table);
json family_report_to_json(const FamilyReport& report);
json ci_scan_to_json(const CiScanReport& report);
json oracle_result_to_json(const oracle::OracleResult& result);
json probe_report_to_json(const ProbeReport& report);

std::string format_verdict(const IsoVerdict& verdict);
std::string format_theta_table(const ThetaTable& table);

/// Runs one grid entry: {"op": <subcommand>, ...op fields...}.  Domain
/// errors become {"error": {"kind", "message"}} results instead of throwing.
json run_grid_entry(const json& entry);

struct GridOptions {
    int threads = 0;  ///< 0: CIRC_ISO_THREADS env var, else hardware clamp
};

/// Executes all entries of a grid (JSON array), possibly concurrently, and
/// returns the array of reports sorted by input key.
json run_grid(const json& grid, const GridOptions& options = {});

/// Line-based comparison against a golden file after whitespace
/// normalization (trailing space stripped, blank-line runs collapsed).
/// Returns human-readable mismatch descriptions; empty means equal.
/// Throws MissingGoldenError if the file does not exist.
std::vector<std::string> golden_compare_text(const std::string& actual,
                                             const std::string& golden_path);

/// Structural comparison against a golden JSON file; returns the paths of
/// differing values.  Throws MissingGoldenError if the file does not exist.
std::vector<std::string> golden_compare_json(const json& actual, const std::string& golden_path);

}  // namespace circulant
