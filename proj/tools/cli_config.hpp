#pragma once

#include "fracbody/field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fracbody::cli {

/// Parsed and validated run configuration. Every knob has a CLI-exposed
/// default; field and parameter blocks are validated on parse.
struct RunConfig {
    std::string command;
    std::vector<FieldSpec> fields;

    int n = 2;
    double s = 0.5;
    double p = 2.0;
    std::vector<double> s_list;  // limits command
    std::string variant = "sym";

    int sphere_level = 24;
    double box_half_extent = 0.0;  // 0: sized from the fields
    int box_points = 0;            // 0: per-dimension default
    double t_min = 1e-3;
    double t_max = 100.0;
    int t_points = 120;
    int oracle_points = 0;
    int measure_points = 0;
    int rearrange_levels = 128;

    int candidates = 200;
    std::uint64_t seed = 1;
    double tolerance = 0.02;
    std::string out_dir = ".";
    bool json_out = true;
    bool csv_out = true;
    int threads = 0;

    /// Canonical JSON (fixed key order) used for artifact naming.
    std::string canonical_json() const;
    std::string artifact_stem() const;  ///< "<command>-<hash>"
};

/// Strict parser: unknown keys are rejected by name; parameter and field
/// blocks are validated. Throws std::invalid_argument.
RunConfig parse_config(const std::string& json_text);

/// Applies one "key=value" override (the --set flag).
void apply_override(RunConfig& cfg, const std::string& assignment);

/// Re-validates cross-field constraints after overrides.
void finalize_config(RunConfig& cfg);

}  // namespace fracbody::cli
