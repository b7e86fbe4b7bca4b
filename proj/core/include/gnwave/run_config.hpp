#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gnwave/scenarios.hpp"

namespace gnwave {

/// Parsed `[section] key = value` configuration. Every field except the
/// scenario name and output settings is an override on top of the named
/// preset; absent keys keep the preset's values (alpha 1.159 and g 9.81 on
/// the non-analytic presets, f = 0 except synolakis).
struct RunConfig {
    // [scenario]
    std::string scenario = "solitary-small";
    std::optional<double> amplitude; // a/h0 where the preset takes one
    std::optional<int> n_cells;      // resolution override (solitary preset)

    // [physics]
    std::optional<double> g;
    std::optional<double> alpha;
    std::optional<double> f;
    std::optional<double> rho;
    std::optional<double> eps_dry;

    // [time] — set either dt or cfl, not both
    std::optional<double> t_end;
    std::optional<double> dt;
    std::optional<double> cfl;
    std::optional<double> max_dt;
    std::optional<bool> dispersive;

    // [breaking]
    std::optional<bool> breaking_enabled;
    std::optional<double> breaking_theta;
    std::optional<double> breaking_floor;
    std::optional<int> breaking_halo;

    // [output]
    std::string output_dir = "out";
    double snapshot_interval = 0.0; // 0: only the final snapshot
    std::optional<std::vector<double>> gauges; // replaces the preset's list

    bool operator==(const RunConfig&) const = default;
};

/// Strict parser: unknown sections or keys are errors, values must consume
/// the whole token, '#' starts a comment.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Emits only the keys that are set; parse(serialize(c)) == c.
std::string serialize_config(const RunConfig& cfg);

/// Preset + overrides, validated.
Scenario configured_scenario(const RunConfig& cfg);

} // namespace gnwave
