// SPDX-License-Identifier: Apache-2.0
//
// Scenario configuration. The file format is flat `key = value` text with '#'
// comments; each `[shell]` header opens one orbital shell block. Omitted keys
// take the reference defaults, and an empty file yields the
// complete default scenario with LEO, MEO and the 4000 km shell.
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "snlink/interference.hpp"
#include "snlink/orbit_geometry.hpp"
#include "snlink/qos_link.hpp"

namespace snlink {

enum class PatternModel { piecewise, array_factor, file };

struct PatternSpec {
    PatternModel model = PatternModel::piecewise;
    double center_u = 0.0;  // receiver: overridden by the steering direction
    double halfwidth_u = 0.1;
    double mainlobe_gain = 1.0;
    double sidelobe_gain = 0.0;
    int array_elements = 20;
    double array_spacing = 0.5;  // wavelengths
    std::filesystem::path file;

    [[nodiscard]] GainPattern build(double center_u, int n_samples) const;
};

struct Scenario {
    LinkParams link;
    QosBudget qos;
    std::vector<OrbitShell> shells;
    double rx_steer_u;
    PatternSpec rx;
    PatternSpec sat;
    int pattern_samples = 2001;
    bool gating = true;
    int quadrature_points = 1024;
    double duty_cycle = 1.0;
    std::uint64_t seed = 1;
    std::uint64_t mc_realizations = 0;
    std::string config_hash;  // fnv1a64 of the source text

    /// Interference model with the receiver steered at `steer_u`.
    [[nodiscard]] InterferenceConfig interference_config(double steer_u) const;
    [[nodiscard]] InterferenceConfig interference_config() const {
        return interference_config(rx_steer_u);
    }

    void validate() const;
};

[[nodiscard]] Scenario default_scenario();

/// Parses config text; relative pattern-file paths resolve against `base_dir`.
/// Throws ConfigError naming the offending key.
[[nodiscard]] Scenario parse_config(std::string_view text,
                                    const std::filesystem::path& base_dir = {});

/// Reads and parses a config file. Throws IoError when unreadable.
[[nodiscard]] Scenario load_config(const std::filesystem::path& path);

[[nodiscard]] double elevation_deg_to_u(double elevation_deg);
[[nodiscard]] double u_to_elevation_deg(double u);

[[nodiscard]] std::string fnv1a64_hex(std::string_view bytes);

}  // namespace snlink
