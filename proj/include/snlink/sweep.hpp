// SPDX-License-Identifier: Apache-2.0
//
// Sweeps over receiver steering and SN distance, and CSV emitters.
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "snlink/interference.hpp"
#include "snlink/scenario.hpp"
#include "snlink/solver.hpp"

namespace snlink {

struct SweepSpec {
    std::vector<double> steer_u;        // direction cosines, ascending
    std::vector<double> sn_distance_m;  // ascending
    Scenario base;
    bool mc_check = false;
    std::uint64_t n_realizations = 0;
    std::uint64_t seed = 1;

    void validate() const;
};

struct SweepRow {
    double u;
    double elevation_deg;
    double sn_distance_m;
    PowerSolution solution;
    std::optional<McEstimate> mc;
};

/// `n` evenly spaced values from `start` to `stop` inclusive, parsed from
/// "start:stop:n". Throws ConfigError on malformed or descending grids.
[[nodiscard]] std::vector<double> parse_grid(const std::string& text, const char* flag);

/// One row per (d_k, u) pair, d_k-major. Rows run in parallel; output order
/// and values do not depend on the thread count.
[[nodiscard]] std::vector<SweepRow> run_sweep(const SweepSpec& spec);

void write_metadata(std::ostream& out, const Scenario& scenario, std::uint64_t seed);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool with_mc);

struct OverlapRow {
    int orbit_index;
    double d_m;
    double path_loss;
    double gain_product;
    double kernel;  // path_loss * gain_product
};

/// Overlap kernel samples of each shell inside its integration window.
[[nodiscard]] std::vector<OverlapRow> emit_overlap_table(const InterferenceConfig& cfg);

void write_overlap_csv(std::ostream& out, const std::vector<OverlapRow>& rows);

/// "%.17g", enough digits to round-trip a double.
[[nodiscard]] std::string format_double(double v);

}  // namespace snlink
