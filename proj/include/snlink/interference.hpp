// SPDX-License-Identifier: Apache-2.0
//
// Aggregate interference from Poisson-distributed satellites on one or more
// orbital shells. The mean is evaluated by Campbell's theorem as a trapezoid
// integral against the intensity measure; a Monte Carlo oracle samples the
// same point process directly.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "snlink/antenna.hpp"
#include "snlink/orbit_geometry.hpp"

namespace snlink {

/// Replacement for the interferer path-loss law; tests use it to make the
/// Campbell integrand analytically tractable.
using PathLossFn = std::function<double(double d, const OrbitShell& shell)>;

struct InterferenceConfig {
    std::vector<OrbitShell> shells;
    GainPattern tx_pattern;  // satellite beam
    GainPattern rx_pattern;  // receiving station, steered at its mainlobe center
    bool gating = true;
    int quadrature_points = 1024;
    double duty_cycle = 1.0;
    PathLossFn path_loss{};

    [[nodiscard]] double rx_steer_u() const { return rx_pattern.mainlobe_center(); }
    void validate() const;
};

/// Per-shell integration kernel, precomputed from a config.
struct ShellKernel {
    OrbitShell shell;
    std::optional<DistanceLimits> limits;
    OverlapGain overlap;

    /// Mean number of satellites inside the overlap window.
    [[nodiscard]] double mean_count() const;
};

struct Realization {
    double power_w;
    std::uint64_t points;
};

class InterferenceField {
public:
    explicit InterferenceField(const InterferenceConfig& cfg);

    [[nodiscard]] const std::vector<ShellKernel>& kernels() const { return kernels_; }

    /// F(d) = f_PL(d) * G_tx(d) * G_rx(d) on shell i.
    [[nodiscard]] double kernel(std::size_t shell_index, double d) const;

    /// Campbell mean for shell i, in watts.
    [[nodiscard]] double shell_expected(std::size_t shell_index) const;
    [[nodiscard]] double expected() const;

    /// One point-process realization; a pure function of (seed, index).
    [[nodiscard]] Realization sample(std::uint64_t seed, std::uint64_t index) const;

private:
    std::vector<ShellKernel> kernels_;
    PathLossFn path_loss_;
    int quadrature_points_;
    double duty_cycle_;
};

[[nodiscard]] double expected_interference(const InterferenceConfig& cfg);

[[nodiscard]] double sample_interference(const InterferenceConfig& cfg, std::uint64_t seed);

struct McEstimate {
    double mean_w;
    double stderr_w;
    std::uint64_t realizations;
};

/// OpenMP-parallel Monte Carlo mean. Realization i uses stream (seed, i) and
/// the reduction runs in index order, so the result does not depend on the
/// thread count.
[[nodiscard]] McEstimate mc_expected_interference(const InterferenceConfig& cfg,
                                                  std::uint64_t n_realizations, std::uint64_t seed);
[[nodiscard]] McEstimate mc_expected_interference(const InterferenceField& field,
                                                  std::uint64_t n_realizations, std::uint64_t seed);

namespace reference {

/// Single-threaded twin of mc_expected_interference, kept for testing and benchmarks.
[[nodiscard]] McEstimate mc_expected_interference_serial(const InterferenceField& field,
                                                         std::uint64_t n_realizations,
                                                         std::uint64_t seed);

}  // namespace reference
}  // namespace snlink
