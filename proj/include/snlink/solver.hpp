// SPDX-License-Identifier: Apache-2.0
//
// Power ceiling P_u of the transmission-insisting policy: the smallest
// transmit power that meets the total error budget eps_c + eps_q + eps_t.
//
// The search is split in two nested scalar problems. For a fixed threshold
// error eps_t the residual budget is shared between decoding and queueing
// errors by a convex one-dimensional search; the outer search then trades
// eps_t against the fading threshold g_th it buys.
#pragma once

#include "snlink/interference.hpp"
#include "snlink/orbit_geometry.hpp"
#include "snlink/qos_link.hpp"

namespace snlink {

/// ln(1 + nu) as a function of the decoding and queueing errors.
[[nodiscard]] double subproblem_objective(double eps_c, double eps_q, const LinkParams& params,
                                          double max_delay_s);

struct SubproblemSolution {
    double eps_c;
    double eps_q;
    double nu;
    double objective;
    int iterations;
    bool converged;
};

/// Minimizes subproblem_objective over eps_c + eps_q = budget.
[[nodiscard]] SubproblemSolution solve_subproblem(double budget, const LinkParams& params,
                                                  double max_delay_s);

struct PowerSolution {
    double p_u_w;
    double p_t_at_gth_w;
    double g_th;
    double nu;
    double eps_c;
    double eps_q;
    double eps_t;
    double e_b;  // packets/s
    double theta;
    double expected_interference_w;
    int iterations;
    bool converged;
    bool locally_optimal;  // P_u at eps_t * 1.1 and eps_t / 1.1 is no lower
};

/// Evaluates the full pipeline at a fixed eps_t: inner split, g_th, P_u.
[[nodiscard]] PowerSolution power_at_threshold_error(double eps_t, const QosBudget& qos,
                                                     const LinkParams& params, double path_gain,
                                                     double interference_w);

/// Outer search with E(I) and G already known.
[[nodiscard]] PowerSolution solve_power_threshold(const QosBudget& qos, const LinkParams& params,
                                                  double path_gain, double interference_w);

/// Full problem: evaluates E(I) from the interference model once, then solves.
[[nodiscard]] PowerSolution solve_power_threshold(const QosBudget& qos, const LinkParams& params,
                                                  const SnLinkGeometry& geom,
                                                  const InterferenceConfig& icfg);

[[nodiscard]] SnLinkGeometry sn_geometry(const LinkParams& params);

}  // namespace snlink
