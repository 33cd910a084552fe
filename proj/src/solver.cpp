// SPDX-License-Identifier: Apache-2.0
#include "snlink/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "snlink/errors.hpp"
#include "snlink/fading.hpp"
#include "snlink/scalar_search.hpp"

namespace snlink {

using detail::require;

namespace {

// Inner split searched as t = logit(eps_c / budget).
constexpr double kLogitSpan = 40.0;
constexpr double kInnerTolerance = 1e-12;
constexpr int kInnerMaxIterations = 500;

// Outer search over ln(eps_t) in [ln(eps_qos) - 30, ln(eps_qos (1 - 1e-12))].
constexpr double kOuterLogSpan = 30.0;
constexpr double kOuterTolerance = 1e-10;
constexpr int kOuterMaxIterations = 200;
constexpr double kTieTolerance = 1e-12;
constexpr double kProbeFactor = 1.1;

bool open_unit(double p) { return p > 0.0 && p < 1.0; }

struct Bracket {
    double lo;
    double hi;
};

// Expands downhill from x0 until the function turns up or a bound is hit.
template <typename F>
Bracket bracket_minimum(F&& f, double x0, double lo, double hi) {
    constexpr double grow = 1.618033988749895;
    double a = x0;
    double fa = f(a);
    double step = std::min(1.0, 0.5 * (hi - lo));
    double b = std::clamp(a + step, lo, hi);
    double fb = f(b);
    if (fb > fa) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    for (int i = 0; i < 100; ++i) {
        const double c = std::clamp(b + grow * (b - a), lo, hi);
        const double fc = f(c);
        if (fc >= fb || c == lo || c == hi) return {std::min(a, c), std::max(a, c)};
        a = b;
        b = c;
        fb = fc;
    }
    return {std::min(a, b), std::max(a, b)};
}

}  // namespace

double subproblem_objective(double eps_c, double eps_q, const LinkParams& params,
                            double max_delay_s) {
    require(open_unit(eps_c) && open_unit(eps_q),
            "subproblem_objective: eps_c and eps_q must lie in (0, 1)");
    const auto eb = effective_bandwidth(eps_q, max_delay_s, params.frame_length_s,
                                        params.queue_density());
    return eb.packets_per_s * params.packet_bits * std::numbers::ln2 / params.bandwidth_hz +
           std::sqrt(1.0 / params.blocklength()) * inverse_q(eps_c);
}

SubproblemSolution solve_subproblem(double budget, const LinkParams& params, double max_delay_s) {
    require(open_unit(budget), "solve_subproblem: budget must lie in (0, 1)");
    auto split = [budget](double t) {
        return std::pair{budget / (1.0 + std::exp(-t)), budget / (1.0 + std::exp(t))};
    };
    auto f = [&](double t) {
        const auto [ec, eq] = split(t);
        return subproblem_objective(ec, eq, params, max_delay_s);
    };
    const auto best = golden_section_minimize(f, -kLogitSpan, kLogitSpan, kInnerTolerance,
                                              kInnerMaxIterations);
    const auto [ec, eq] = split(best.x);
    return {ec, eq, std::expm1(best.value), best.value, best.iterations, best.converged};
}

SnLinkGeometry sn_geometry(const LinkParams& params) {
    return {params.sn_distance_m, params.reference_distance_m, params.wavelength_m(),
            params.sn_pathloss_exp};
}

PowerSolution power_at_threshold_error(double eps_t, const QosBudget& qos, const LinkParams& params,
                                       double path_gain, double interference_w) {
    require(eps_t > 0.0 && eps_t < qos.eps_qos,
            "power_at_threshold_error: eps_t must lie in (0, eps_qos)");
    const auto sub = solve_subproblem(qos.eps_qos - eps_t, params, qos.max_delay_s);
    const double g_th = threshold_from_outage(eps_t, params.tx_antennas);
    const double noise_plus_i = params.noise_power_w() + interference_w;
    const double p_u = noise_plus_i * sub.nu / (g_th * path_gain);
    const auto eb = effective_bandwidth(sub.eps_q, qos.max_delay_s, params.frame_length_s,
                                        params.queue_density());
    return {.p_u_w = p_u,
            .p_t_at_gth_w = min_power(sub.nu, g_th, path_gain, noise_plus_i),
            .g_th = g_th,
            .nu = sub.nu,
            .eps_c = sub.eps_c,
            .eps_q = sub.eps_q,
            .eps_t = eps_t,
            .e_b = eb.packets_per_s,
            .theta = eb.theta,
            .expected_interference_w = interference_w,
            .iterations = sub.iterations,
            .converged = sub.converged,
            .locally_optimal = false};
}

PowerSolution solve_power_threshold(const QosBudget& qos, const LinkParams& params,
                                    double path_gain, double interference_w) {
    if (!open_unit(qos.eps_qos)) throw DomainError("solve_power_threshold: infeasible, eps_qos must lie in (0, 1)");
    require(path_gain > 0.0, "solve_power_threshold: path gain must be > 0");
    require(interference_w >= 0.0, "solve_power_threshold: interference must be >= 0");
    params.validate();

    const double x_hi = std::log(qos.eps_qos) + std::log1p(-1e-12);
    const double x_lo = std::log(qos.eps_qos) - kOuterLogSpan;
    auto log_power = [&](double x) {
        return std::log(
            power_at_threshold_error(std::exp(x), qos, params, path_gain, interference_w).p_u_w);
    };

    PowerSolution best{};
    bool have_best = false;
    int total_iterations = 0;
    bool all_converged = true;
    for (int k = 1; k <= 5; ++k) {
        const double x0 = std::log(qos.eps_qos) - k * std::numbers::ln10;
        const auto br = bracket_minimum(log_power, x0, x_lo, x_hi);
        const auto m = golden_section_minimize(log_power, br.lo, br.hi, kOuterTolerance,
                                               kOuterMaxIterations);
        total_iterations += m.iterations;
        all_converged = all_converged && m.converged;

        auto candidate =
            power_at_threshold_error(std::exp(m.x), qos, params, path_gain, interference_w);
        if (!have_best) {
            best = candidate;
            have_best = true;
            continue;
        }
        const double rel = (candidate.p_u_w - best.p_u_w) / best.p_u_w;
        if (rel < -kTieTolerance ||
            (std::abs(rel) <= kTieTolerance && candidate.eps_t < best.eps_t)) {
            best = candidate;
        }
    }

    const double up = best.eps_t * kProbeFactor;
    const double down = best.eps_t / kProbeFactor;
    const double p_down =
        power_at_threshold_error(down, qos, params, path_gain, interference_w).p_u_w;
    const double p_up = up < qos.eps_qos
                            ? power_at_threshold_error(up, qos, params, path_gain, interference_w).p_u_w
                            : best.p_u_w;

    best.iterations = total_iterations;
    best.converged = best.converged && all_converged;
    best.locally_optimal = p_up >= best.p_u_w && p_down >= best.p_u_w;
    return best;
}

PowerSolution solve_power_threshold(const QosBudget& qos, const LinkParams& params,
                                    const SnLinkGeometry& geom, const InterferenceConfig& icfg) {
    const double interference = expected_interference(icfg);
    return solve_power_threshold(qos, params, sn_path_gain(geom), interference);
}

}  // namespace snlink
