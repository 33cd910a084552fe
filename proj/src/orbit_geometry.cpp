// SPDX-License-Identifier: Apache-2.0
#include "snlink/orbit_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "snlink/antenna.hpp"
#include "snlink/errors.hpp"

namespace snlink {

using detail::require;

namespace {

// Largest direction cosine mapped to a finite distance window.
constexpr double kMaxWindowU = 1.0 - 1e-9;

// sinh(2x)/2 - x, with a series where the difference cancels.
double sinh_excess(double x) {
    if (x >= 0.5) return 0.5 * std::sinh(2.0 * x) - x;
    const double y = 2.0 * x;
    const double y2 = y * y;
    double term = y * y2 / 6.0;  // y^3 / 3!
    double sum = term;
    for (int k = 2; k < 30; ++k) {
        term *= y2 / ((2.0 * k) * (2.0 * k + 1.0));
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return 0.5 * sum;
}

double measure_scale(const OrbitShell& shell) {
    return std::numbers::pi * shell.density() * shell.altitude_m * shell.altitude_m;
}

}  // namespace

double OrbitShell::density() const {
    return satellite_density(satellite_count, altitude_m, earth_radius_m);
}

void OrbitShell::validate() const {
    auto check = [](bool ok, const char* key, const char* constraint) {
        if (!ok) throw ConfigError(std::string("[shell] ") + key + ": " + constraint);
    };
    check(altitude_m > 0.0, "altitude_km", "must be > 0");
    check(satellite_count >= 1, "satellites", "must be >= 1");
    check(atmosphere_m > 0.0 && atmosphere_m < altitude_m, "atmosphere_km",
          "must satisfy 0 < L_r < L (altitude_km)");
    check(pathloss_exp_atmosphere > 0.0, "alpha", "must be > 0");
    check(pathloss_exp_space > 0.0, "alpha0", "must be > 0");
    check(earth_radius_m > 0.0, "earth_radius_km", "must be > 0");
    check(tx_power_w >= 0.0, "tx_power_w", "must be >= 0");
}

OrbitShell leo_shell() { return {.altitude_m = 350e3, .satellite_count = 60000}; }
OrbitShell meo_shell() { return {.altitude_m = 1000e3, .satellite_count = 8000}; }
OrbitShell geo_shell() { return {.altitude_m = 4000e3, .satellite_count = 600}; }

double interferer_path_loss(double d, const OrbitShell& shell) {
    require(d > shell.atmosphere_m, "interferer_path_loss: d must exceed L_r");
    const double unit = shell.pathloss_unit_km ? 1e-3 : 1.0;
    const double dd = d * unit;
    const double lr = shell.atmosphere_m * unit;
    const double l = shell.altitude_m * unit;
    return std::pow(lr * dd / l, -shell.pathloss_exp_atmosphere) +
           std::pow((dd * dd - lr * dd) / l, -shell.pathloss_exp_space);
}

double sn_path_loss_db(const SnLinkGeometry& geom) {
    require(geom.reference_distance_m > 0.0 && geom.sn_distance_m >= geom.reference_distance_m,
            "sn_path_gain: need d_k >= d_0 > 0");
    require(geom.wavelength_m > 0.0, "sn_path_gain: wavelength must be > 0");
    return -20.0 * std::log10(geom.wavelength_m / (4.0 * std::numbers::pi * geom.reference_distance_m)) +
           10.0 * geom.pathloss_exp * std::log10(geom.sn_distance_m / geom.reference_distance_m);
}

double sn_path_gain(const SnLinkGeometry& geom) {
    return std::pow(10.0, -sn_path_loss_db(geom) / 10.0);
}

double satellite_density(int satellite_count, double altitude_m, double earth_radius_m) {
    require(satellite_count >= 1, "satellite_density: n_L must be >= 1");
    const double radius = earth_radius_m + altitude_m;
    return satellite_count / (4.0 * std::numbers::pi * radius * radius);
}

double intensity_density(double d, const OrbitShell& shell) {
    const double l = shell.altitude_m;
    require(d >= l, "intensity_density: d must be >= L");
    return 2.0 * std::numbers::pi * shell.density() * std::sqrt((d - l) * (d + l));
}

double cumulative_intensity(double d, const OrbitShell& shell) {
    const double l = shell.altitude_m;
    require(d >= l, "cumulative_intensity: d must be >= L");
    if (d == l) return 0.0;
    return measure_scale(shell) * sinh_excess(std::asinh(std::sqrt((d - l) * (d + l)) / l));
}

double inverse_cumulative_intensity(double measure, const OrbitShell& shell) {
    require(measure >= 0.0 && std::isfinite(measure),
            "inverse_cumulative_intensity: measure must be finite and >= 0");
    const double target = measure / measure_scale(shell);
    if (target == 0.0) return shell.altitude_m;

    double lo = 0.0;
    double hi = 1.0;
    while (sinh_excess(hi) < target) {
        lo = hi;
        hi *= 2.0;
    }
    // Newton on x = acosh(d / L), falling back to bisection outside the bracket.
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double residual = sinh_excess(x) - target;
        (residual < 0.0 ? lo : hi) = x;
        const double sh = std::sinh(x);
        double next = x - residual / (2.0 * sh * sh);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 1e-15 * x || hi - lo <= 1e-15 * hi) {
            x = next;
            break;
        }
        x = next;
    }
    return shell.altitude_m * std::cosh(x);
}

std::optional<DistanceLimits> integration_limits(double rx_steer_u, double rx_halfwidth_u,
                                                 double sat_center_u, double sat_halfwidth_u,
                                                 double altitude_m) {
    require(rx_halfwidth_u >= 0.0 && sat_halfwidth_u >= 0.0,
            "integration_limits: halfwidths must be >= 0");
    const double lo = std::max({rx_steer_u - rx_halfwidth_u, sat_center_u - sat_halfwidth_u, 0.0});
    const double hi =
        std::min({rx_steer_u + rx_halfwidth_u, sat_center_u + sat_halfwidth_u, kMaxWindowU});
    if (!(hi > lo)) return std::nullopt;
    return DistanceLimits{distance_from_u(lo, altitude_m), distance_from_u(hi, altitude_m)};
}

}  // namespace snlink
