// SPDX-License-Identifier: Apache-2.0
//
// Shell geometry: interferer path loss, the SN link gain, Poisson intensity of
// satellites seen in the slant-distance domain, and beam-overlap limits.
// All lengths are meters unless the name says otherwise.
#pragma once

#include <optional>

namespace snlink {

inline constexpr double kEarthRadiusM = 6371e3;

struct OrbitShell {
    double altitude_m;                   // L
    int satellite_count;                 // n_L
    double atmosphere_m = 100e3;         // L_r
    double pathloss_exp_atmosphere = 2.5;  // alpha
    double pathloss_exp_space = 2.0;     // alpha0
    double earth_radius_m = kEarthRadiusM;
    double tx_power_w = 10.0;            // P_SN, mean launch power
    bool pathloss_unit_km = true;        // lengths in km inside the path-loss law

    /// Satellites per square meter over the full orbital sphere.
    [[nodiscard]] double density() const;

    void validate() const;
};

/// Reference shells: LEO 350 km / 60000, MEO 1000 km / 8000, GEO-row 4000 km / 600.
[[nodiscard]] OrbitShell leo_shell();
[[nodiscard]] OrbitShell meo_shell();
[[nodiscard]] OrbitShell geo_shell();

struct SnLinkGeometry {
    double sn_distance_m;
    double reference_distance_m;
    double wavelength_m;
    double pathloss_exp;
};

/// f_PL(d) = (L_r d / L)^-alpha + ((d^2 - L_r d) / L)^-alpha0.
[[nodiscard]] double interferer_path_loss(double d, const OrbitShell& shell);

/// Path loss of the SN link in dB (positive).
[[nodiscard]] double sn_path_loss_db(const SnLinkGeometry& geom);

/// Linear path gain G = 10^(-PL_dB / 10).
[[nodiscard]] double sn_path_gain(const SnLinkGeometry& geom);

[[nodiscard]] double satellite_density(int satellite_count, double altitude_m,
                                       double earth_radius_m = kEarthRadiusM);

/// Intensity density in d: 2 pi lambda_d sqrt(d^2 - L^2).
[[nodiscard]] double intensity_density(double d, const OrbitShell& shell);

/// Integral of intensity_density over [L, d]:
/// pi lambda_d L^2 (sinh(2x)/2 - x) with x = acosh(d / L).
[[nodiscard]] double cumulative_intensity(double d, const OrbitShell& shell);

/// d >= L at which cumulative_intensity reaches `measure`.
[[nodiscard]] double inverse_cumulative_intensity(double measure, const OrbitShell& shell);

struct DistanceLimits {
    double lower_m;  // d_li
    double upper_m;  // d_ui
};

/// Slant-distance window where the receiver and satellite mainlobes overlap on
/// a shell. The receiver window is clipped at u = 0 (zenith). nullopt means no
/// overlap, so the shell contributes nothing.
[[nodiscard]] std::optional<DistanceLimits> integration_limits(double rx_steer_u,
                                                               double rx_halfwidth_u,
                                                               double sat_center_u,
                                                               double sat_halfwidth_u,
                                                               double altitude_m);

}  // namespace snlink
