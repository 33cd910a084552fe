// SPDX-License-Identifier: Apache-2.0
#include "snlink/qos_link.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <cmath>
#include <numbers>
#include <string>

#include "snlink/errors.hpp"

namespace snlink {

using detail::require;

namespace {

constexpr double kSpeedOfLight = 299792458.0;
constexpr double kMinBlocklength = 100.0;

bool open_unit(double p) { return p > 0.0 && p < 1.0; }

}  // namespace

double LinkParams::wavelength_m() const { return kSpeedOfLight / carrier_hz; }

void LinkParams::validate() const {
    auto check = [](bool ok, const char* key, const char* constraint) {
        if (!ok) throw ConfigError(std::string(key) + ": " + constraint);
    };
    check(frame_length_s > 0.0, "frame_length_s", "must be > 0");
    check(bandwidth_hz > 0.0, "bandwidth_hz", "must be > 0");
    check(packet_bits > 0.0, "packet_bits", "must be > 0");
    check(noise_psd_w_per_hz > 0.0, "noise_psd_dbm_hz", "must be finite");
    check(packet_rate_pps > 0.0, "packet_rate_pps", "must be > 0");
    check(tx_antennas >= 1 && tx_antennas <= 64, "tx_antennas", "must be in [1, 64]");
    check(carrier_hz > 0.0, "carrier_hz", "must be > 0");
    check(reference_distance_m > 0.0, "reference_distance_m", "must be > 0");
    check(sn_distance_m >= reference_distance_m, "sn_distance_km",
          "must be >= reference_distance_m");
    check(sn_pathloss_exp > 0.0, "sn_pathloss_exp", "must be > 0");
    check(blocklength() >= kMinBlocklength, "frame_length_s",
          "blocklength T_f*B must be >= 100 for the normal approximation");
}

void QosBudget::validate() const {
    auto check = [](bool ok, const char* key, const char* constraint) {
        if (!ok) throw ConfigError(std::string(key) + ": " + constraint);
    };
    check(open_unit(eps_qos), "eps_qos", "must lie in the open interval (0, 1)");
    check(max_delay_s > 0.0, "max_delay_s", "must be > 0");
    if (eps_c != 0.0 || eps_q != 0.0 || eps_t != 0.0) {
        check(open_unit(eps_c) && open_unit(eps_q) && open_unit(eps_t), "eps_c/eps_q/eps_t",
              "each must lie in (0, 1)");
        check(eps_c + eps_q + eps_t <= eps_qos, "eps_c/eps_q/eps_t", "sum must not exceed eps_qos");
    }
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double inverse_q(double p) {
    require(open_unit(p), "inverse_q: p must lie in (0, 1)");
    return std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

double channel_dispersion(double sinr) {
    require(sinr >= 0.0, "channel_dispersion: SINR must be >= 0");
    const double inv = 1.0 / (1.0 + sinr);
    return 1.0 - inv * inv;
}

double finite_blocklength_rate(double sinr, const LinkParams& params, double eps_c, RateMode mode) {
    require(sinr > 0.0, "finite_blocklength_rate: SINR must be > 0");
    require(open_unit(eps_c), "finite_blocklength_rate: eps_c must lie in (0, 1)");
    const double n = params.blocklength();
    const double sigma = mode == RateMode::general ? channel_dispersion(sinr) : 1.0;
    const double scale = n / (params.packet_bits * std::numbers::ln2);
    return scale * (std::log1p(sinr) - std::sqrt(sigma / n) * inverse_q(eps_c));
}

double omega(double eps_q, double frame_length_s, double max_delay_s) {
    require(open_unit(eps_q), "omega: eps_q must lie in (0, 1)");
    require(frame_length_s > 0.0 && max_delay_s > 0.0, "omega: T_f and D_max must be > 0");
    return -2.0 * frame_length_s * std::log(eps_q) / max_delay_s;
}

EffectiveBandwidth effective_bandwidth(double eps_u, double max_delay_s, double frame_length_s,
                                       double queue_density) {
    require(open_unit(eps_u), "effective_bandwidth: eps_u must lie in (0, 1)");
    require(queue_density > 0.0, "effective_bandwidth: queue density must be > 0");
    require(frame_length_s > 0.0 && max_delay_s > 0.0,
            "effective_bandwidth: T_f and D_max must be > 0");
    const double log_inv = -std::log(eps_u);
    const double theta = std::log1p(frame_length_s * log_inv / (queue_density * max_delay_s));
    return {log_inv / (max_delay_s * theta), theta};
}

double required_sinr_nu(double eb_packets_per_s, const LinkParams& params, double eps_c) {
    require(eb_packets_per_s > 0.0, "required_sinr_nu: E_B must be > 0");
    require(open_unit(eps_c), "required_sinr_nu: eps_c must lie in (0, 1)");
    const double exponent =
        eb_packets_per_s * params.packet_bits * std::numbers::ln2 / params.bandwidth_hz +
        std::sqrt(1.0 / params.blocklength()) * inverse_q(eps_c);
    return std::expm1(exponent);
}

double min_power(double nu, double fading_gain, double path_gain,
                 double noise_plus_interference_w) {
    require(nu > 0.0 && fading_gain > 0.0 && path_gain > 0.0 && noise_plus_interference_w > 0.0,
            "min_power: all inputs must be > 0");
    return noise_plus_interference_w * nu / (fading_gain * path_gain);
}

double rate_threshold(double g_th, double path_gain, double p_u_w, const LinkParams& params,
                      double eps_c, double interference_w) {
    require(g_th > 0.0 && path_gain > 0.0 && p_u_w > 0.0,
            "rate_threshold: g_th, G and P_u must be > 0");
    require(interference_w >= 0.0, "rate_threshold: interference must be >= 0");
    const double sinr = g_th * path_gain * p_u_w / (params.noise_power_w() + interference_w);
    return finite_blocklength_rate(sinr, params, eps_c);
}

}  // namespace snlink
