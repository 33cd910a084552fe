// SPDX-License-Identifier: Apache-2.0
//
// Finite-blocklength rate, effective-bandwidth queueing calculus and the
// required SINR of the suborbital downlink. Rates are in packets/frame,
// effective bandwidth in packets/s.
#pragma once

namespace snlink {

struct LinkParams {
    double frame_length_s = 1e-4;       // T_f
    double bandwidth_hz = 1e7;          // B
    double packet_bits = 160.0;         // eta
    double noise_psd_w_per_hz = 1e-18;  // N_0, linear (-150 dBm/Hz)
    double packet_rate_pps = 1e4;       // N_u
    int tx_antennas = 8;                // N_t
    double carrier_hz = 12e9;           // f_c
    double sn_distance_m = 100e3;       // d_k
    double reference_distance_m = 1.0;  // d_0
    double sn_pathloss_exp = 2.5;       // alpha of the SN link

    /// Packets generated per frame, N_u * T_f.
    [[nodiscard]] double queue_density() const { return packet_rate_pps * frame_length_s; }
    [[nodiscard]] double blocklength() const { return frame_length_s * bandwidth_hz; }
    [[nodiscard]] double wavelength_m() const;
    [[nodiscard]] double noise_power_w() const { return noise_psd_w_per_hz * bandwidth_hz; }

    /// Throws ConfigError naming the first violated invariant.
    void validate() const;
};

struct QosBudget {
    double eps_qos = 1e-9;
    double eps_c = 0.0;
    double eps_q = 0.0;
    double eps_t = 0.0;
    double max_delay_s = 1e-4;  // D_max

    /// Checks eps_qos and D_max; the split is checked only when set (nonzero).
    void validate() const;
};

enum class RateMode {
    unit_dispersion,  // sigma = 1, high-SINR form
    general,          // sigma = 1 - (1 + gamma)^-2
};

[[nodiscard]] double dbm_to_watts(double dbm);
[[nodiscard]] double watts_to_dbm(double watts);

/// Upper-tail standard normal probability.
[[nodiscard]] double q_function(double x);

/// x such that Q(x) = p, for p in (0, 1).
[[nodiscard]] double inverse_q(double p);

[[nodiscard]] double channel_dispersion(double sinr);

/// Normal-approximation rate in packets/frame. May be negative.
[[nodiscard]] double finite_blocklength_rate(double sinr, const LinkParams& params, double eps_c,
                                             RateMode mode = RateMode::unit_dispersion);

[[nodiscard]] double omega(double eps_q, double frame_length_s, double max_delay_s);

struct EffectiveBandwidth {
    double packets_per_s;  // E_B
    double theta;
};

[[nodiscard]] EffectiveBandwidth effective_bandwidth(double eps_u, double max_delay_s,
                                                     double frame_length_s, double queue_density);

/// Linear SINR nu at which the unit-dispersion rate equals E_B * T_f.
[[nodiscard]] double required_sinr_nu(double eb_packets_per_s, const LinkParams& params,
                                      double eps_c);

/// Transmit power reaching SINR nu at fading gain g and path gain G.
[[nodiscard]] double min_power(double nu, double fading_gain, double path_gain,
                               double noise_plus_interference_w);

[[nodiscard]] double rate_threshold(double g_th, double path_gain, double p_u_w,
                                    const LinkParams& params, double eps_c, double interference_w);

}  // namespace snlink
