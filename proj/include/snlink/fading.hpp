// SPDX-License-Identifier: Apache-2.0
//
// Small-scale fading of the SN downlink: gain g ~ Gamma(N_t, 1).
#pragma once

namespace snlink {

inline constexpr int kMaxTxAntennas = 64;

/// x^(N_t-1) e^-x / (N_t-1)!
[[nodiscard]] double fading_pdf(double x, int tx_antennas);

/// P(g <= g_th): the probability mass of the max-power branch.
[[nodiscard]] double outage_prob(double g_th, int tx_antennas);

/// P(g > g_th), computed without cancellation for large g_th.
[[nodiscard]] double outage_complement(double g_th, int tx_antennas);

/// Inverse of outage_prob on [0, 1).
[[nodiscard]] double threshold_from_outage(double eps_t, int tx_antennas);

}  // namespace snlink
