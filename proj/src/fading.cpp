// SPDX-License-Identifier: Apache-2.0
#include "snlink/fading.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>

#include "snlink/errors.hpp"

namespace snlink {

using detail::require;

namespace {

void check_antennas(int n) {
    require(n >= 1 && n <= kMaxTxAntennas, "fading: N_t must lie in [1, 64]");
}

}  // namespace

double fading_pdf(double x, int tx_antennas) {
    check_antennas(tx_antennas);
    require(x >= 0.0, "fading_pdf: x must be >= 0");
    if (x == 0.0) return tx_antennas == 1 ? 1.0 : 0.0;
    const double a = tx_antennas;
    return std::exp((a - 1.0) * std::log(x) - x - std::lgamma(a));
}

double outage_prob(double g_th, int tx_antennas) {
    check_antennas(tx_antennas);
    require(g_th >= 0.0, "outage_prob: g_th must be >= 0");
    return boost::math::gamma_p(static_cast<double>(tx_antennas), g_th);
}

double outage_complement(double g_th, int tx_antennas) {
    check_antennas(tx_antennas);
    require(g_th >= 0.0, "outage_complement: g_th must be >= 0");
    return boost::math::gamma_q(static_cast<double>(tx_antennas), g_th);
}

double threshold_from_outage(double eps_t, int tx_antennas) {
    check_antennas(tx_antennas);
    require(eps_t >= 0.0 && eps_t < 1.0, "threshold_from_outage: eps_t must lie in [0, 1)");
    if (eps_t == 0.0) return 0.0;
    // The upper-tail inverse keeps precision when eps_t is close to 1.
    const double a = tx_antennas;
    return eps_t > 0.5 ? boost::math::gamma_q_inv(a, 1.0 - eps_t) : boost::math::gamma_p_inv(a, eps_t);
}

}  // namespace snlink
