// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace snlink {

struct ScalarMinimum {
    double x;
    double value;
    int iterations;
    bool converged;
};

/// Golden-section search for a unimodal f on [lo, hi]; stops when the bracket
/// is narrower than `tolerance` or after `max_iterations`.
template <typename F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi, double tolerance,
                                      int max_iterations) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    int iter = 0;
    while (hi - lo > tolerance && iter < max_iterations) {
        ++iter;
        if (fc <= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    const bool converged = hi - lo <= tolerance;
    return fc <= fd ? ScalarMinimum{c, fc, iter, converged} : ScalarMinimum{d, fd, iter, converged};
}

}  // namespace snlink
