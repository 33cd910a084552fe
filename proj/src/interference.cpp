// SPDX-License-Identifier: Apache-2.0
#include "snlink/interference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "snlink/errors.hpp"
#include "snlink/rng.hpp"

namespace snlink {

namespace {

constexpr std::uint64_t kMinRealizations = 100;

McEstimate summarize(const std::vector<double>& values) {
    const auto n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double var = values.size() > 1 ? ss / (n - 1.0) : 0.0;
    return {mean, std::sqrt(var / n), values.size()};
}

void check_realizations(std::uint64_t n) {
    detail::require(n >= kMinRealizations, "mc_expected_interference: need at least 100 realizations");
}

}  // namespace

void InterferenceConfig::validate() const {
    if (shells.empty()) throw ConfigError("shells: at least one [shell] is required");
    for (const auto& s : shells) s.validate();
    if (quadrature_points < 64) throw ConfigError("quadrature_points: must be >= 64");
    if (!(duty_cycle >= 0.0 && duty_cycle <= 1.0)) {
        throw ConfigError("duty_cycle: must lie in [0, 1]");
    }
    if (tx_pattern.samples().size() != rx_pattern.samples().size()) {
        throw ConfigError("pattern_samples: transmit and receive patterns must share the u grid");
    }
}

double ShellKernel::mean_count() const {
    if (!limits) return 0.0;
    return cumulative_intensity(limits->upper_m, shell) - cumulative_intensity(limits->lower_m, shell);
}

InterferenceField::InterferenceField(const InterferenceConfig& cfg)
    : path_loss_(cfg.path_loss ? cfg.path_loss : PathLossFn(interferer_path_loss)),
      quadrature_points_(cfg.quadrature_points),
      duty_cycle_(cfg.duty_cycle) {
    cfg.validate();
    const auto& tx = cfg.tx_pattern;
    const auto& rx = cfg.rx_pattern;
    kernels_.reserve(cfg.shells.size());
    for (std::size_t i = 0; i < cfg.shells.size(); ++i) {
        const auto& shell = cfg.shells[i];
        auto limits = integration_limits(rx.mainlobe_center(), rx.mainlobe_halfwidth(),
                                         tx.mainlobe_center(), tx.mainlobe_halfwidth(),
                                         shell.altitude_m);
        kernels_.push_back({shell, limits,
                            overlap_gain(tx, rx, shell.altitude_m, cfg.gating, static_cast<int>(i))});
    }
}

double InterferenceField::kernel(std::size_t shell_index, double d) const {
    const auto& k = kernels_.at(shell_index);
    const double gain = k.overlap.at(d);
    if (gain == 0.0) return 0.0;
    return path_loss_(d, k.shell) * gain;
}

double InterferenceField::shell_expected(std::size_t shell_index) const {
    const auto& k = kernels_.at(shell_index);
    if (!k.limits || k.overlap.all_zero()) return 0.0;

    const double lo = k.limits->lower_m;
    const double hi = k.limits->upper_m;
    const double l = k.shell.altitude_m;
    const int n = quadrature_points_;
    const double h = (hi - lo) / (n - 1);
    auto integrand = [&](double d) {
        return kernel(shell_index, d) * std::sqrt(std::max(0.0, (d - l) * (d + l)));
    };
    double sum = 0.5 * (integrand(lo) + integrand(hi));
    for (int j = 1; j < n - 1; ++j) sum += integrand(lo + j * h);
    return 2.0 * std::numbers::pi * k.shell.density() * k.shell.tx_power_w * duty_cycle_ * sum * h;
}

double InterferenceField::expected() const {
    double total = 0.0;
    for (std::size_t i = 0; i < kernels_.size(); ++i) total += shell_expected(i);
    return total;
}

Realization InterferenceField::sample(std::uint64_t seed, std::uint64_t index) const {
    PhiloxStream rng(seed, index);
    Realization out{0.0, 0};
    for (std::size_t i = 0; i < kernels_.size(); ++i) {
        const auto& k = kernels_[i];
        if (!k.limits) continue;
        const std::uint64_t count = rng.poisson(k.mean_count());
        out.points += count;
        // Inverse CDF of the intensity measure restricted to the window.
        const double base = cumulative_intensity(k.limits->lower_m, k.shell);
        const double mass = k.mean_count();
        double sum = 0.0;
        for (std::uint64_t p = 0; p < count; ++p) {
            const double d = inverse_cumulative_intensity(base + rng.uniform() * mass, k.shell);
            sum += kernel(i, std::clamp(d, k.limits->lower_m, k.limits->upper_m));
        }
        out.power_w += k.shell.tx_power_w * duty_cycle_ * sum;
    }
    return out;
}

double expected_interference(const InterferenceConfig& cfg) {
    return InterferenceField(cfg).expected();
}

double sample_interference(const InterferenceConfig& cfg, std::uint64_t seed) {
    return InterferenceField(cfg).sample(seed, 0).power_w;
}

McEstimate mc_expected_interference(const InterferenceConfig& cfg, std::uint64_t n_realizations,
                                    std::uint64_t seed) {
    return mc_expected_interference(InterferenceField(cfg), n_realizations, seed);
}

McEstimate mc_expected_interference(const InterferenceField& field, std::uint64_t n_realizations,
                                    std::uint64_t seed) {
    check_realizations(n_realizations);
    std::vector<double> values(n_realizations);
    const auto n = static_cast<std::int64_t>(n_realizations);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        values[static_cast<std::size_t>(i)] = field.sample(seed, static_cast<std::uint64_t>(i)).power_w;
    }
    return summarize(values);
}

namespace reference {

McEstimate mc_expected_interference_serial(const InterferenceField& field,
                                           std::uint64_t n_realizations, std::uint64_t seed) {
    check_realizations(n_realizations);
    std::vector<double> values;
    values.reserve(n_realizations);
    for (std::uint64_t i = 0; i < n_realizations; ++i) values.push_back(field.sample(seed, i).power_w);
    return summarize(values);
}

}  // namespace reference
}  // namespace snlink
