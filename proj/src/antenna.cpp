// SPDX-License-Identifier: Apache-2.0
#include "snlink/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "snlink/errors.hpp"

namespace snlink {

using detail::require;

namespace {

constexpr double kEdgeTolerance = 1e-12;

template <typename Sample>
double interpolate(std::span<const Sample> s, double x, double Sample::*key, double Sample::*value) {
    if (s.empty() || x < s.front().*key || x > s.back().*key) return 0.0;
    auto hi = std::lower_bound(s.begin(), s.end(), x,
                               [&](const Sample& a, double v) { return a.*key < v; });
    if (hi == s.begin()) return (*hi).*value;
    auto lo = hi - 1;
    if ((*hi).*key == x) return (*hi).*value;
    const double t = (x - (*lo).*key) / ((*hi).*key - (*lo).*key);
    return (*lo).*value + t * ((*hi).*value - (*lo).*value);
}

std::vector<double> uniform_u_grid(int n_samples) {
    std::vector<double> u(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) u[i] = -1.0 + 2.0 * i / (n_samples - 1);
    return u;
}

}  // namespace

GainPattern::GainPattern(std::vector<PatternSample> samples, double mainlobe_center_u,
                         double mainlobe_halfwidth_u)
    : samples_(std::move(samples)), center_(mainlobe_center_u), halfwidth_(mainlobe_halfwidth_u) {
    require(samples_.size() >= 2, "GainPattern: need at least two samples");
    require(halfwidth_ >= 0.0, "GainPattern: mainlobe halfwidth must be >= 0");
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        require(samples_[i].u >= -1.0 && samples_[i].u <= 1.0,
                "GainPattern: u must lie in [-1, 1]");
        require(samples_[i].gain >= 0.0 && std::isfinite(samples_[i].gain),
                "GainPattern: gains must be finite and >= 0");
        require(i == 0 || samples_[i].u > samples_[i - 1].u,
                "GainPattern: u must be strictly increasing");
    }
}

bool GainPattern::in_mainlobe(double u) const {
    return std::abs(u - center_) <= halfwidth_ + kEdgeTolerance;
}

double GainPattern::gain_at(double u) const {
    return interpolate<PatternSample>(samples_, u, &PatternSample::u, &PatternSample::gain);
}

GainPattern GainPattern::scaled(double factor) const {
    require(factor >= 0.0, "GainPattern::scaled: factor must be >= 0");
    auto out = samples_;
    for (auto& s : out) s.gain *= factor;
    return {std::move(out), center_, halfwidth_};
}

GainPattern array_factor_pattern(int n_elements, double spacing_over_wavelength, double steer_u,
                                 int n_samples) {
    require(n_elements >= 2, "array_factor_pattern: need at least two elements");
    require(spacing_over_wavelength > 0.0 && spacing_over_wavelength <= 1.0,
            "array_factor_pattern: spacing must lie in (0, 1] wavelengths");
    require(steer_u >= -1.0 && steer_u <= 1.0, "array_factor_pattern: steer_u must lie in [-1, 1]");
    require(n_samples >= 64, "array_factor_pattern: need at least 64 samples");

    const double n = n_elements;
    std::vector<PatternSample> samples;
    samples.reserve(static_cast<std::size_t>(n_samples));
    for (double u : uniform_u_grid(n_samples)) {
        const double psi = std::numbers::pi * spacing_over_wavelength * (u - steer_u);
        const double den = n * std::sin(psi);
        double af = 1.0;
        if (std::abs(den) > 1e-12) af = std::sin(n * psi) / den;
        samples.push_back({u, af * af});
    }
    return {std::move(samples), steer_u, 1.0 / (n * spacing_over_wavelength)};
}

GainPattern piecewise_pattern(double mainlobe_gain, double sidelobe_gain, double center_u,
                              double halfwidth_u, int n_samples) {
    require(mainlobe_gain > sidelobe_gain && sidelobe_gain >= 0.0,
            "piecewise_pattern: need mainlobe_gain > sidelobe_gain >= 0");
    require(halfwidth_u > 0.0, "piecewise_pattern: halfwidth must be > 0");
    require(n_samples >= 2, "piecewise_pattern: need at least two samples");

    std::vector<PatternSample> samples;
    samples.reserve(static_cast<std::size_t>(n_samples));
    for (double u : uniform_u_grid(n_samples)) {
        const bool main = std::abs(u - center_u) <= halfwidth_u + kEdgeTolerance;
        samples.push_back({u, main ? mainlobe_gain : sidelobe_gain});
    }
    return {std::move(samples), center_u, halfwidth_u};
}

GainPattern load_pattern(const std::filesystem::path& path, double mainlobe_center_u,
                         double mainlobe_halfwidth_u) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open pattern file: " + path.string());

    std::vector<PatternSample> samples;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        PatternSample s{};
        if (!(fields >> s.u)) continue;
        std::string extra;
        if (!(fields >> s.gain) || (fields >> extra)) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                              ": expected two columns 'u gain'");
        }
        if (!samples.empty() && s.u <= samples.back().u) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                              ": u must be strictly increasing");
        }
        samples.push_back(s);
    }
    try {
        return {std::move(samples), mainlobe_center_u, mainlobe_halfwidth_u};
    } catch (const DomainError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

double distance_from_u(double u, double altitude) {
    require(u >= 0.0 && u < 1.0, "distance_from_u: u must lie in [0, 1)");
    require(altitude > 0.0, "distance_from_u: altitude must be > 0");
    return altitude / std::sqrt((1.0 - u) * (1.0 + u));
}

double u_from_distance(double d, double altitude) {
    require(altitude > 0.0 && d >= altitude, "u_from_distance: need d >= L > 0");
    return std::sqrt((d - altitude) * (d + altitude)) / d;
}

OverlapGain::OverlapGain(std::vector<OverlapSample> samples, int orbit_index)
    : samples_(std::move(samples)), orbit_index_(orbit_index) {
    require(samples_.size() >= 2, "OverlapGain: fewer than two samples survive the u -> d map");
    for (std::size_t i = 1; i < samples_.size(); ++i) {
        require(samples_[i].d > samples_[i - 1].d, "OverlapGain: d must be strictly increasing");
    }
}

double OverlapGain::at(double d) const {
    return interpolate<OverlapSample>(samples_, d, &OverlapSample::d, &OverlapSample::gain);
}

bool OverlapGain::all_zero() const {
    return std::all_of(samples_.begin(), samples_.end(),
                       [](const OverlapSample& s) { return s.gain == 0.0; });
}

OverlapGain overlap_gain(const GainPattern& tx, const GainPattern& rx, double altitude, bool gating,
                         int orbit_index) {
    require(altitude > 0.0, "overlap_gain: altitude must be > 0");
    const auto ts = tx.samples();
    const auto rs = rx.samples();
    require(ts.size() == rs.size(), "overlap_gain: patterns must share the u grid");

    std::vector<OverlapSample> out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        require(std::abs(ts[i].u - rs[i].u) <= kEdgeTolerance,
                "overlap_gain: patterns must share the u grid");
        const double u = ts[i].u;
        if (u < 0.0 || u >= 1.0) continue;
        double g = ts[i].gain * rs[i].gain;
        if (gating && !(tx.in_mainlobe(u) && rx.in_mainlobe(u))) g = 0.0;
        out.push_back({distance_from_u(u, altitude), g});
    }
    return {std::move(out), orbit_index};
}

}  // namespace snlink
