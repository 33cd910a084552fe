// SPDX-License-Identifier: Apache-2.0
//
// One-dimensional antenna power patterns in the direction cosine u = cos(phi)
// of the elevation angle, and the transmitter/receiver overlap gain mapped to
// the slant distance d of a point on an orbital shell at altitude L.
#pragma once

#include <filesystem>
#include <span>
#include <vector>

namespace snlink {

struct PatternSample {
    double u;
    double gain;
};

/// Sampled power gain versus direction cosine, with the mainlobe used for gating.
class GainPattern {
public:
    GainPattern(std::vector<PatternSample> samples, double mainlobe_center_u,
                double mainlobe_halfwidth_u);

    [[nodiscard]] std::span<const PatternSample> samples() const { return samples_; }
    [[nodiscard]] double mainlobe_center() const { return center_; }
    [[nodiscard]] double mainlobe_halfwidth() const { return halfwidth_; }

    /// Closed mainlobe: |u - u0| <= halfwidth.
    [[nodiscard]] bool in_mainlobe(double u) const;

    /// Linear interpolation in (u, gain); 0 outside the sampled range.
    [[nodiscard]] double gain_at(double u) const;

    /// Same pattern with every gain multiplied by `factor`.
    [[nodiscard]] GainPattern scaled(double factor) const;

private:
    std::vector<PatternSample> samples_;
    double center_;
    double halfwidth_;
};

/// Normalized uniform linear array power pattern |AF(u)|^2 / N^2, sampled
/// uniformly on [-1, 1]. The mainlobe halfwidth is the first-null offset 1/(N s).
[[nodiscard]] GainPattern array_factor_pattern(int n_elements, double spacing_over_wavelength,
                                               double steer_u, int n_samples);

/// Flat mainlobe over |u - u0| <= halfwidth, flat sidelobe elsewhere.
[[nodiscard]] GainPattern piecewise_pattern(double mainlobe_gain, double sidelobe_gain,
                                            double center_u, double halfwidth_u, int n_samples);

/// Reads "u gain" pairs, one per line, '#' comments. The mainlobe is supplied
/// by the caller since the file carries only samples.
[[nodiscard]] GainPattern load_pattern(const std::filesystem::path& path,
                                       double mainlobe_center_u, double mainlobe_halfwidth_u);

/// Slant distance to altitude L at direction cosine u: d = L / sqrt(1 - u^2).
[[nodiscard]] double distance_from_u(double u, double altitude);

/// Inverse of distance_from_u: u = sqrt(d^2 - L^2) / d.
[[nodiscard]] double u_from_distance(double d, double altitude);

struct OverlapSample {
    double d;
    double gain;  // G_tx * G_rx
};

/// Product gain of the two beams against slant distance on one shell.
class OverlapGain {
public:
    OverlapGain(std::vector<OverlapSample> samples, int orbit_index);

    [[nodiscard]] std::span<const OverlapSample> samples() const { return samples_; }
    [[nodiscard]] int orbit_index() const { return orbit_index_; }

    /// Linear interpolation in (d, gain); 0 outside the sampled range.
    [[nodiscard]] double at(double d) const;

    [[nodiscard]] bool all_zero() const;

private:
    std::vector<OverlapSample> samples_;
    int orbit_index_;
};

/// Resamples G_tx(u) * G_rx(u) onto slant distance for u in [0, 1). With
/// gating, the product is zero wherever either mainlobe excludes u.
[[nodiscard]] OverlapGain overlap_gain(const GainPattern& tx, const GainPattern& rx, double altitude,
                                       bool gating, int orbit_index = 0);

}  // namespace snlink
