// SPDX-License-Identifier: Apache-2.0
#include "snlink/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "snlink/errors.hpp"
#include "snlink/rng.hpp"

namespace snlink {

void SweepSpec::validate() const {
    auto ascending = [](const std::vector<double>& v) { return std::is_sorted(v.begin(), v.end()); };
    if (steer_u.empty() || !ascending(steer_u)) {
        throw ConfigError("--sweep-u: grid must be non-empty and ascending");
    }
    if (sn_distance_m.empty() || !ascending(sn_distance_m)) {
        throw ConfigError("--sweep-dk: grid must be non-empty and ascending");
    }
    for (double u : steer_u) {
        if (!(u >= 0.0 && u < 1.0)) throw ConfigError("--sweep-u: direction cosines must lie in [0, 1)");
    }
    for (double d : sn_distance_m) {
        if (!(d >= base.link.reference_distance_m)) {
            throw ConfigError("--sweep-dk: distances must be >= reference_distance_m");
        }
    }
    if (mc_check && n_realizations < 100) throw ConfigError("--mc-check: need at least 100 realizations");
    base.validate();
}

std::vector<double> parse_grid(const std::string& text, const char* flag) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw ConfigError(std::string(flag) + ": expected start:stop:n");

    double start = 0.0, stop = 0.0;
    long n = 0;
    try {
        std::size_t used = 0;
        start = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument("start");
        stop = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument("stop");
        n = std::stol(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument("n");
    } catch (const std::exception&) {
        throw ConfigError(std::string(flag) + ": malformed grid '" + text + "'");
    }
    if (n < 1) throw ConfigError(std::string(flag) + ": n must be >= 1");
    if (stop < start) throw ConfigError(std::string(flag) + ": grid must be ascending");
    if (n == 1) return {start};

    std::vector<double> grid(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) grid[i] = start + (stop - start) * i / (n - 1);
    grid.back() = stop;
    return grid;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    const auto n_u = static_cast<std::int64_t>(spec.steer_u.size());
    const auto n_d = static_cast<std::int64_t>(spec.sn_distance_m.size());

    std::vector<double> interference(spec.steer_u.size());
    std::vector<std::optional<McEstimate>> mc(spec.steer_u.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n_u; ++i) {
        const InterferenceField field(spec.base.interference_config(spec.steer_u[i]));
        interference[i] = field.expected();
        if (spec.mc_check) mc[i] = mc_expected_interference(field, spec.n_realizations, spec.seed);
    }

    std::vector<SweepRow> rows(static_cast<std::size_t>(n_u * n_d));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t r = 0; r < n_u * n_d; ++r) {
        const auto di = r / n_u;
        const auto ui = r % n_u;
        LinkParams link = spec.base.link;
        link.sn_distance_m = spec.sn_distance_m[di];
        const double gain = sn_path_gain(sn_geometry(link));
        rows[r] = {spec.steer_u[ui], u_to_elevation_deg(spec.steer_u[ui]), link.sn_distance_m,
                   solve_power_threshold(spec.base.qos, link, gain, interference[ui]), mc[ui]};
    }
    return rows;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_metadata(std::ostream& out, const Scenario& scenario, std::uint64_t seed) {
    out << "# snlink " << SNLINK_VERSION << '\n'
        << "# generator " << kGeneratorName << '\n'
        << "# seed " << seed << '\n'
        << "# config_hash fnv1a64:" << scenario.config_hash << '\n';
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool with_mc) {
    out << "u,elevation_deg,d_k,E_I_W,P_u_W,P_u_dBm,eps_c,eps_q,eps_t,g_th,nu,converged";
    if (with_mc) out << ",mc_E_I_W,mc_stderr_W";
    out << '\n';
    for (const auto& row : rows) {
        const auto& s = row.solution;
        out << format_double(row.u) << ',' << format_double(row.elevation_deg) << ','
            << format_double(row.sn_distance_m) << ',' << format_double(s.expected_interference_w)
            << ',' << format_double(s.p_u_w) << ',' << format_double(watts_to_dbm(s.p_u_w)) << ','
            << format_double(s.eps_c) << ',' << format_double(s.eps_q) << ','
            << format_double(s.eps_t) << ',' << format_double(s.g_th) << ','
            << format_double(s.nu) << ',' << (s.converged ? "true" : "false");
        if (with_mc) {
            out << ',' << format_double(row.mc ? row.mc->mean_w : 0.0) << ','
                << format_double(row.mc ? row.mc->stderr_w : 0.0);
        }
        out << '\n';
    }
}

std::vector<OverlapRow> emit_overlap_table(const InterferenceConfig& cfg) {
    const InterferenceField field(cfg);
    const PathLossFn path_loss = cfg.path_loss ? cfg.path_loss : PathLossFn(interferer_path_loss);
    std::vector<OverlapRow> rows;
    for (std::size_t i = 0; i < field.kernels().size(); ++i) {
        const auto& k = field.kernels()[i];
        if (!k.limits) continue;
        for (const auto& s : k.overlap.samples()) {
            if (s.d < k.limits->lower_m * (1.0 - 1e-12) || s.d > k.limits->upper_m * (1.0 + 1e-12)) {
                continue;
            }
            const double pl = path_loss(s.d, k.shell);
            rows.push_back({static_cast<int>(i), s.d, pl, s.gain, pl * s.gain});
        }
    }
    return rows;
}

void write_overlap_csv(std::ostream& out, const std::vector<OverlapRow>& rows) {
    out << "orbit_index,d_m,f_pl,gain_product,F\n";
    for (const auto& r : rows) {
        out << r.orbit_index << ',' << format_double(r.d_m) << ',' << format_double(r.path_loss)
            << ',' << format_double(r.gain_product) << ',' << format_double(r.kernel) << '\n';
    }
}

}  // namespace snlink
