// SPDX-License-Identifier: Apache-2.0
#include "snlink/scenario.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "snlink/errors.hpp"

namespace snlink {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Entry {
    std::string key;
    std::string value;
    int line;
};

[[noreturn]] void fail(const Entry& e, const std::string& why) {
    throw ConfigError("line " + std::to_string(e.line) + ": " + e.key + ": " + why);
}

double as_double(const Entry& e) {
    double v = 0.0;
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v)) fail(e, "expected a number, got '" + e.value + "'");
    return v;
}

std::int64_t as_int(const Entry& e) {
    const double v = as_double(e);
    if (v != std::floor(v) || std::abs(v) > 9.0e15) fail(e, "expected an integer, got '" + e.value + "'");
    return static_cast<std::int64_t>(v);
}

bool as_bool(const Entry& e) {
    if (e.value == "true" || e.value == "1" || e.value == "yes" || e.value == "on") return true;
    if (e.value == "false" || e.value == "0" || e.value == "no" || e.value == "off") return false;
    fail(e, "expected true or false, got '" + e.value + "'");
}

PatternModel as_model(const Entry& e) {
    if (e.value == "piecewise") return PatternModel::piecewise;
    if (e.value == "array") return PatternModel::array_factor;
    if (e.value == "file") return PatternModel::file;
    fail(e, "expected piecewise, array or file, got '" + e.value + "'");
}

using Setter = std::function<void(const Entry&)>;

std::map<std::string, Setter> pattern_keys(const std::string& prefix, PatternSpec& p,
                                           const std::filesystem::path& base_dir) {
    return {
        {prefix + "pattern", [&p](const Entry& e) { p.model = as_model(e); }},
        {prefix + "halfwidth_u", [&p](const Entry& e) { p.halfwidth_u = as_double(e); }},
        {prefix + "mainlobe_gain", [&p](const Entry& e) { p.mainlobe_gain = as_double(e); }},
        {prefix + "sidelobe_gain", [&p](const Entry& e) { p.sidelobe_gain = as_double(e); }},
        {prefix + "array_elements", [&p](const Entry& e) { p.array_elements = static_cast<int>(as_int(e)); }},
        {prefix + "array_spacing", [&p](const Entry& e) { p.array_spacing = as_double(e); }},
        {prefix + "pattern_file", [&p, base_dir](const Entry& e) { p.file = base_dir / e.value; }},
    };
}

void check(bool ok, const char* key, const std::string& constraint) {
    if (!ok) throw ConfigError(std::string(key) + ": " + constraint);
}

void validate_pattern(const PatternSpec& p, const char* prefix) {
    const std::string pre(prefix);
    if (p.model == PatternModel::piecewise) {
        check(p.halfwidth_u > 0.0, (pre + "halfwidth_u").c_str(), "must be > 0");
        check(p.mainlobe_gain > p.sidelobe_gain && p.sidelobe_gain >= 0.0,
              (pre + "mainlobe_gain").c_str(), "need mainlobe_gain > sidelobe_gain >= 0");
    } else if (p.model == PatternModel::array_factor) {
        check(p.array_elements >= 2, (pre + "array_elements").c_str(), "must be >= 2");
        check(p.array_spacing > 0.0 && p.array_spacing <= 1.0, (pre + "array_spacing").c_str(),
              "must lie in (0, 1]");
    } else {
        check(!p.file.empty(), (pre + "pattern_file").c_str(), "required when pattern = file");
        check(p.halfwidth_u >= 0.0, (pre + "halfwidth_u").c_str(), "must be >= 0");
    }
}

}  // namespace

GainPattern PatternSpec::build(double center, int n_samples) const {
    switch (model) {
        case PatternModel::piecewise:
            return piecewise_pattern(mainlobe_gain, sidelobe_gain, center, halfwidth_u, n_samples);
        case PatternModel::array_factor:
            return array_factor_pattern(array_elements, array_spacing, center, n_samples);
        case PatternModel::file:
            return load_pattern(file, center, halfwidth_u);
    }
    throw ConfigError("unknown pattern model");
}

InterferenceConfig Scenario::interference_config(double steer_u) const {
    return {.shells = shells,
            .tx_pattern = sat.build(sat.center_u, pattern_samples),
            .rx_pattern = rx.build(steer_u, pattern_samples),
            .gating = gating,
            .quadrature_points = quadrature_points,
            .duty_cycle = duty_cycle};
}

void Scenario::validate() const {
    link.validate();
    qos.validate();
    check(!shells.empty(), "[shell]", "at least one shell is required");
    for (const auto& s : shells) s.validate();
    check(rx_steer_u >= 0.0 && rx_steer_u < 1.0, "rx_elevation_deg", "must lie in (0, 90]");
    validate_pattern(rx, "rx_");
    validate_pattern(sat, "sat_");
    check(sat.center_u >= -1.0 && sat.center_u <= 1.0, "sat_center_u", "must lie in [-1, 1]");
    check(pattern_samples >= 64, "pattern_samples", "must be >= 64");
    check(quadrature_points >= 64, "quadrature_points", "must be >= 64");
    check(duty_cycle >= 0.0 && duty_cycle <= 1.0, "duty_cycle", "must lie in [0, 1]");
    check(mc_realizations == 0 || mc_realizations >= 100, "mc_realizations",
          "must be 0 (off) or >= 100");
}

Scenario default_scenario() {
    Scenario s;
    s.link.noise_psd_w_per_hz = dbm_to_watts(-150.0);
    s.shells = {leo_shell(), meo_shell(), geo_shell()};
    s.rx_steer_u = elevation_deg_to_u(80.0);
    s.rx.halfwidth_u = 0.1;
    s.rx.array_elements = 20;
    s.rx.array_spacing = 0.5;
    s.sat.center_u = 0.0;
    s.sat.halfwidth_u = 0.28;
    s.sat.array_elements = 8;
    s.sat.array_spacing = 1.0 / (8 * 0.28);
    s.config_hash = fnv1a64_hex({});
    return s;
}

Scenario parse_config(std::string_view text, const std::filesystem::path& base_dir) {
    Scenario s = default_scenario();
    s.config_hash = fnv1a64_hex(text);

    double elevation_deg = u_to_elevation_deg(s.rx_steer_u);
    std::map<std::string, Setter> top = {
        {"frame_length_s", [&](const Entry& e) { s.link.frame_length_s = as_double(e); }},
        {"bandwidth_hz", [&](const Entry& e) { s.link.bandwidth_hz = as_double(e); }},
        {"packet_bits", [&](const Entry& e) { s.link.packet_bits = as_double(e); }},
        {"noise_psd_dbm_hz", [&](const Entry& e) { s.link.noise_psd_w_per_hz = dbm_to_watts(as_double(e)); }},
        {"packet_rate_pps", [&](const Entry& e) { s.link.packet_rate_pps = as_double(e); }},
        {"tx_antennas", [&](const Entry& e) { s.link.tx_antennas = static_cast<int>(as_int(e)); }},
        {"carrier_hz", [&](const Entry& e) { s.link.carrier_hz = as_double(e); }},
        {"sn_distance_km", [&](const Entry& e) { s.link.sn_distance_m = as_double(e) * 1e3; }},
        {"reference_distance_m", [&](const Entry& e) { s.link.reference_distance_m = as_double(e); }},
        {"sn_pathloss_exp", [&](const Entry& e) { s.link.sn_pathloss_exp = as_double(e); }},
        {"eps_qos", [&](const Entry& e) { s.qos.eps_qos = as_double(e); }},
        {"max_delay_s", [&](const Entry& e) { s.qos.max_delay_s = as_double(e); }},
        {"rx_elevation_deg", [&](const Entry& e) { elevation_deg = as_double(e); }},
        {"sat_center_u", [&](const Entry& e) { s.sat.center_u = as_double(e); }},
        {"pattern_samples", [&](const Entry& e) { s.pattern_samples = static_cast<int>(as_int(e)); }},
        {"gating", [&](const Entry& e) { s.gating = as_bool(e); }},
        {"quadrature_points", [&](const Entry& e) { s.quadrature_points = static_cast<int>(as_int(e)); }},
        {"duty_cycle", [&](const Entry& e) { s.duty_cycle = as_double(e); }},
        {"seed", [&](const Entry& e) {
             const auto v = as_int(e);
             if (v < 0) fail(e, "must be >= 0");
             s.seed = static_cast<std::uint64_t>(v);
         }},
        {"mc_realizations", [&](const Entry& e) {
             const auto v = as_int(e);
             if (v < 0) fail(e, "must be >= 0");
             s.mc_realizations = static_cast<std::uint64_t>(v);
         }},
    };
    top.merge(pattern_keys("rx_", s.rx, base_dir));
    top.merge(pattern_keys("sat_", s.sat, base_dir));

    std::vector<OrbitShell> shells;
    auto shell_keys = [&shells]() -> std::map<std::string, Setter> {
        auto& sh = shells.back();
        return {
            {"altitude_km", [&sh](const Entry& e) { sh.altitude_m = as_double(e) * 1e3; }},
            {"satellites", [&sh](const Entry& e) { sh.satellite_count = static_cast<int>(as_int(e)); }},
            {"atmosphere_km", [&sh](const Entry& e) { sh.atmosphere_m = as_double(e) * 1e3; }},
            {"alpha", [&sh](const Entry& e) { sh.pathloss_exp_atmosphere = as_double(e); }},
            {"alpha0", [&sh](const Entry& e) { sh.pathloss_exp_space = as_double(e); }},
            {"tx_power_w", [&sh](const Entry& e) { sh.tx_power_w = as_double(e); }},
            {"earth_radius_km", [&sh](const Entry& e) { sh.earth_radius_m = as_double(e) * 1e3; }},
            {"pathloss_unit_km", [&sh](const Entry& e) { sh.pathloss_unit_km = as_bool(e); }},
        };
    };
    std::map<std::string, Setter> current_shell;
    std::vector<std::map<std::string, bool>> shell_seen;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line == "[shell]") {
            shells.push_back(OrbitShell{.altitude_m = 0.0, .satellite_count = 0});
            current_shell = shell_keys();
            shell_seen.emplace_back();
            continue;
        }
        if (line.front() == '[') {
            throw ConfigError("line " + std::to_string(line_no) + ": unknown section " +
                              std::string(line));
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        Entry e{std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))),
                line_no};
        if (e.value.empty()) fail(e, "missing value");

        auto& table = shells.empty() ? top : current_shell;
        auto it = table.find(e.key);
        if (it == table.end()) {
            fail(e, shells.empty() ? "unknown key" : "unknown key in [shell] block");
        }
        it->second(e);
        if (!shells.empty()) shell_seen.back()[e.key] = true;
    }

    for (std::size_t i = 0; i < shells.size(); ++i) {
        for (const char* required : {"altitude_km", "satellites"}) {
            if (!shell_seen[i].contains(required)) {
                throw ConfigError("[shell] #" + std::to_string(i + 1) + ": " + required +
                                  " is required");
            }
        }
    }
    if (!shells.empty()) s.shells = std::move(shells);

    if (!(elevation_deg > 0.0 && elevation_deg <= 90.0)) {
        throw ConfigError("rx_elevation_deg: must lie in (0, 90]");
    }
    s.rx_steer_u = elevation_deg_to_u(elevation_deg);
    s.validate();
    return s;
}

Scenario load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading config file: " + path.string());
    return parse_config(buf.str(), path.parent_path());
}

double elevation_deg_to_u(double elevation_deg) {
    if (elevation_deg == 90.0) return 0.0;
    return std::cos(elevation_deg * std::numbers::pi / 180.0);
}

double u_to_elevation_deg(double u) { return std::acos(u) * 180.0 / std::numbers::pi; }

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return out;
}

}  // namespace snlink
