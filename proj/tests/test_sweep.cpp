#include <cmath>
#include <sstream>
#include <string>

#include "doctest.h"
#include "snlink/errors.hpp"
#include "snlink/sweep.hpp"

using namespace snlink;

TEST_CASE("grid parsing") {
    const auto g = parse_grid("0.02:0.18:9", "--sweep-u");
    REQUIRE(g.size() == 9);
    CHECK(g.front() == 0.02);
    CHECK(g.back() == 0.18);
    CHECK(g[4] == doctest::Approx(0.10));
    CHECK(parse_grid("5:5:1", "x") == std::vector<double>{5.0});
    CHECK_THROWS_AS((void)parse_grid("1:0:3", "x"), ConfigError);
    CHECK_THROWS_AS((void)parse_grid("0:1", "x"), ConfigError);
    CHECK_THROWS_AS((void)parse_grid("0:1:0", "x"), ConfigError);
    CHECK_THROWS_AS((void)parse_grid("0:1:z", "x"), ConfigError);
}

TEST_CASE("a one-point sweep equals a direct solve") {
    const auto base = default_scenario();
    SweepSpec spec{.steer_u = {base.rx_steer_u}, .sn_distance_m = {base.link.sn_distance_m}, .base = base};
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 1);
    const auto direct = solve_power_threshold(base.qos, base.link, sn_geometry(base.link),
                                              base.interference_config());
    CHECK(rows[0].solution.p_u_w == direct.p_u_w);
    CHECK(rows[0].solution.eps_t == direct.eps_t);
    CHECK_FALSE(rows[0].mc.has_value());
}

TEST_CASE("rows are d_k-major and csv round-trips") {
    const auto base = default_scenario();
    SweepSpec spec{.steer_u = {0.05, 0.1, 0.15},
                   .sn_distance_m = {50e3, 100e3},
                   .base = base,
                   .mc_check = true,
                   .n_realizations = 200,
                   .seed = 3};
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 6);
    CHECK(rows[1].u == 0.1);
    CHECK(rows[1].sn_distance_m == 50e3);
    CHECK(rows[3].sn_distance_m == 100e3);
    CHECK(rows[3].solution.expected_interference_w == rows[0].solution.expected_interference_w);
    REQUIRE(rows[0].mc.has_value());

    std::ostringstream out;
    write_metadata(out, base, spec.seed);
    write_sweep_csv(out, rows, true);
    std::istringstream in(out.str());
    std::string line;
    int data = 0;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.starts_with('#')) continue;
        if (!header) {
            CHECK(line.starts_with("u,elevation_deg,d_k,E_I_W,P_u_W"));
            CHECK(line.ends_with("mc_E_I_W,mc_stderr_W"));
            header = true;
            continue;
        }
        std::istringstream fields(line);
        std::string tok;
        std::vector<std::string> cols;
        while (std::getline(fields, tok, ',')) cols.push_back(tok);
        REQUIRE(cols.size() == 14);
        CHECK(std::stod(cols[0]) == rows[data].u);
        CHECK(std::stod(cols[4]) == rows[data].solution.p_u_w);
        CHECK(std::stod(cols[6]) == rows[data].solution.eps_c);
        ++data;
    }
    CHECK(data == 6);
    CHECK(out.str().find("# seed 3") != std::string::npos);
}

TEST_CASE("overlap table rows stay inside the integration window") {
    const auto cfg = default_scenario().interference_config(0.2);
    const auto rows = emit_overlap_table(cfg);
    REQUIRE_FALSE(rows.empty());
    const InterferenceField field(cfg);
    for (const auto& r : rows) {
        const auto lim = *field.kernels()[r.orbit_index].limits;
        CHECK(r.d_m >= lim.lower_m * (1 - 1e-12));
        CHECK(r.d_m <= lim.upper_m * (1 + 1e-12));
        CHECK(r.kernel == doctest::Approx(r.path_loss * r.gain_product).epsilon(1e-15));
    }
    std::ostringstream out;
    write_overlap_csv(out, rows);
    CHECK(out.str().starts_with("orbit_index,d_m,f_pl,gain_product,F\n"));
}

TEST_CASE("format_double round-trips") {
    for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300, 0.0}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("sweep validation") {
    SweepSpec spec{.steer_u = {0.2, 0.1}, .sn_distance_m = {100e3}, .base = default_scenario()};
    CHECK_THROWS_AS(spec.validate(), ConfigError);
    spec.steer_u = {0.1};
    spec.mc_check = true;
    spec.n_realizations = 10;
    CHECK_THROWS_AS(spec.validate(), ConfigError);
}
