#include <omp.h>

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "snlink/errors.hpp"
#include "snlink/interference.hpp"

using namespace snlink;

namespace {

InterferenceConfig piecewise_config(std::vector<OrbitShell> shells, double steer_u,
                                    double rx_half = 0.1, int samples = 2001) {
    return {.shells = std::move(shells),
            .tx_pattern = piecewise_pattern(1.0, 0.0, 0.0, 0.28, samples),
            .rx_pattern = piecewise_pattern(1.0, 0.0, steer_u, rx_half, samples)};
}

}  // namespace

TEST_CASE("zero-gain patterns produce no interference") {
    auto cfg = piecewise_config({leo_shell()}, 0.15);
    cfg.tx_pattern = cfg.tx_pattern.scaled(0.0);
    CHECK(expected_interference(cfg) == 0.0);
    const auto mc = mc_expected_interference(cfg, 1000, 3);
    CHECK(mc.mean_w == 0.0);
    CHECK(mc.stderr_w == 0.0);
}

TEST_CASE("disjoint beams contribute nothing") {
    auto cfg = piecewise_config({leo_shell()}, 0.6);
    const InterferenceField field(cfg);
    CHECK_FALSE(field.kernels()[0].limits.has_value());
    CHECK(field.expected() == 0.0);
    CHECK(field.sample(1, 0).points == 0);
}

TEST_CASE("constant integrand hook reproduces the closed form") {
    // F(d) = 1/sqrt(d^2 - L^2) makes F(d) sqrt(d^2 - L^2) identically 1.
    auto cfg = piecewise_config({leo_shell()}, 0.3, 0.1);
    cfg.tx_pattern = piecewise_pattern(1.0, 0.0, 0.0, 0.5, 2001);
    cfg.path_loss = [](double d, const OrbitShell& s) {
        return 1.0 / std::sqrt((d - s.altitude_m) * (d + s.altitude_m));
    };
    const InterferenceField field(cfg);
    const auto lim = *field.kernels()[0].limits;
    const auto shell = leo_shell();
    const double exact = 2 * std::numbers::pi * shell.density() * shell.tx_power_w * (lim.upper_m - lim.lower_m);
    CHECK(field.expected() == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("unit path loss integrates the intensity measure") {
    // With F = 1 the Campbell integral is the window's mean count times P_SN.
    auto cfg = piecewise_config({meo_shell()}, 0.15);
    cfg.path_loss = [](double, const OrbitShell&) { return 1.0; };
    cfg.quadrature_points = 4096;
    const InterferenceField field(cfg);
    const auto& k = field.kernels()[0];
    CHECK(field.expected() == doctest::Approx(k.mean_count() * k.shell.tx_power_w).epsilon(1e-6));
}

TEST_CASE("linearity in P_SN and density, additivity over shells") {
    auto base = piecewise_config({leo_shell(), meo_shell(), geo_shell()}, 0.15);
    const double total = expected_interference(base);
    CHECK(total > 0.0);

    double sum = 0.0;
    for (const auto& s : base.shells) sum += expected_interference(piecewise_config({s}, 0.15));
    CHECK(total == doctest::Approx(sum).epsilon(1e-12));

    auto powered = base;
    for (auto& s : powered.shells) s.tx_power_w *= 3.0;
    CHECK(expected_interference(powered) == doctest::Approx(3.0 * total).epsilon(1e-12));

    auto dense = base;
    for (auto& s : dense.shells) s.satellite_count *= 2;
    CHECK(expected_interference(dense) == doctest::Approx(2.0 * total).epsilon(1e-12));

    auto duty = base;
    duty.duty_cycle = 0.25;
    CHECK(expected_interference(duty) == doctest::Approx(0.25 * total).epsilon(1e-12));
}

TEST_CASE("quadrature converges") {
    for (double u : {0.05, 0.15, 0.25}) {
        auto cfg = piecewise_config({leo_shell(), meo_shell(), geo_shell()}, u);
        cfg.quadrature_points = 512;
        const double coarse = expected_interference(cfg);
        cfg.quadrature_points = 1024;
        const double fine = expected_interference(cfg);
        CHECK(std::abs(coarse - fine) / fine < 1e-3);
    }
}

TEST_CASE("sampling is deterministic and counts are Poisson") {
    const auto cfg = piecewise_config({leo_shell()}, 0.15);
    const InterferenceField field(cfg);
    CHECK(sample_interference(cfg, 17) == sample_interference(cfg, 17));
    const auto a = field.sample(5, 123), b = field.sample(5, 123);
    CHECK(a.power_w == b.power_w);
    CHECK(a.points == b.points);

    constexpr int n = 10000;
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += static_cast<double>(field.sample(9, i).points);
    const double mean = field.kernels()[0].mean_count();
    CHECK(std::abs(total / n - mean) < 3.0 * std::sqrt(mean / n));
}

TEST_CASE("vanishing density yields no points") {
    auto shell = leo_shell();
    shell.satellite_count = 1;
    const auto cfg = piecewise_config({shell}, 0.15);
    const InterferenceField field(cfg);
    CHECK(field.kernels()[0].mean_count() < 1e-4);
    int nonzero = 0;
    for (int i = 0; i < 2000; ++i) nonzero += field.sample(1, i).power_w > 0.0;
    CHECK(nonzero < 10);
}

TEST_CASE("monte carlo standard error scales as 1/sqrt(n)") {
    const InterferenceField field(piecewise_config({leo_shell()}, 0.15));
    const auto small = mc_expected_interference(field, 20000, 4);
    const auto large = mc_expected_interference(field, 80000, 4);
    CHECK(small.stderr_w / large.stderr_w == doctest::Approx(2.0).epsilon(0.2));
    CHECK_THROWS_AS((void)mc_expected_interference(field, 99, 4), DomainError);
}

TEST_CASE("parallel and serial monte carlo are bit-identical") {
    const InterferenceField field(piecewise_config({leo_shell(), meo_shell(), geo_shell()}, 0.2));
    const auto serial = reference::mc_expected_interference_serial(field, 5000, 77);
    for (int threads : {1, 2, 4}) {
        omp_set_num_threads(threads);
        const auto par = mc_expected_interference(field, 5000, 77);
        CHECK(par.mean_w == serial.mean_w);
        CHECK(par.stderr_w == serial.stderr_w);
    }
}

TEST_CASE("campbell agrees with monte carlo on the LEO shell") {
    const auto cfg = piecewise_config({leo_shell()}, 0.3);
    const double campbell = expected_interference(cfg);
    const auto mc = mc_expected_interference(cfg, 100000, 2025);
    CHECK(std::abs(campbell - mc.mean_w) <= 3.0 * mc.stderr_w);
}

TEST_CASE("campbell equivalence over shells, steering and pattern models") {
    const int samples = 2001;
    for (const auto& shell : {leo_shell(), meo_shell(), geo_shell()}) {
        for (double u : {0.1, 0.2, 0.3}) {
            for (bool array : {false, true}) {
                InterferenceConfig cfg =
                    array ? InterferenceConfig{.shells = {shell},
                                               .tx_pattern = array_factor_pattern(8, 1.0 / (8 * 0.28), 0.0, samples),
                                               .rx_pattern = array_factor_pattern(20, 0.5, u, samples)}
                          : piecewise_config({shell}, u);
                const InterferenceField field(cfg);
                const auto mc = mc_expected_interference(field, 100000, 31337);
                CAPTURE(shell.altitude_m);
                CAPTURE(u);
                CAPTURE(array);
                CHECK(std::abs(field.expected() - mc.mean_w) <= 3.0 * mc.stderr_w);
            }
        }
    }
}

TEST_CASE("config validation") {
    auto cfg = piecewise_config({}, 0.15);
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = piecewise_config({leo_shell()}, 0.15);
    cfg.quadrature_points = 10;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}
