#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "snlink/antenna.hpp"
#include "snlink/errors.hpp"

using namespace snlink;

namespace {

double af_power(int n, double s, double du) {
    const double psi = M_PI * s * du;
    if (std::abs(std::sin(psi)) < 1e-15) return 1.0;
    const double r = std::sin(n * psi) / (n * std::sin(psi));
    return r * r;
}

}  // namespace

TEST_CASE("array factor pattern") {
    const auto p = array_factor_pattern(8, 0.5, 0.2, 2001);
    CHECK(p.gain_at(0.2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.mainlobe_halfwidth() == doctest::Approx(0.25));
    for (const auto& s : p.samples()) {
        CHECK(s.gain <= 1.0 + 1e-12);
        CHECK(s.gain == doctest::Approx(af_power(8, 0.5, s.u - 0.2)).epsilon(1e-12));
    }

    SUBCASE("first null at |u - u0| = 1/4 by dense scan") {
        double best_u = 0.0, best = 1.0;
        for (double du = 0.05; du <= 0.35; du += 1e-6) {
            const double g = af_power(8, 0.5, du);
            if (g < best) best = g, best_u = du;
        }
        CHECK(best_u == doctest::Approx(0.25).epsilon(1e-5));
        CHECK(best < 1e-10);
    }
    SUBCASE("symmetric about the steering direction") {
        for (double du = 0.0; du < 0.8; du += 0.013) {
            CHECK(std::abs(af_power(8, 0.5, du) - af_power(8, 0.5, -du)) < 1e-12);
        }
        // The sampled grid is symmetric about 0, so a broadside pattern is too.
        const auto b = array_factor_pattern(8, 0.5, 0.0, 2001);
        const auto s = b.samples();
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(std::abs(s[i].gain - s[s.size() - 1 - i].gain) < 1e-12);
        }
    }
    CHECK_THROWS_AS((void)array_factor_pattern(1, 0.5, 0.0, 128), DomainError);
    CHECK_THROWS_AS((void)array_factor_pattern(8, 1.5, 0.0, 128), DomainError);
    CHECK_THROWS_AS((void)array_factor_pattern(8, 0.5, 0.0, 32), DomainError);
}

TEST_CASE("piecewise pattern") {
    const auto p = piecewise_pattern(2.0, 0.1, 0.3, 0.1, 2001);
    CHECK(p.gain_at(0.3) == 2.0);
    CHECK(p.gain_at(0.4) == doctest::Approx(2.0));  // closed mainlobe
    CHECK(p.gain_at(0.2) == 2.0);
    CHECK(p.gain_at(0.45) == doctest::Approx(0.1));
    CHECK(p.in_mainlobe(0.4));
    CHECK_FALSE(p.in_mainlobe(0.401));

    // Trapezoid of the sampled pattern equals the rectangle areas up to one
    // grid step of edge smearing.
    double area = 0.0;
    const auto s = p.samples();
    for (std::size_t i = 1; i < s.size(); ++i) area += 0.5 * (s[i].gain + s[i - 1].gain) * (s[i].u - s[i - 1].u);
    const double exact = 2 * 0.1 * 2.0 + (2.0 - 2 * 0.1) * 0.1;
    CHECK(std::abs(area - exact) <= 2.0 * 0.001 * (2.0 - 0.1));

    const auto hard = piecewise_pattern(1.0, 0.0, 0.0, 0.28, 2001);
    CHECK(hard.gain_at(0.5) == 0.0);
    CHECK_THROWS_AS((void)piecewise_pattern(1.0, 1.0, 0.0, 0.1, 64), DomainError);
}

TEST_CASE("distance and direction cosine mapping") {
    const double l = 350e3;
    CHECK(distance_from_u(0.0, l) == l);
    CHECK(distance_from_u(0.2, l) == doctest::Approx(357217.0).epsilon(1e-6));
    CHECK(distance_from_u(0.4, l) == doctest::Approx(381881.5).epsilon(1e-6));
    double prev = 0.0;
    for (double u = 0.0; u < 0.999; u += 0.01) {
        const double d = distance_from_u(u, l);
        CHECK(d > prev);
        CHECK(u_from_distance(d, l) == doctest::Approx(u).epsilon(1e-12));
        prev = d;
    }
    CHECK_THROWS_AS((void)distance_from_u(1.0, l), DomainError);
    CHECK_THROWS_AS((void)u_from_distance(l * 0.9, l), DomainError);
}

TEST_CASE("overlap gain") {
    const double l = 350e3;

    SUBCASE("disjoint mainlobes give an all-zero table") {
        const auto tx = piecewise_pattern(1.0, 0.0, 0.0, 0.1, 2001);
        const auto rx = piecewise_pattern(1.0, 0.0, 0.6, 0.1, 2001);
        CHECK(overlap_gain(tx, rx, l, true).all_zero());
    }
    SUBCASE("unit mainlobes over u in [0.2, 0.4]") {
        const auto tx = piecewise_pattern(1.0, 0.0, 0.3, 0.1, 2001);
        const auto rx = piecewise_pattern(1.0, 0.0, 0.3, 0.1, 2001);
        const auto o = overlap_gain(tx, rx, l, true);
        const double lo = l / std::sqrt(1 - 0.04), hi = l / std::sqrt(1 - 0.16);
        for (const auto& s : o.samples()) {
            const bool inside = s.d >= lo * (1 - 1e-12) && s.d <= hi * (1 + 1e-12);
            CHECK(s.gain == (inside ? 1.0 : 0.0));
        }
    }
    SUBCASE("satellite beam |u| <= 0.28 cuts off the overlap") {
        const auto sat = piecewise_pattern(1.0, 0.0, 0.0, 0.28, 2001);
        const double rx_half = 0.05;
        const auto rx = piecewise_pattern(1.0, 0.0, 0.28 + rx_half + 0.01, rx_half, 2001);
        CHECK(overlap_gain(sat, rx, l, true).all_zero());
        const auto rx_in = piecewise_pattern(1.0, 0.0, 0.28 + rx_half - 0.01, rx_half, 2001);
        CHECK_FALSE(overlap_gain(sat, rx_in, l, true).all_zero());
    }
    SUBCASE("gating support equals the mainlobe intersection") {
        const auto tx = array_factor_pattern(8, 1.0 / (8 * 0.28), 0.0, 2001);
        const auto rx = array_factor_pattern(20, 0.5, 0.22, 2001);
        const auto o = overlap_gain(tx, rx, l, true);
        for (const auto& s : o.samples()) {
            const double u = u_from_distance(s.d, l);
            const bool both = tx.in_mainlobe(u) && rx.in_mainlobe(u);
            if (!both) CHECK(s.gain == 0.0);
        }
        const auto ungated = overlap_gain(tx, rx, l, false);
        const auto a = o.samples(), b = ungated.samples();
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double u = u_from_distance(a[i].d, l);
            if (tx.in_mainlobe(u) && rx.in_mainlobe(u)) CHECK(a[i].gain == b[i].gain);
        }
    }
    SUBCASE("product commutes") {
        const auto tx = array_factor_pattern(8, 0.45, 0.0, 1001);
        const auto rx = array_factor_pattern(16, 0.5, 0.15, 1001);
        const auto a = overlap_gain(tx, rx, l, true).samples();
        const auto b = overlap_gain(rx, tx, l, true).samples();
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].d == b[i].d);
            CHECK(a[i].gain == b[i].gain);
        }
    }
    SUBCASE("interpolation between samples is linear in d") {
        const auto tx = array_factor_pattern(8, 0.45, 0.0, 1001);
        const auto rx = array_factor_pattern(16, 0.5, 0.15, 1001);
        const auto o = overlap_gain(tx, rx, l, false);
        const auto s = o.samples();
        const double mid = 0.5 * (s[100].d + s[101].d);
        CHECK(o.at(mid) == doctest::Approx(0.5 * (s[100].gain + s[101].gain)));
        CHECK(o.at(s.front().d * 0.5) == 0.0);
    }
    SUBCASE("errors") {
        const auto a = piecewise_pattern(1.0, 0.0, 0.0, 0.1, 101);
        const auto b = piecewise_pattern(1.0, 0.0, 0.0, 0.1, 201);
        CHECK_THROWS_AS((void)overlap_gain(a, b, l, true), DomainError);
        const GainPattern tail({{-1.0, 1.0}, {-0.5, 1.0}, {1.0, 1.0}}, 0.0, 0.5);
        CHECK_THROWS_AS((void)overlap_gain(tail, tail, l, true), DomainError);
    }
}

TEST_CASE("pattern file loading") {
    const auto dir = std::filesystem::temp_directory_path() / "snlink_test_antenna";
    std::filesystem::create_directories(dir);
    const auto good = dir / "good.txt";
    {
        std::ofstream f(good);
        f << "# u gain\n-1 0.0\n-0.5 0.25  # sidelobe\n\n0 1\n0.5 0.25\n1 0\n";
    }
    const auto p = load_pattern(good, 0.0, 0.5);
    CHECK(p.samples().size() == 5);
    CHECK(p.gain_at(0.25) == doctest::Approx(0.625));

    const auto bad = dir / "bad.txt";
    {
        std::ofstream f(bad);
        f << "0 1\n0 2\n";
    }
    CHECK_THROWS_WITH_AS((void)load_pattern(bad, 0.0, 0.5), doctest::Contains("strictly increasing"),
                         ConfigError);
    const auto neg = dir / "neg.txt";
    {
        std::ofstream f(neg);
        f << "0 1\n0.5 -2\n";
    }
    CHECK_THROWS_AS((void)load_pattern(neg, 0.0, 0.5), ConfigError);
    CHECK_THROWS_AS((void)load_pattern(dir / "missing.txt", 0.0, 0.5), IoError);
}
