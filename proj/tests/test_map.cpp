#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "gnm/map.hpp"

using namespace gnm;

namespace {

std::string write_temp_csv(const std::string& name, const std::string& body) {
    const std::string path = "/tmp/gnm_test_" + name + ".csv";
    std::ofstream out(path);
    out << body;
    return path;
}

// Uniform sampling of a logistic map as CSV text.
std::string logistic_csv(double r, int knots, bool header) {
    std::string body = header ? "x_volts,y_volts\n" : "";
    char buf[80];
    for (int i = 0; i < knots; ++i) {
        const double x = static_cast<double>(i) / (knots - 1);
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", x, r * x * (1.0 - x));
        body += buf;
    }
    return body;
}

}  // namespace

TEST_CASE("eval_map examples") {
    CHECK(MapDescriptor::logistic(4.0).eval(0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(MapDescriptor::tent(2.0).eval(0.75) == doctest::Approx(0.5).epsilon(1e-12));

    // peak of the surrogate at the conjugate-r = 4 gain
    const auto gnm = MapDescriptor::gnm({1.052, 0.0, 0.0});
    CHECK(gnm.eval(1.315) == doctest::Approx(2.63).epsilon(1e-12));
    CHECK(gnm.domain().hi == doctest::Approx(2.63));
}

TEST_CASE("eval_map domain handling") {
    const auto log4 = MapDescriptor::logistic(4.0);
    CHECK_THROWS_AS(log4.eval(1.5), domain_error);
    CHECK_THROWS_AS(log4.eval(-0.1), domain_error);
    CHECK_NOTHROW(log4.eval(1.0 + 1e-13));  // endpoint tolerance

    const auto tab = MapDescriptor::tabulated({0.0, 0.3, 0.6, 1.0},
                                              {0.1, 0.5, 0.4, 0.2});
    CHECK_THROWS_AS(tab.eval(1.2), domain_error);
}

TEST_CASE("map_derivative examples") {
    CHECK(MapDescriptor::logistic(4.0).derivative(0.5).value ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(MapDescriptor::logistic(3.0).derivative(0.0).value ==
          doctest::Approx(3.0).epsilon(1e-12));

    const auto kink = MapDescriptor::tent(2.0).derivative(0.5);
    CHECK(kink.one_sided);
    CHECK(std::abs(kink.value) == doctest::Approx(2.0));
}

TEST_CASE("tabulated derivative matches the analytic oracle") {
    const double r = 3.7;
    std::vector<double> xs, ys;
    for (int i = 0; i < 2048; ++i) {
        const double x = static_cast<double>(i) / 2047;
        xs.push_back(x);
        ys.push_back(r * x * (1.0 - x));
    }
    const auto tab = MapDescriptor::tabulated(xs, ys);
    const double expected = r * (1.0 - 2.0 * 0.3);  // 1.48
    CHECK(tab.derivative(0.3).value == doctest::Approx(expected).epsilon(1e-4 / expected));
}

TEST_CASE("gnm_effective_r") {
    CHECK(gnm_effective_r({1.0, 0.0, 0.0}) == doctest::Approx(1e6 * 10e-6 / 2.63));
    CHECK(gnm_effective_r({0.789, 0.0, 0.0}) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(gnm_effective_r({1.052, 0.0, 0.0}) == doctest::Approx(4.0).epsilon(1e-12));

    SurrogateConstants skewed;
    skewed.gamma = 0.1;
    CHECK_THROWS_AS(gnm_effective_r({1.0, 0.0, 0.0}, skewed), config_error);
}

TEST_CASE("load_tabulated round trip against the analytic map") {
    const auto path = write_temp_csv("log4", logistic_csv(4.0, 1024, true));
    const auto tab = load_tabulated(path);
    CHECK(tab.domain().lo == doctest::Approx(0.0));
    CHECK(tab.domain().hi == doctest::Approx(1.0));

    double sup = 0.0;
    for (int i = 0; i <= 20000; ++i) {
        const double x = static_cast<double>(i) / 20000;
        sup = std::max(sup, std::abs(tab.eval(x) - 4.0 * x * (1.0 - x)));
    }
    CHECK(sup < 1e-6);
    std::remove(path.c_str());
}

TEST_CASE("load_tabulated error reporting") {
    const auto dup = write_temp_csv(
        "dup", "0.0,0.1\n0.2,0.3\n0.2,0.4\n0.5,0.2\n0.8,0.1\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(load_tabulated(dup)),
                         doctest::Contains("row 3"), parse_error);

    const auto tiny = write_temp_csv("tiny", "0.0,0.1\n0.5,0.2\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(load_tabulated(tiny)),
                         doctest::Contains("insufficient knots"), parse_error);

    const auto bad = write_temp_csv("bad", "0.0,0.1\n0.2,abc\n0.5,0.2\n0.8,0.1\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(load_tabulated(bad)),
                         doctest::Contains("row 2"), parse_error);
    std::remove(dup.c_str());
    std::remove(tiny.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("range closure across variants") {
    SurrogateConstants skewed;
    skewed.gamma = 0.2;
    const MapDescriptor variants[] = {
        MapDescriptor::logistic(3.9),
        MapDescriptor::logistic(4.3),  // clipping regime
        MapDescriptor::tent(1.999),
        MapDescriptor::sine(0.95),
        MapDescriptor::gnm({1.05, 0.2, -0.1}),
        MapDescriptor::gnm({0.9, -0.3, 0.3}, skewed),
        MapDescriptor::tabulated({0.0, 0.2, 0.5, 0.8, 1.0},
                                 {0.1, 0.9, 1.3, 0.7, 0.2}),
    };
    for (const auto& m : variants) {
        for (int i = 0; i <= 10000; ++i) {
            const double x =
                m.domain().lo + m.domain().width() * i / 10000.0;
            const double y = m.eval(x);
            REQUIRE(m.domain().contains(y));
        }
    }
}

TEST_CASE("conjugacy identity with gamma = 0") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> mu1(0.6, 1.05);
    for (int trial = 0; trial < 20; ++trial) {
        const GnmParams p{mu1(rng), 0.0, 0.0};
        const auto gnm = MapDescriptor::gnm(p);
        const auto logistic = MapDescriptor::logistic(gnm_effective_r(p));
        const double vc = gnm.domain().hi;
        for (int i = 0; i <= 500; ++i) {
            const double u = static_cast<double>(i) / 500;
            CHECK(std::abs(gnm.eval(vc * u) - vc * logistic.eval(u)) < 1e-12);
        }
    }
}

TEST_CASE("analytic derivatives agree with central differences") {
    const MapDescriptor smooth[] = {
        MapDescriptor::logistic(3.6),
        MapDescriptor::sine(0.9),
        MapDescriptor::gnm({0.95, 0.1, -0.2}),
    };
    for (const auto& m : smooth) {
        const double w = m.domain().width();
        const double h = 1e-7 * w;
        for (int i = 1; i < 1000; ++i) {
            const double x = m.domain().lo + w * i / 1000.0;
            if (x - h <= m.domain().lo || x + h >= m.domain().hi) continue;
            const auto d = m.derivative(x);
            if (d.one_sided) continue;  // clipped branch of the surrogate
            const double fd = (m.eval(x + h) - m.eval(x - h)) / (2.0 * h);
            const double scale = std::max(1.0, std::abs(d.value));
            REQUIRE(std::abs(d.value - fd) / scale < 1e-6);
        }
    }
}

TEST_CASE("surrogate unimodality for gamma in [0, 0.3]") {
    for (double gamma : {0.0, 0.1, 0.2, 0.3}) {
        SurrogateConstants c;
        c.gamma = gamma;
        // keep the peak below the clip so the derivative stays smooth
        const auto m = MapDescriptor::gnm({0.85, 0.0, 0.0}, c);
        int sign_changes = 0;
        double prev = m.derivative(m.domain().width() * 1e-3).value;
        for (int i = 2; i < 1000; ++i) {
            const double x = m.domain().width() * i / 1000.0;
            const double d = m.derivative(x).value;
            if (d == 0.0) continue;  // sampled exactly at the peak
            if (prev > 0 && d < 0) ++sign_changes;
            if (prev < 0 && d > 0) ++sign_changes;
            prev = d;
        }
        CHECK(sign_changes == 1);
    }
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(MapDescriptor::logistic(-1.0), config_error);
    CHECK_THROWS_AS(MapDescriptor::gnm({-0.5, 0.0, 0.0}), config_error);
    CHECK_THROWS_AS(MapDescriptor::gnm({1.0, 0.7, 0.0}), config_error);
    CHECK_THROWS_AS(MapDescriptor::tabulated({0, 1, 2}, {0, 1, 2}), parse_error);
}
