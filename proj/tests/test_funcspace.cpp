#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "decimal_oracle.hpp"
#include "gnm/funcspace.hpp"

using namespace gnm;

TEST_CASE("decimal-string oracle sanity") {
    CHECK(oracle::dec_mul("12", "34") == "408");
    CHECK(oracle::dec_mul("999", "999") == "998001");
    CHECK(oracle::dec_pow(10, 6) == "1000000");
}

TEST_CASE("f1 examples") {
    CHECK(f1({1, 10, 2, 2, 2, 2, 3}) == 60);
    CHECK(f1({0, 1, 1, 1, 1, 1, 1}) == 1);
    CHECK(f1({2, 5, 2, 2, 2, 2, 4}) == 80);
}

TEST_CASE("f2 examples") {
    CHECK(f2({0, 10, 1, 1, 1, 5, 2}) == 1000);
    CHECK(f2({0, 1, 1, 1, 1, 1, 1}) == 1);
    CHECK(f2({0, 4, 1, 1, 1, 3, 3}) == 576);
}

TEST_CASE("f3 examples") {
    CHECK(f3({1, 2, 10, 10, 10, 5, 2}) == BigInt("20000000"));
    CHECK(f3({0, 1, 1, 1, 1, 1, 1}) == 1);
    // 2 * 2 * 9 * 9 * 9 * 2
    CHECK(f3({1, 2, 3, 3, 3, 2, 2}) == 2 * 2 * 9 * 9 * 9 * 2);
}

TEST_CASE("f4 examples") {
    CHECK(f4({0, 1, 1, 1, 1, 1, 1}) == 1);
    CHECK(f4({1, 2, 10, 10, 10, 5, 2}) == BigInt("20000000000000"));
}

TEST_CASE("formulas match the independent oracle on random draws") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> levels(1, 12);
    std::uniform_int_distribution<int> bits(0, 3);
    std::uniform_int_distribution<int> iters(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        SpaceParams p;
        p.c = bits(rng);
        p.n_mu = levels(rng);
        p.n_mu1 = levels(rng);
        p.n_mu2 = levels(rng);
        p.n_mu3 = levels(rng);
        p.n_vref = levels(rng);
        p.n = iters(rng);
        REQUIRE(f1(p).str() == oracle::f1(p));
        REQUIRE(f2(p).str() == oracle::f2(p));
        REQUIRE(f3(p).str() == oracle::f3(p));
        REQUIRE(f4(p).str() == oracle::f4(p));
        // algebraic identity between the two oscillator designs
        BigInt per_iter = BigInt(p.n_mu1) * p.n_mu2 * p.n_mu3;
        BigInt factor = 1;
        for (int i = 0; i < p.n; ++i) factor *= per_iter;
        REQUIRE(f4(p) == f3(p) * factor);
    }
}

TEST_CASE("monotonicity in every argument") {
    const SpaceParams base{1, 3, 3, 3, 3, 3, 2};
    auto all = [](const SpaceParams& p) {
        return std::array<BigInt, 4>{f1(p), f2(p), f3(p), f4(p)};
    };
    const auto ref = all(base);
    constexpr std::array<int SpaceParams::*, 7> fields = {
        &SpaceParams::c,     &SpaceParams::n_mu,  &SpaceParams::n_mu1,
        &SpaceParams::n_mu2, &SpaceParams::n_mu3, &SpaceParams::n_vref,
        &SpaceParams::n};
    for (auto field : fields) {
        SpaceParams p = base;
        p.*field += 1;
        const auto bumped = all(p);
        for (int i = 0; i < 4; ++i) CHECK(bumped[i] >= ref[i]);
    }
}

TEST_CASE("compare_spaces ordering and edge rows") {
    const SpaceParams p{1, 4, 4, 4, 4, 5, 1};
    const auto rows = compare_spaces(p, 1, 8);
    REQUIRE(rows.size() == 8);
    for (const auto& row : rows) {
        if (row.n >= 2) {
            CHECK(row.f4 > row.f3);
            CHECK(row.f3 > row.f2);
            CHECK(row.f2 > row.f1);
        }
        CHECK(row.log10_f4 == doctest::Approx(big_log10(row.f4)));
    }

    const auto ones = compare_spaces({0, 1, 1, 1, 1, 1, 1}, 1, 1);
    CHECK(ones[0].f1 == 1);
    CHECK(ones[0].f2 == 1);
    CHECK(ones[0].f3 == 1);
    CHECK(ones[0].f4 == 1);
}

TEST_CASE("big_log10") {
    CHECK(big_log10(BigInt(1000)) == doctest::Approx(3.0));
    BigInt huge = 1;
    for (int i = 0; i < 100; ++i) huge *= 10;
    CHECK(big_log10(huge) == doctest::Approx(100.0));
    CHECK_THROWS_AS(big_log10(BigInt(0)), config_error);
}

TEST_CASE("compare csv emission") {
    const auto rows = compare_spaces({1, 10, 10, 10, 10, 5, 1}, 1, 4);
    write_compare_csv(rows, "/tmp/gnm_test_funcspace.csv");
    std::ifstream in("/tmp/gnm_test_funcspace.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,f1,f2,f3,f4,log10_f1,log10_f2,log10_f3,log10_f4");
    int lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == 4);
    std::remove("/tmp/gnm_test_funcspace.csv");
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(f1({-1, 1, 1, 1, 1, 1, 1}), config_error);
    CHECK_THROWS_AS(f1({0, 0, 1, 1, 1, 1, 1}), config_error);
    CHECK_THROWS_AS(compare_spaces({}, 3, 2), config_error);
}
