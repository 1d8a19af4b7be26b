#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hsx/bivariate_series.hpp"

using namespace hsx;

namespace {

BivariateSeries one_minus_u(int tu, int ts) {
    auto s = BivariateSeries::constant(1, tu, ts);
    s.at(1, 0) = -1;
    return s;
}

BivariateSeries one_minus_us(int tu, int ts) {
    auto s = BivariateSeries::constant(1, tu, ts);
    s.at(1, 1) = -1;
    return s;
}

}  // namespace

TEST_CASE("series construction and truncation discipline") {
    CHECK_THROWS_AS(BivariateSeries(0, 3), std::invalid_argument);
    const BivariateSeries a(3, 3);
    const BivariateSeries b(3, 4);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a.coeff(3, 0), std::out_of_range);
}

TEST_CASE("multiplication basics") {
    const int tu = 4, ts = 4;
    const auto a = BivariateSeries::monomial(3, 1, 2, tu, ts);
    const auto one = BivariateSeries::constant(1, tu, ts);
    CHECK(a * one == a);

    // (1 - us)^2 = 1 - 2us + u^2 s^2
    const auto sq = series_pow(one_minus_us(tu, ts), 2);
    CHECK(sq.coeff(0, 0) == 1);
    CHECK(sq.coeff(1, 1) == -2);
    CHECK(sq.coeff(2, 2) == 1);
    CHECK(sq.coeff(1, 0) == 0);
    CHECK(sq.coeff(2, 1) == 0);
}

TEST_CASE("inverse of 1-u is the geometric series") {
    const int tu = 6, ts = 3;
    const auto inv = series_inverse(one_minus_u(tu, ts));
    for (int a = 0; a < tu; ++a)
        for (int b = 0; b < ts; ++b)
            REQUIRE(inv.coeff(a, b) == (b == 0 ? Rat(1) : Rat(0)));

    // (1-u) * sum u^n == 1 within truncation
    const auto prod = one_minus_u(tu, ts) * inv;
    CHECK(prod == BivariateSeries::constant(1, tu, ts));
}

TEST_CASE("inverse of 1-us is the diagonal geometric series") {
    const int tu = 5, ts = 5;
    const auto inv = series_inverse(one_minus_us(tu, ts));
    for (int a = 0; a < tu; ++a)
        for (int b = 0; b < ts; ++b)
            REQUIRE(inv.coeff(a, b) == (a == b ? Rat(1) : Rat(0)));
}

TEST_CASE("inverse of 1-s truncated at s^3") {
    const int tu = 2, ts = 3;
    auto a = BivariateSeries::constant(1, tu, ts);
    a.at(0, 1) = -1;
    const auto inv = series_inverse(a);
    CHECK(inv.coeff(0, 0) == 1);
    CHECK(inv.coeff(0, 1) == 1);
    CHECK(inv.coeff(0, 2) == 1);
    CHECK(inv.coeff(1, 0) == 0);
}

TEST_CASE("inverse requires a unit constant term") {
    BivariateSeries a(3, 3);
    a.at(1, 0) = 1;
    CHECK_THROWS_AS(series_inverse(a), std::invalid_argument);
}

TEST_CASE("inverse round-trips on randomized unit series") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const int tu = 2 + static_cast<int>(rng() % 4);
        const int ts = 2 + static_cast<int>(rng() % 4);
        BivariateSeries a(tu, ts);
        for (int p = 0; p < tu; ++p)
            for (int q = 0; q < ts; ++q) {
                const int num = static_cast<int>(rng() % 11) - 5;
                const int den = 1 + static_cast<int>(rng() % 4);
                a.at(p, q) = Rat(num, den);
            }
        if (a.coeff(0, 0) == 0) a.at(0, 0) = 1;
        const auto prod = a * series_inverse(a);
        REQUIRE(prod == BivariateSeries::constant(1, tu, ts));
    }
}

TEST_CASE("printing uses p/q form") {
    BivariateSeries a(1, 2);
    a.at(0, 0) = Rat(1, 2);
    a.at(0, 1) = Rat(-3);
    CHECK(a.str() == "1/2 -3\n");
}
