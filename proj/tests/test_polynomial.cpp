#include <catch2/catch_amalgamated.hpp>

#include "hsx/polynomial.hpp"

using namespace hsx;

namespace {

IntPolynomial make(std::initializer_list<int> cs) {
    std::vector<Int> v;
    for (int c : cs) v.emplace_back(c);
    return IntPolynomial(std::move(v));
}

// independent route for (n choose r)_l via inclusion-exclusion:
// sum_i (-1)^i C(n,i) C(n-1+r-l*i, n-1)
Int restricted_binomial_incl_excl(int n, int r, int l) {
    Int acc = 0;
    for (int i = 0; i <= n; ++i) {
        const Int term = binomial(n, i) * binomial(n - 1 + r - l * i, n - 1);
        if (i % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

}  // namespace

TEST_CASE("polynomial multiplication") {
    CHECK(make({1, 1}) * make({1, 1}) == make({1, 2, 1}));
    CHECK(make({1, 2}) * IntPolynomial::zero() == IntPolynomial::zero());
    CHECK(make({1, 1, 1}) * make({1, 1, 1}) == make({1, 2, 3, 2, 1}));
    CHECK(poly_mul(make({1, 1, 1}), make({1, 1, 1})).degree() == 4);
}

TEST_CASE("trailing zeros are trimmed") {
    CHECK(make({1, 0, 0}) == make({1}));
    CHECK(make({0, 0}).is_zero());
    CHECK(make({0}).degree() == -1);
    CHECK((make({1, 1}) - make({0, 1})) == make({1}));
}

TEST_CASE("geometric power") {
    CHECK(geometric_power(2, 3) == make({1, 3, 3, 1}));
    CHECK(geometric_power(1, 5) == make({1}));
    const auto p = geometric_power(3, 3);
    CHECK(p.degree() == 6);
    CHECK(p.coeff(3) == 7);
    CHECK_THROWS_AS(geometric_power(0, 2), std::invalid_argument);
}

TEST_CASE("restricted binomial coefficients") {
    CHECK(restricted_binomial(2, 1, 2) == 2);
    CHECK(restricted_binomial(5, 0, 3) == 1);
    CHECK(restricted_binomial(3, 3, 3) == 7);
    CHECK(restricted_binomial(3, -1, 2) == 0);
    CHECK(restricted_binomial(3, 7, 2) == 0);
}

TEST_CASE("restricted binomial matches the inclusion-exclusion route") {
    // n >= 1: the empty product needs the degenerate C(., -1) convention
    for (int n = 1; n <= 6; ++n)
        for (int l = 1; l <= 6; ++l)
            for (int r = 0; r <= n * (l - 1) + 2; ++r)
                REQUIRE(restricted_binomial(n, r, l) ==
                        restricted_binomial_incl_excl(n, r, l));
}

TEST_CASE("restricted binomials over r sum to l^n") {
    for (int n = 0; n <= 6; ++n)
        for (int l = 1; l <= 6; ++l) {
            Int sum = 0;
            for (int r = 0; r <= n * (l - 1); ++r) sum += restricted_binomial(n, r, l);
            Int expected = 1;
            for (int i = 0; i < n; ++i) expected *= l;
            REQUIRE(sum == expected);
        }
}

TEST_CASE("binomial transform of lattice counts") {
    // half-open triangle: i(r) = r(r+1)/2
    CHECK(binomial_transform_h({Int(0), Int(1), Int(3)}, 3) ==
          std::vector<Int>{0, 1, 0});
    // standard 2-simplex: i(r) = (r+1)(r+2)/2
    CHECK(binomial_transform_h({Int(1), Int(3), Int(6)}, 3) ==
          std::vector<Int>{1, 0, 0});
    CHECK(binomial_transform_h({Int(0), Int(0), Int(0)}, 3) ==
          std::vector<Int>{0, 0, 0});
    CHECK_THROWS_AS(binomial_transform_h({Int(1)}, 3), std::invalid_argument);
}

TEST_CASE("binomial transform inverts the generating identity") {
    // expanding h(t)/(1-t)^n reproduces the counts that produced h
    const int n = 4;
    const std::vector<Int> counts = {Int(0), Int(2), Int(9), Int(24), Int(50)};
    const auto h = binomial_transform_h(counts, n);
    for (int r = 0; r < n; ++r) {
        // i(r) = sum_j h_j * C(n-1+r-j, n-1)
        Int acc = 0;
        for (int j = 0; j < n; ++j)
            acc += h[static_cast<std::size_t>(j)] * binomial(n - 1 + r - j, n - 1);
        REQUIRE(acc == counts[static_cast<std::size_t>(r)]);
    }
}
