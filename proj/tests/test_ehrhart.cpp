#include <catch2/catch_amalgamated.hpp>

#include "hsx/ehrhart.hpp"

using namespace hsx;

namespace {

std::vector<Int> ints(std::initializer_list<int> xs) {
    std::vector<Int> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("hypersimplex id validation") {
    CHECK_THROWS_AS(HypersimplexId(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(HypersimplexId(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(HypersimplexId(5, 4), std::invalid_argument);
    CHECK(HypersimplexId(2, 3).half_open);
    CHECK(HypersimplexId(2, 3).str() == "Delta'_{2,3}");
    CHECK(HypersimplexId(2, 3, false).str() == "Delta_{2,3}");
}

TEST_CASE("eulerian numbers") {
    CHECK(eulerian_number(1, 1) == 1);
    CHECK(eulerian_number(5, 1) == 1);
    CHECK(eulerian_number(4, 3) == 11);
    CHECK(eulerian_number(4, 2) == 11);
    CHECK(eulerian_number(4, 4) == 1);
    CHECK_THROWS_AS(eulerian_number(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(eulerian_number(4, 5), std::invalid_argument);
}

TEST_CASE("eulerian recurrence agrees with enumeration up to n = 8") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<Int> by_des(static_cast<std::size_t>(n), Int(0));
        for_each_permutation(n, [&](const Permutation& w) {
            by_des[static_cast<std::size_t>(des(w))] += 1;
        });
        for (int k = 1; k <= n; ++k)
            REQUIRE(eulerian_number(n, k) == by_des[static_cast<std::size_t>(k) - 1]);
    }
}

TEST_CASE("joint table") {
    const JointTable t1 = joint_table(1);
    CHECK(t1.cells[0][0] == 1);
    CHECK(t1.total() == 1);

    const JointTable t4 = joint_table(4);
    CHECK(t4.total() == 24);
    CHECK(t4.cells[2] == ints({0, 4, 6, 1}));
    CHECK(t4.cells[3] == ints({0, 1, 0, 0}));

    // row and column sums are both Eulerian
    for (int m = 1; m <= 7; ++m) {
        const JointTable t = joint_table(m);
        for (int j = 0; j < m; ++j) {
            Int row = 0, col = 0;
            for (int i = 0; i < m; ++i) {
                row += t.cells[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                col += t.cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
            REQUIRE(row == eulerian_number(m, j + 1));
            REQUIRE(col == eulerian_number(m, j + 1));
        }
    }
}

TEST_CASE("dilate counts") {
    CHECK(count_points(HypersimplexId(2, 3), 2) == 3);
    CHECK(count_points(HypersimplexId(2, 5), 1) == 6);
    CHECK(count_points(HypersimplexId(2, 4), 0) == 0);
    CHECK(count_points(HypersimplexId(3, 5), 0) == 0);
    CHECK(count_points(HypersimplexId(2, 3, false), 1) == 3);
    CHECK(count_points(HypersimplexId(1, 4), 0) == 1);
    CHECK_THROWS_AS(count_points(HypersimplexId(2, 4), -1), std::invalid_argument);
}

TEST_CASE("coefficient extraction equals brute-force enumeration") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k < n; ++k)
            for (int r = 0; r <= 4; ++r)
                for (bool half : {true, false}) {
                    const HypersimplexId id(k, n, half);
                    REQUIRE(count_points(id, r) == count_points_by_enumeration(id, r));
                }
}

TEST_CASE("closed minus half-open counts the removed hyperplane slice") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 2; k < n; ++k)
            for (int r = 0; r <= 4; ++r) {
                const Int closed = count_points(HypersimplexId(k, n, false), r);
                const Int open = count_points(HypersimplexId(k, n, true), r);
                REQUIRE(closed - open == restricted_binomial(n - 1, (k - 1) * r, r + 1));
            }
    // k = 1: nothing is removed
    for (int n = 2; n <= 6; ++n)
        for (int r = 0; r <= 4; ++r)
            REQUIRE(count_points(HypersimplexId(1, n, false), r) ==
                    count_points(HypersimplexId(1, n, true), r));
}

TEST_CASE("h by counting") {
    CHECK(h_by_counting(HypersimplexId(2, 3)).coeffs == ints({0, 1, 0}));
    CHECK(h_by_counting(HypersimplexId(1, 4)).coeffs == ints({1, 0, 0, 0}));
    CHECK(h_by_counting(HypersimplexId(3, 5)).coeffs == ints({0, 4, 6, 1, 0}));
}

TEST_CASE("h by statistics") {
    CHECK(h_by_statistics(HypersimplexId(3, 5)).coeffs == ints({0, 4, 6, 1, 0}));
    CHECK(h_by_statistics(HypersimplexId(1, 4)).coeffs == ints({1, 0, 0, 0}));
    CHECK(h_by_statistics(HypersimplexId(4, 5)).coeffs == ints({0, 1, 0, 0, 0}));
    CHECK_THROWS_AS(h_by_statistics(HypersimplexId(2, 4, false)), std::invalid_argument);
}

TEST_CASE("statistics equal counting for all 1 <= k < n <= 8") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k < n; ++k) {
            const HypersimplexId id(k, n);
            REQUIRE(h_by_statistics(id) == h_by_counting(id));
        }
}

TEST_CASE("volume: coefficients sum to the Eulerian number") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k < n; ++k) {
            REQUIRE(h_by_counting(HypersimplexId(k, n)).sum() ==
                    eulerian_number(n - 1, k));
            REQUIRE(h_by_counting(HypersimplexId(k, n, false)).sum() ==
                    eulerian_number(n - 1, k));
        }
}

TEST_CASE("half-open slices partition the cube") {
    for (int n = 2; n <= 8; ++n) {
        std::vector<Int> total(static_cast<std::size_t>(n), Int(0));
        for (int k = 1; k < n; ++k) {
            const auto h = h_by_counting(HypersimplexId(k, n));
            for (std::size_t i = 0; i < total.size(); ++i) total[i] += h.coeffs[i];
        }
        const auto desc = descent_polynomial(n - 1);
        for (int d = 0; d < n; ++d)
            REQUIRE(total[static_cast<std::size_t>(d)] ==
                    (d < n - 1 ? desc[static_cast<std::size_t>(d)] : Int(0)));
    }
}

TEST_CASE("closed formula") {
    CHECK(h_closed_formula(1, 4).coeffs == ints({1, 0, 0, 0}));
    CHECK(h_closed_formula(2, 3).coeffs == ints({1, 0, 0}));
    CHECK(h_closed_formula(2, 4) == h_by_counting(HypersimplexId(2, 4, false)));
}

TEST_CASE("closed formula equals closed counting for 1 <= k < n <= 7") {
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k < n; ++k)
            REQUIRE(h_closed_formula(k, n) == h_by_counting(HypersimplexId(k, n, false)));
}

TEST_CASE("ehrhart polynomial interpolation") {
    // Delta'_{2,3}: i(r) = r(r+1)/2
    const auto p = ehrhart_polynomial(HypersimplexId(2, 3));
    REQUIRE(p.size() == 3);
    CHECK(p[0] == 0);
    CHECK(p[1] == Rat(1, 2));
    CHECK(p[2] == Rat(1, 2));

    // Delta'_{1,3}: i(r) = (r+1)(r+2)/2
    const auto q = ehrhart_polynomial(HypersimplexId(1, 3));
    CHECK(q[0] == 1);
    CHECK(q[1] == Rat(3, 2));
    CHECK(q[2] == Rat(1, 2));

    // interpolants reproduce direct counts past the nodes
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k)
            for (bool half : {true, false}) {
                const HypersimplexId id(k, n, half);
                const auto poly = ehrhart_polynomial(id);
                for (int r = n; r <= n + 3; ++r)
                    REQUIRE(eval_poly(poly, r) == Rat(count_points(id, r)));
            }
}
