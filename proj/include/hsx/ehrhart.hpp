#pragma once

// Lattice-point counting for closed and half-open hypersimplices and the
// h-vector of Delta'_{k,n} computed by non-geometric routes:
//
//   * h_by_statistics: the (exc, des) joint distribution over S_{n-1},
//   * h_by_counting:   binomial transform of dilate counts,
//   * h_closed_formula: the alternating restricted-binomial formula for
//                       the closed hypersimplex,
//
// plus exact Lagrange interpolation of the Ehrhart polynomial and the
// bivariate generating-function identity check (foata_han_verify) that
// ties the joint (des, exc) distribution to the dilate counts.
//
// Delta'_{k,n} is the slice of [0,1]^(n-1) with k-1 < sum x_i <= k (for
// k = 1 the closed slice; nothing is removed).  All arithmetic is exact.

#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsx/bivariate_series.hpp"
#include "hsx/permutation.hpp"
#include "hsx/polynomial.hpp"

namespace hsx {

/// Identifies Delta_{k,n} (closed) or Delta'_{k,n} (half-open).  Ambient
/// dimension is n-1.  Delta'_{1,n} equals Delta_{1,n}.
struct HypersimplexId {
    int k = 1;
    int n = 2;
    bool half_open = true;

    HypersimplexId(int k_, int n_, bool half_open_ = true)
        : k(k_), n(n_), half_open(half_open_) {
        if (n < 2 || k < 1 || k > n - 1)
            throw std::invalid_argument("HypersimplexId: need n >= 2 and 1 <= k <= n-1");
    }

    bool operator==(const HypersimplexId&) const = default;

    std::string str() const {
        std::string out = half_open ? "Delta'" : "Delta";
        out += "_{" + std::to_string(k) + "," + std::to_string(n) + "}";
        return out;
    }
};

/// h-vector (c_0, ..., c_{n-1}) of a hypersimplex; always n coefficients,
/// trailing zeros included.
struct HVector {
    HypersimplexId owner;
    std::vector<Int> coeffs;

    Int sum() const {
        Int acc = 0;
        for (const Int& c : coeffs) acc += c;
        return acc;
    }

    bool operator==(const HVector& o) const { return coeffs == o.coeffs; }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) out += ", ";
            out += coeffs[i].str();
        }
        out += ')';
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const HVector& h) {
        return os << h.str();
    }
};

/// Joint distribution of (exc, des) over S_m; cells[e][d] counts
/// permutations with e excedances and d descents.
struct JointTable {
    int m = 0;
    std::vector<std::vector<Int>> cells;  // m x m

    Int total() const {
        Int acc = 0;
        for (const auto& row : cells)
            for (const Int& c : row) acc += c;
        return acc;
    }
};

/// A_{k,n} = #{w in S_n : des(w) = k-1}, by the standard recurrence.
inline Int eulerian_number(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("eulerian_number: need 1 <= k <= n");
    // e[d] = #{w in S_j : des(w) = d}, built up over j = 1..n
    std::vector<Int> e = {Int(1)};
    for (int j = 2; j <= n; ++j) {
        std::vector<Int> next(static_cast<std::size_t>(j), Int(0));
        for (int d = 0; d < j; ++d) {
            Int acc = 0;
            if (d < j - 1) acc += Int(d + 1) * e[static_cast<std::size_t>(d)];
            if (d >= 1) acc += Int(j - d) * e[static_cast<std::size_t>(d) - 1];
            next[static_cast<std::size_t>(d)] = acc;
        }
        e = std::move(next);
    }
    return e[static_cast<std::size_t>(k) - 1];
}

/// Exhaustive (exc, des) joint distribution over S_m.
inline JointTable joint_table(int m) {
    if (m < 1) throw std::invalid_argument("joint_table: m >= 1 required");
    JointTable t;
    t.m = m;
    t.cells.assign(static_cast<std::size_t>(m),
                   std::vector<Int>(static_cast<std::size_t>(m), Int(0)));
    for_each_permutation(m, [&](const Permutation& w) {
        t.cells[static_cast<std::size_t>(exc(w))][static_cast<std::size_t>(des(w))] += 1;
    });
    return t;
}

/// Descent generating polynomial of S_m: entry d counts permutations with
/// d descents.
inline std::vector<Int> descent_polynomial(int m) {
    std::vector<Int> out(static_cast<std::size_t>(m), Int(0));
    for (int d = 0; d < m; ++d)
        out[static_cast<std::size_t>(d)] = eulerian_number(m, d + 1);
    return out;
}

namespace detail {

// Dilate count by coefficient extraction from ((1-x^{r+1})/(1-x))^{n-1}.
// Valid for any k >= 1 (returns 0 for slices beyond the cube); the
// HypersimplexId range check is the caller's concern.
inline Int lattice_count(int k, int n, int r, bool half_open) {
    if (n < 1 || k < 1) throw std::invalid_argument("lattice_count: bad (k, n)");
    if (r < 0) throw std::invalid_argument("lattice_count: r >= 0 required");
    const IntPolynomial cube = geometric_power(r + 1, n - 1);
    long long lo, hi;
    if (half_open && k == 1) {
        lo = 0;
        hi = r;
    } else if (half_open) {
        lo = static_cast<long long>(k - 1) * r + 1;
        hi = static_cast<long long>(k) * r;
    } else {
        lo = static_cast<long long>(k - 1) * r;
        hi = static_cast<long long>(k) * r;
    }
    Int acc = 0;
    for (long long i = lo; i <= hi; ++i)
        if (i >= 0) acc += cube.coeff(static_cast<std::size_t>(i));
    return acc;
}

}  // namespace detail

/// Number of lattice points of the r-th dilate.
inline Int count_points(const HypersimplexId& id, int r) {
    return detail::lattice_count(id.k, id.n, r, id.half_open);
}

/// Independent oracle: direct enumeration of {0..r}^(n-1) filtered by the
/// coordinate-sum window.  Exponential; intended for small n and r only.
inline Int count_points_by_enumeration(const HypersimplexId& id, int r) {
    if (r < 0) throw std::invalid_argument("count_points_by_enumeration: r >= 0 required");
    const int dim = id.n - 1;
    std::vector<int> x(static_cast<std::size_t>(dim), 0);
    Int acc = 0;
    const long long lo = static_cast<long long>(id.k - 1) * r;
    const long long hi = static_cast<long long>(id.k) * r;
    while (true) {
        long long sum = 0;
        for (int v : x) sum += v;
        const bool in_lower = (id.half_open && id.k > 1) ? (sum > lo) : (sum >= lo);
        if (in_lower && sum <= hi) acc += 1;
        int i = 0;
        while (i < dim && x[static_cast<std::size_t>(i)] == r) {
            x[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == dim) break;
        ++x[static_cast<std::size_t>(i)];
    }
    return acc;
}

/// h-vector from dilate counts r = 0..n-1 via the binomial transform.
inline HVector h_by_counting(const HypersimplexId& id) {
    std::vector<Int> counts;
    counts.reserve(static_cast<std::size_t>(id.n));
    for (int r = 0; r < id.n; ++r) counts.push_back(count_points(id, r));
    return HVector{id, binomial_transform_h(counts, id.n)};
}

/// h-vector of the half-open hypersimplex from permutation statistics:
/// c_i = #{w in S_{n-1} : exc(w) = k-1, des(w) = i}.
inline HVector h_by_statistics(const HypersimplexId& id) {
    if (!id.half_open)
        throw std::invalid_argument("h_by_statistics: stated for half-open hypersimplices");
    const int m = id.n - 1;
    const JointTable t = joint_table(m);
    std::vector<Int> c(static_cast<std::size_t>(id.n), Int(0));
    for (int d = 0; d < m; ++d)
        c[static_cast<std::size_t>(d)] = t.cells[static_cast<std::size_t>(id.k) - 1]
                                                [static_cast<std::size_t>(d)];
    return HVector{id, std::move(c)};
}

/// Closed-hypersimplex h-vector via the alternating restricted-binomial
/// formula c_d = sum_i (-1)^i C(n,i) (n choose (k-i)d - i)_{k-i}.
inline HVector h_closed_formula(int k, int n) {
    const HypersimplexId id(k, n, /*half_open=*/false);
    std::vector<Int> c(static_cast<std::size_t>(n), Int(0));
    for (int d = 0; d < n; ++d) {
        Int acc = 0;
        for (int i = 0; i < k; ++i) {
            const Int term = binomial(n, i) * restricted_binomial(n, (k - i) * d - i, k - i);
            if (i % 2 == 0) acc += term;
            else acc -= term;
        }
        c[static_cast<std::size_t>(d)] = acc;
    }
    return HVector{id, std::move(c)};
}

/// Evaluates a rational-coefficient polynomial (low degree first) at an
/// integer argument.
inline Rat eval_poly(const std::vector<Rat>& coeffs, long long r) {
    Rat acc = 0;
    Rat power = 1;
    for (const Rat& c : coeffs) {
        acc += c * power;
        power *= r;
    }
    return acc;
}

/// Ehrhart polynomial of the hypersimplex: exact Lagrange interpolation of
/// the counts at r = 0..n-1 (degree n-2 ... n-1).  The result is checked
/// against the direct counts at r = n..n+3 before returning.
inline std::vector<Rat> ehrhart_polynomial(const HypersimplexId& id) {
    const int npts = id.n;  // nodes 0..n-1, degree <= n-1 = dim
    std::vector<Rat> coeffs(static_cast<std::size_t>(npts), Rat(0));
    for (int j = 0; j < npts; ++j) {
        // Lagrange basis polynomial L_j expanded in coefficient form
        std::vector<Rat> basis = {Rat(1)};
        Rat denom = 1;
        for (int t = 0; t < npts; ++t) {
            if (t == j) continue;
            // multiply basis by (x - t)
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= basis[d] * t;
            }
            basis = std::move(next);
            denom *= Rat(j - t);
        }
        const Rat yj(count_points(id, j));
        for (std::size_t d = 0; d < basis.size(); ++d)
            coeffs[d] += yj * basis[d] / denom;
    }
    for (int r = id.n; r <= id.n + 3; ++r) {
        if (eval_poly(coeffs, r) != Rat(count_points(id, r)))
            throw std::logic_error("ehrhart_polynomial: interpolant fails to extrapolate");
    }
    return coeffs;
}

/// Outcome of the generating-function identity check.
struct FoataHanReport {
    bool pass = true;
    int r = 0;
    int max_n = 0;
    int max_k = 0;
    int mismatch_n = -1;
    int mismatch_k = -1;
    std::string detail;

    std::string str() const {
        std::ostringstream os;
        os << "foata-han identity r=" << r << " n<=" << max_n << " k<=" << max_k << ": ";
        if (pass) os << "pass";
        else os << "MISMATCH at (n=" << mismatch_n << ", k=" << mismatch_k << "): " << detail;
        return os.str();
    }
};

/// Verifies that the coefficient of u^n s^k in
///   (1-s) / ((1-u)^(r+1) (1-us)^(-r) - s(1-u))
/// equals the dilate count i(Delta'_{k+1,n+1}, r), for all n <= max_n and
/// k <= max_k, over exact truncated series arithmetic.
inline FoataHanReport foata_han_verify(int r, int max_n = 6, int max_k = 5) {
    if (r < 0) throw std::invalid_argument("foata_han_verify: r >= 0 required");
    FoataHanReport report;
    report.r = r;
    report.max_n = max_n;
    report.max_k = max_k;

    const int tu = max_n + 1;
    const int ts = max_k + 1;
    auto one_minus_u = BivariateSeries::constant(1, tu, ts);
    if (tu > 1) one_minus_u.at(1, 0) = -1;
    auto one_minus_us = BivariateSeries::constant(1, tu, ts);
    if (tu > 1 && ts > 1) one_minus_us.at(1, 1) = -1;

    const auto a = series_pow(one_minus_u, r + 1);
    const auto b = series_pow(series_inverse(one_minus_us), r);
    const auto s_mono = BivariateSeries::monomial(1, 0, 1, tu, ts);
    const auto denom = a * b - s_mono * one_minus_u;
    auto one_minus_s = BivariateSeries::constant(1, tu, ts);
    if (ts > 1) one_minus_s.at(0, 1) = -1;
    const auto rhs = one_minus_s * series_inverse(denom);

    for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= max_k; ++k) {
            const Int expected = detail::lattice_count(k + 1, n + 1, r, /*half_open=*/true);
            if (rhs.coeff(n, k) != Rat(expected)) {
                report.pass = false;
                report.mismatch_n = n;
                report.mismatch_k = k;
                std::ostringstream os;
                os << "series coefficient ";
                os << rhs.coeff(n, k) << " vs count " << expected.str();
                report.detail = os.str();
                return report;
            }
        }
    }
    return report;
}

}  // namespace hsx
