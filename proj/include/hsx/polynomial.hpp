#pragma once

// Dense univariate polynomials with arbitrary-precision integer
// coefficients, plus the restricted binomial coefficients (n choose r)_l
// read off from (1 + t + ... + t^(l-1))^n and the binomial transform that
// turns lattice-point counts into h-vector coefficients.
//
// Everything here is exact; no floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsx {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense polynomial; coeffs[i] is the coefficient of t^i, trailing zeros
/// trimmed (the zero polynomial has an empty list).
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static IntPolynomial constant(Int c) {
        return IntPolynomial(std::vector<Int>{std::move(c)});
    }

    static IntPolynomial zero() { return IntPolynomial(); }

    bool is_zero() const { return coeffs_.empty(); }

    /// degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// coefficient of t^i (0 outside the stored range)
    const Int& coeff(std::size_t i) const {
        static const Int kZero = 0;
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const IntPolynomial&) const = default;

    IntPolynomial operator+(const IntPolynomial& o) const {
        std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
        return IntPolynomial(std::move(out));
    }

    IntPolynomial operator-(const IntPolynomial& o) const {
        std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
        return IntPolynomial(std::move(out));
    }

    IntPolynomial operator*(const IntPolynomial& o) const {
        if (is_zero() || o.is_zero()) return zero();
        std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                out[i + j] += coeffs_[i] * o.coeffs_[j];
        return IntPolynomial(std::move(out));
    }

    /// coefficient list, low degree first
    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) out += ", ";
            out += coeffs_[i].str();
        }
        out += ']';
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
        return os << p.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    return a * b;
}

/// (1 + t + t^2 + ... + t^(l-1))^n, expanded.
inline IntPolynomial geometric_power(int l, int n) {
    if (l < 1) throw std::invalid_argument("geometric_power: l >= 1 required");
    if (n < 0) throw std::invalid_argument("geometric_power: n >= 0 required");
    IntPolynomial base(std::vector<Int>(static_cast<std::size_t>(l), Int(1)));
    IntPolynomial out = IntPolynomial::constant(1);
    for (int i = 0; i < n; ++i) out = out * base;
    return out;
}

/// (n choose r)_l: the coefficient of t^r in geometric_power(l, n).
/// Zero when r < 0 or r > n(l-1).
inline Int restricted_binomial(int n, int r, int l) {
    if (l < 1) throw std::invalid_argument("restricted_binomial: l >= 1 required");
    if (n < 0) throw std::invalid_argument("restricted_binomial: n >= 0 required");
    if (r < 0) return 0;
    return geometric_power(l, n).coeff(static_cast<std::size_t>(r));
}

/// Ordinary binomial coefficient, exact; zero for k < 0 or k > n.
inline Int binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

/// Given counts[r] = i(P, r) for r = 0.. and the series identity
/// sum_r i(P,r) t^r = h(t) / (1-t)^n, recovers the h coefficients
/// c_j = sum_{i<=j} (-1)^(j-i) C(n, j-i) counts[i] for j = 0..n-1.
inline std::vector<Int> binomial_transform_h(const std::vector<Int>& counts, int n) {
    if (static_cast<int>(counts.size()) < n)
        throw std::invalid_argument("binomial_transform_h: need at least n counts");
    std::vector<Int> c(static_cast<std::size_t>(n), Int(0));
    for (int j = 0; j < n; ++j) {
        Int acc = 0;
        for (int i = 0; i <= j; ++i) {
            const Int term = binomial(n, j - i) * counts[static_cast<std::size_t>(i)];
            if ((j - i) % 2 == 0) acc += term;
            else acc -= term;
        }
        c[static_cast<std::size_t>(j)] = acc;
    }
    return c;
}

}  // namespace hsx
