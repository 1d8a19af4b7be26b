#pragma once

// Truncated bivariate power series in (u, s) with exact rational
// coefficients.  Truncation orders are carried on the value and must match
// on every binary operation; mixing truncations is an error, not a
// coercion.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsx/polynomial.hpp"

namespace hsx {

class BivariateSeries {
public:
    /// Zero series truncated at u^trunc_u, s^trunc_s (exclusive orders).
    BivariateSeries(int trunc_u, int trunc_s)
        : trunc_u_(trunc_u), trunc_s_(trunc_s),
          coeffs_(static_cast<std::size_t>(trunc_u) * static_cast<std::size_t>(trunc_s), Rat(0)) {
        if (trunc_u < 1 || trunc_s < 1)
            throw std::invalid_argument("BivariateSeries: truncation orders must be >= 1");
    }

    static BivariateSeries constant(const Rat& c, int trunc_u, int trunc_s) {
        BivariateSeries out(trunc_u, trunc_s);
        out.at(0, 0) = c;
        return out;
    }

    /// the monomial c * u^du * s^ds
    static BivariateSeries monomial(const Rat& c, int du, int ds, int trunc_u, int trunc_s) {
        BivariateSeries out(trunc_u, trunc_s);
        if (du < trunc_u && ds < trunc_s) out.at(du, ds) = c;
        return out;
    }

    int trunc_u() const { return trunc_u_; }
    int trunc_s() const { return trunc_s_; }

    const Rat& coeff(int du, int ds) const {
        if (du < 0 || du >= trunc_u_ || ds < 0 || ds >= trunc_s_)
            throw std::out_of_range("BivariateSeries::coeff: index beyond truncation");
        return coeffs_[idx(du, ds)];
    }

    Rat& at(int du, int ds) {
        if (du < 0 || du >= trunc_u_ || ds < 0 || ds >= trunc_s_)
            throw std::out_of_range("BivariateSeries::at: index beyond truncation");
        return coeffs_[idx(du, ds)];
    }

    bool operator==(const BivariateSeries&) const = default;

    BivariateSeries operator+(const BivariateSeries& o) const {
        check_same_truncation(o);
        BivariateSeries out(trunc_u_, trunc_s_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            out.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        return out;
    }

    BivariateSeries operator-(const BivariateSeries& o) const {
        check_same_truncation(o);
        BivariateSeries out(trunc_u_, trunc_s_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            out.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        return out;
    }

    BivariateSeries operator*(const BivariateSeries& o) const {
        check_same_truncation(o);
        BivariateSeries out(trunc_u_, trunc_s_);
        for (int a = 0; a < trunc_u_; ++a)
            for (int b = 0; b < trunc_s_; ++b) {
                const Rat& x = coeffs_[idx(a, b)];
                if (x == 0) continue;
                for (int c = 0; a + c < trunc_u_; ++c)
                    for (int d = 0; b + d < trunc_s_; ++d) {
                        const Rat& y = o.coeffs_[o.idx(c, d)];
                        if (y == 0) continue;
                        out.coeffs_[out.idx(a + c, b + d)] += x * y;
                    }
            }
        return out;
    }

    /// matrix of rationals "p/q", one row per u-degree
    std::string str() const {
        std::ostringstream os;
        for (int a = 0; a < trunc_u_; ++a) {
            for (int b = 0; b < trunc_s_; ++b) {
                if (b) os << ' ';
                os << rat_str(coeffs_[idx(a, b)]);
            }
            os << '\n';
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const BivariateSeries& s) {
        return os << s.str();
    }

private:
    static std::string rat_str(const Rat& r) {
        const Int num = boost::multiprecision::numerator(r);
        const Int den = boost::multiprecision::denominator(r);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }

    void check_same_truncation(const BivariateSeries& o) const {
        if (trunc_u_ != o.trunc_u_ || trunc_s_ != o.trunc_s_)
            throw std::invalid_argument("BivariateSeries: truncation order mismatch");
    }

    std::size_t idx(int du, int ds) const {
        return static_cast<std::size_t>(du) * static_cast<std::size_t>(trunc_s_) +
               static_cast<std::size_t>(ds);
    }

    int trunc_u_;
    int trunc_s_;
    std::vector<Rat> coeffs_;
};

inline BivariateSeries series_mul(const BivariateSeries& a, const BivariateSeries& b) {
    return a * b;
}

inline BivariateSeries series_pow(const BivariateSeries& a, int e) {
    if (e < 0) throw std::invalid_argument("series_pow: nonnegative exponent required");
    BivariateSeries out = BivariateSeries::constant(1, a.trunc_u(), a.trunc_s());
    for (int i = 0; i < e; ++i) out = out * a;
    return out;
}

/// Multiplicative inverse in the truncated ring; requires a unit, i.e. a
/// nonzero constant term.  a * series_inverse(a) == 1 up to truncation.
inline BivariateSeries series_inverse(const BivariateSeries& a) {
    const Rat c0 = a.coeff(0, 0);
    if (c0 == 0)
        throw std::invalid_argument("series_inverse: constant term is not a unit");
    BivariateSeries out(a.trunc_u(), a.trunc_s());
    // solve (a * out)(du, ds) = [du == 0 && ds == 0] by increasing degree
    for (int du = 0; du < a.trunc_u(); ++du)
        for (int ds = 0; ds < a.trunc_s(); ++ds) {
            Rat acc = (du == 0 && ds == 0) ? Rat(1) : Rat(0);
            for (int p = 0; p <= du; ++p)
                for (int q = 0; q <= ds; ++q) {
                    if (p == 0 && q == 0) continue;
                    acc -= a.coeff(p, q) * out.coeff(du - p, ds - q);
                }
            out.at(du, ds) = acc / c0;
        }
    return out;
}

}  // namespace hsx
