#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hcf/ratfun.hpp"

namespace hcf {

/// Truncated power series in x with coefficients in the parameter fraction
/// field. A Series of order N stores exactly the coefficients 0..N.
/// Arithmetic never fabricates coefficients: every operation yields the
/// largest order it can prove correct and no more.
class Series {
public:
    Series() = default;
    Series(int arity, int order)
        : arity_(arity), c_(static_cast<std::size_t>(order) + 1, MPFrac::constant(arity, Rat(0))) {
        if (order < 0) throw Error("Series: negative order");
    }
    Series(int arity, std::vector<MPFrac> coeffs) : arity_(arity), c_(std::move(coeffs)) {
        if (c_.empty()) throw Error("Series: empty coefficient list");
    }

    int arity() const { return arity_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<MPFrac>& coeffs() const { return c_; }

    const MPFrac& coeff(int i) const {
        if (i < 0 || i > order())
            throw Error("Series: coefficient index " + std::to_string(i) +
                        " beyond truncation order " + std::to_string(order()));
        return c_[static_cast<std::size_t>(i)];
    }
    MPFrac& coeff_mut(int i) { return c_[static_cast<std::size_t>(i)]; }

    Series truncated(int n) const {
        if (n > order()) throw Error("Series: cannot extend truncation order");
        Series r(arity_, n);
        for (int i = 0; i <= n; ++i) r.c_[i] = c_[i];
        return r;
    }

    Series operator-() const {
        Series r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Series operator+(const Series& s, const Series& t) { return merge(s, t, false); }
    friend Series operator-(const Series& s, const Series& t) { return merge(s, t, true); }

    /// Product truncated to min(order(), other.order()).
    friend Series operator*(const Series& s, const Series& t) {
        check(s, t);
        int n = std::min(s.order(), t.order());
        Series r(s.arity_, n);
        for (int i = 0; i <= n; ++i) {
            if (s.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (t.c_[j].is_zero()) continue;
                r.c_[i + j] += s.c_[i] * t.c_[j];
            }
        }
        return r;
    }

    Series& operator+=(const Series& o) { *this = *this + o; return *this; }
    Series& operator-=(const Series& o) { *this = *this - o; return *this; }
    Series& operator*=(const Series& o) { *this = *this * o; return *this; }

    Series scaled(const MPFrac& c) const {
        Series r = *this;
        for (auto& ci : r.c_) ci *= c;
        return r;
    }

    Series plus_constant(const MPFrac& c) const {
        Series r = *this;
        r.c_[0] += c;
        return r;
    }

    /// Multiplication by x^j at unchanged order (top j coefficients drop);
    /// negative j divides, requiring the low coefficients to vanish.
    Series shift_x(int j) const {
        Series r(arity_, order());
        if (j >= 0) {
            for (int i = j; i <= order(); ++i) r.c_[i] = c_[i - j];
        } else {
            for (int i = 0; i < -j; ++i)
                if (!c_[i].is_zero())
                    throw Error("Series: shift_x underflow (low coefficient nonzero)");
            for (int i = 0; i <= order() + j; ++i) r.c_[i] = c_[i - j];
            // top -j coefficients are unknown, so the order honestly shrinks
            r.c_.resize(static_cast<std::size_t>(order() + j) + 1);
        }
        return r;
    }

    /// Multiplicative inverse to the same order; requires coeff(0) != 0.
    Series inverse() const {
        if (c_[0].is_zero()) throw Error("Series: inverse needs nonzero constant term");
        Series r(arity_, order());
        MPFrac inv0 = c_[0].inv();
        r.c_[0] = inv0;
        for (int n = 1; n <= order(); ++n) {
            MPFrac acc = MPFrac::constant(arity_, Rat(0));
            for (int i = 1; i <= n; ++i) {
                if (c_[i].is_zero()) continue;
                acc += c_[i] * r.c_[n - i];
            }
            r.c_[n] = -acc * inv0;
        }
        return r;
    }

    friend bool operator==(const Series& s, const Series& t) {
        if (s.arity_ != t.arity_ || s.order() != t.order()) return false;
        for (int i = 0; i <= s.order(); ++i)
            if (s.c_[i] != t.c_[i]) return false;
        return true;
    }

    std::string to_string(std::span<const std::string> names) const {
        std::string s = "[";
        for (int i = 0; i <= order(); ++i) {
            if (i) s += ", ";
            s += c_[i].to_string(names);
        }
        return s + "]";
    }

private:
    static void check(const Series& s, const Series& t) {
        if (s.arity_ != t.arity_) throw Error("Series: arity mismatch");
    }

    static Series merge(const Series& s, const Series& t, bool sub) {
        check(s, t);
        int n = std::min(s.order(), t.order());
        Series r(s.arity_, n);
        for (int i = 0; i <= n; ++i) r.c_[i] = sub ? s.c_[i] - t.c_[i] : s.c_[i] + t.c_[i];
        return r;
    }

    int arity_ = 0;
    std::vector<MPFrac> c_;
};

/// Maclaurin expansion of a rational function to order N, exact. Requires
/// den(0) != 0.
inline Series series_expand(const RatFun& f, int N) {
    if (N < 0) throw Error("series_expand: negative order");
    if (!f.expandable()) throw Error("series_expand: not expandable at x=0");
    int ar = f.arity();
    Series r(ar, N);
    const XPoly &num = f.num(), &den = f.den();
    MPFrac inv0 = den.at_zero().inv();
    for (int n = 0; n <= N; ++n) {
        MPFrac acc = num.coeff(n);
        for (int j = 1; j <= std::min(n, den.degree()); ++j) {
            if (den.coeff(j).is_zero()) continue;
            acc -= den.coeff(j) * r.coeff(n - j);
        }
        r.coeff_mut(n) = acc * inv0;
    }
    return r;
}

/// True iff the coefficients 0..N agree exactly; errors when either operand
/// is truncated below N.
inline bool series_equal_upto(const Series& s, const Series& t, int N) {
    if (s.order() < N || t.order() < N)
        throw Error("series_equal_upto: operand order below requested N");
    for (int i = 0; i <= N; ++i)
        if (s.coeff(i) != t.coeff(i)) return false;
    return true;
}

}  // namespace hcf
