#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hcf/mpfrac.hpp"

namespace hcf {

/// Dense univariate polynomial in x whose coefficients live in the fraction
/// field of the parameter polynomials. Trailing zero coefficients are never
/// stored; the zero polynomial has an empty coefficient list.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(int arity) : arity_(arity) {}
    XPoly(int arity, std::vector<MPFrac> coeffs) : arity_(arity), c_(std::move(coeffs)) {
        trim();
    }

    static XPoly constant(int arity, MPFrac c) {
        XPoly p(arity);
        if (!c.is_zero()) p.c_.push_back(std::move(c));
        return p;
    }
    static XPoly one(int arity) { return constant(arity, MPFrac::constant(arity, Rat(1))); }
    static XPoly x(int arity) {
        XPoly p(arity);
        p.c_ = {MPFrac::constant(arity, Rat(0)), MPFrac::constant(arity, Rat(1))};
        return p;
    }
    /// x^j with coefficient c.
    static XPoly monomial(int arity, int j, MPFrac c) {
        XPoly p(arity);
        if (c.is_zero()) return p;
        p.c_.assign(j, MPFrac::constant(arity, Rat(0)));
        p.c_.push_back(std::move(c));
        return p;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<MPFrac>& coeffs() const { return c_; }

    MPFrac coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return MPFrac::constant(arity_, Rat(0));
        return c_[i];
    }
    MPFrac at_zero() const { return coeff(0); }

    /// x-adic valuation; -1 for the zero polynomial.
    int valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const XPoly& p, const XPoly& q) {
        if (p.arity_ != q.arity_ || p.c_.size() != q.c_.size()) return false;
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            if (p.c_[i] != q.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const XPoly& p, const XPoly& q) { return !(p == q); }

    XPoly operator-() const {
        XPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend XPoly operator+(const XPoly& p, const XPoly& q) { return merge(p, q, false); }
    friend XPoly operator-(const XPoly& p, const XPoly& q) { return merge(p, q, true); }

    friend XPoly operator*(const XPoly& p, const XPoly& q) {
        check(p, q);
        if (p.is_zero() || q.is_zero()) return XPoly(p.arity_);
        std::vector<MPFrac> r(p.c_.size() + q.c_.size() - 1, MPFrac::constant(p.arity_, Rat(0)));
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            if (p.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < q.c_.size(); ++j) {
                if (q.c_[j].is_zero()) continue;
                r[i + j] += p.c_[i] * q.c_[j];
            }
        }
        return XPoly(p.arity_, std::move(r));
    }

    XPoly& operator+=(const XPoly& o) { *this = *this + o; return *this; }
    XPoly& operator-=(const XPoly& o) { *this = *this - o; return *this; }
    XPoly& operator*=(const XPoly& o) { *this = *this * o; return *this; }

    XPoly scaled(const MPFrac& c) const {
        if (c.is_zero()) return XPoly(arity_);
        XPoly r = *this;
        for (auto& ci : r.c_) ci *= c;
        return r;
    }

    /// Multiplies by x^j (j >= 0), or divides exactly by x^{-j} (j < 0).
    XPoly shift_x(int j) const {
        if (is_zero()) return *this;
        if (j >= 0) {
            XPoly r(arity_);
            r.c_.assign(static_cast<std::size_t>(j), MPFrac::constant(arity_, Rat(0)));
            r.c_.insert(r.c_.end(), c_.begin(), c_.end());
            return r;
        }
        int v = valuation();
        if (v < -j) throw Error("XPoly: shift_x underflow (x does not divide)");
        XPoly r(arity_);
        r.c_.assign(c_.begin() + static_cast<std::size_t>(-j), c_.end());
        return r;
    }

    /// Polynomial division over the coefficient field: returns {quot, rem}.
    static std::pair<XPoly, XPoly> div_rem(const XPoly& p, const XPoly& d) {
        check(p, d);
        if (d.is_zero()) throw Error("XPoly: division by zero polynomial");
        XPoly r = p, q(p.arity_);
        if (p.degree() >= d.degree())
            q.c_.assign(static_cast<std::size_t>(p.degree() - d.degree()) + 1,
                        MPFrac::constant(p.arity_, Rat(0)));
        const MPFrac& lead = d.c_.back();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            MPFrac f = r.c_.back() / lead;
            int off = r.degree() - d.degree();
            q.c_[off] = f;
            for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[off + i] -= d.c_[i] * f;
            r.trim();
        }
        q.trim();
        return {std::move(q), std::move(r)};
    }

    /// Monic gcd over the coefficient fraction field.
    static XPoly gcd(XPoly p, XPoly q) {
        while (!q.is_zero()) {
            q = q.scaled(q.c_.back().inv());  // monic; bounds coefficient growth
            auto [quot, rem] = div_rem(p, q);
            p = std::move(q);
            q = std::move(rem);
        }
        if (!p.is_zero()) p = p.scaled(p.c_.back().inv());
        return p;
    }

    MPFrac eval(const MPFrac& v) const {
        MPFrac acc = MPFrac::constant(arity_, Rat(0));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    std::string to_string(std::span<const std::string> names) const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            std::string cs = c_[i].to_string(names);
            if (i == 0) { s += cs; continue; }
            std::string xs = i == 1 ? "x" : "x^" + std::to_string(i);
            s += (cs == "1") ? xs : "(" + cs + ")*" + xs;
        }
        return s;
    }

private:
    static void check(const XPoly& p, const XPoly& q) {
        if (p.arity_ != q.arity_) throw Error("XPoly: arity mismatch");
    }

    static XPoly merge(const XPoly& p, const XPoly& q, bool sub) {
        check(p, q);
        XPoly r(p.arity_);
        r.c_.resize(std::max(p.c_.size(), q.c_.size()), MPFrac::constant(p.arity_, Rat(0)));
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            MPFrac a = i < p.c_.size() ? p.c_[i] : MPFrac::constant(p.arity_, Rat(0));
            MPFrac b = i < q.c_.size() ? q.c_[i] : MPFrac::constant(p.arity_, Rat(0));
            r.c_[i] = sub ? a - b : a + b;
        }
        r.trim();
        return r;
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    int arity_ = 0;
    std::vector<MPFrac> c_;
};

/// Ratio of two polynomials in x. Canonical form: the polynomial gcd over the
/// coefficient fraction field is removed, then both parts are scaled so the
/// denominator's lowest nonzero coefficient is exactly 1. Two RatFuns are
/// equal iff num1*den2 == num2*den1; the canonical form makes the
/// representation itself deterministic, which period detection relies on.
class RatFun {
public:
    RatFun() = default;
    explicit RatFun(int arity) : num_(arity), den_(XPoly::one(arity)) {}
    RatFun(XPoly num, XPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error("RatFun: zero denominator");
        if (num_.arity() != den_.arity()) throw Error("RatFun: arity mismatch");
        normalize();
    }

    static RatFun from_poly(XPoly p) {
        int ar = p.arity();
        return RatFun(std::move(p), XPoly::one(ar));
    }
    static RatFun constant(int arity, MPFrac c) {
        return from_poly(XPoly::constant(arity, std::move(c)));
    }
    static RatFun one(int arity) { return from_poly(XPoly::one(arity)); }
    static RatFun zero(int arity) { return RatFun(arity); }

    int arity() const { return num_.arity(); }
    const XPoly& num() const { return num_; }
    const XPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Valuation at x = 0 (num valuation minus den valuation).
    int valuation() const {
        if (is_zero()) throw Error("RatFun: valuation of zero");
        return num_.valuation() - den_.valuation();
    }

    /// True when the function admits a power series expansion at x = 0.
    bool expandable() const { return !den_.at_zero().is_zero(); }

    /// Value at x = 0; requires expandable().
    MPFrac at_zero() const {
        if (!expandable()) throw Error("RatFun: not expandable at x=0");
        return num_.at_zero() / den_.at_zero();
    }

    friend bool operator==(const RatFun& f, const RatFun& g) {
        return f.num_ * g.den_ == g.num_ * f.den_;
    }
    friend bool operator!=(const RatFun& f, const RatFun& g) { return !(f == g); }

    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFun operator+(const RatFun& f, const RatFun& g) {
        return RatFun(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
    }
    friend RatFun operator-(const RatFun& f, const RatFun& g) {
        return RatFun(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
    }
    friend RatFun operator*(const RatFun& f, const RatFun& g) {
        return RatFun(f.num_ * g.num_, f.den_ * g.den_);
    }
    friend RatFun operator/(const RatFun& f, const RatFun& g) {
        if (g.is_zero()) throw Error("RatFun: division by zero");
        return RatFun(f.num_ * g.den_, f.den_ * g.num_);
    }

    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }
    RatFun& operator/=(const RatFun& o) { *this = *this / o; return *this; }

    RatFun inv() const {
        if (is_zero()) throw Error("RatFun: inverse of zero");
        return RatFun(den_, num_);
    }

    RatFun scaled(const MPFrac& c) const { return RatFun(num_.scaled(c), den_); }

    /// Multiplies by x^j (j may be negative).
    RatFun shift_x(int j) const {
        if (is_zero()) return *this;
        if (j >= 0) return RatFun(num_.shift_x(j), den_);
        return RatFun(num_, den_.shift_x(-j));
    }

    std::string to_string(std::span<const std::string> names) const {
        if (is_polynomial() && den_.at_zero().is_one()) return num_.to_string(names);
        return "(" + num_.to_string(names) + ") / (" + den_.to_string(names) + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = XPoly::one(num_.arity());
            return;
        }
        if (den_.degree() > 0 && num_.degree() > 0) {
            XPoly g = XPoly::gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = XPoly::div_rem(num_, g).first;
                den_ = XPoly::div_rem(den_, g).first;
            }
        }
        MPFrac low = den_.coeff(den_.valuation());
        if (!low.is_one()) {
            MPFrac il = low.inv();
            num_ = num_.scaled(il);
            den_ = den_.scaled(il);
        }
    }

    XPoly num_, den_;
};

}  // namespace hcf
