#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hcf/mgcd.hpp"
#include "hcf/mpoly.hpp"

namespace hcf {

namespace detail {

/// Monic univariate gcd over Rat (Euclid). Inputs are dense coefficient
/// vectors, constant or longer; returns monic gcd, or {1} for coprime.
inline std::vector<Rat> uni_gcd(std::vector<Rat> a, std::vector<Rat> b) {
    auto trim = [](std::vector<Rat>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    auto make_monic = [&](std::vector<Rat>& v) {
        if (v.empty()) return;
        Rat lc = v.back();
        for (auto& c : v) c /= lc;
    };
    trim(a), trim(b);
    while (!b.empty()) {
        make_monic(b);
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            Rat f = a.back();
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
            trim(a);
        }
        std::swap(a, b);
    }
    trim(a);
    if (a.empty()) return {};
    make_monic(a);
    return a;
}

inline std::vector<Rat> uni_exact_div(const std::vector<Rat>& a, const std::vector<Rat>& g) {
    // a / g, exact by construction (g divides a).
    std::vector<Rat> r = a, q(a.size() >= g.size() ? a.size() - g.size() + 1 : 0, Rat(0));
    while (r.size() >= g.size() && !r.empty()) {
        Rat f = r.back() / g.back();
        std::size_t off = r.size() - g.size();
        q[off] = f;
        for (std::size_t i = 0; i < g.size(); ++i) r[off + i] -= f * g[i];
        while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    if (!r.empty()) throw Error("uni_exact_div: not divisible");
    return q;
}

}  // namespace detail

/// Element of the fraction field of MPoly, kept in reduced form: rational
/// and monomial content are removed, exact polynomial division is attempted
/// in both directions, univariate gcds handle the single-variable case, and
/// the small-arity PRS gcd cancels everything else. Equality is still
/// decided by cross-multiplication.
class MPFrac {
public:
    MPFrac() = default;
    explicit MPFrac(int arity)
        : num_(MPoly::zero(arity)), den_(MPoly::constant(arity, Rat(1))) {}
    MPFrac(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error("MPFrac: zero denominator");
        if (num_.arity() != den_.arity()) throw Error("MPFrac: arity mismatch");
        reduce();
    }

    static MPFrac from_poly(MPoly p) {
        int ar = p.arity();
        return MPFrac(std::move(p), MPoly::constant(ar, Rat(1)));
    }
    static MPFrac constant(int arity, Rat c) {
        return from_poly(MPoly::constant(arity, std::move(c)));
    }
    static MPFrac var(int arity, int idx) { return from_poly(MPoly::var(arity, idx)); }

    int arity() const { return num_.arity(); }
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    Rat constant_value() const {
        if (!is_constant()) throw Error("MPFrac: not constant");
        return num_.constant_value() / den_.constant_value();
    }

    bool is_one() const { return num_ == den_; }

    friend bool operator==(const MPFrac& x, const MPFrac& y) {
        return x.num_ * y.den_ == y.num_ * x.den_;
    }
    friend bool operator!=(const MPFrac& x, const MPFrac& y) { return !(x == y); }

    MPFrac operator-() const {
        MPFrac r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend MPFrac operator+(const MPFrac& x, const MPFrac& y) { return combine(x, y, false); }
    friend MPFrac operator-(const MPFrac& x, const MPFrac& y) { return combine(x, y, true); }

    friend MPFrac operator*(const MPFrac& x, const MPFrac& y) {
        if (x.is_zero() || y.is_zero()) return MPFrac(x.arity());
        // Cross-cancel before multiplying; inputs are reduced, so the result
        // needs only content normalization.
        MPoly xn = x.num_, yd = y.den_, yn = y.num_, xd = x.den_;
        if (!yd.is_one() && !xn.is_constant()) {
            MPoly g = mpoly_gcd(xn, yd);
            if (!g.is_constant()) {
                xn = *MPoly::exact_div(xn, g);
                yd = *MPoly::exact_div(yd, g);
            }
        }
        if (!xd.is_one() && !yn.is_constant()) {
            MPoly g = mpoly_gcd(yn, xd);
            if (!g.is_constant()) {
                yn = *MPoly::exact_div(yn, g);
                xd = *MPoly::exact_div(xd, g);
            }
        }
        return raw(xn * yn, xd * yd);
    }
    friend MPFrac operator/(const MPFrac& x, const MPFrac& y) {
        if (y.is_zero()) throw Error("MPFrac: division by zero");
        return x * y.inv();
    }

    MPFrac& operator+=(const MPFrac& o) { *this = *this + o; return *this; }
    MPFrac& operator-=(const MPFrac& o) { *this = *this - o; return *this; }
    MPFrac& operator*=(const MPFrac& o) { *this = *this * o; return *this; }
    MPFrac& operator/=(const MPFrac& o) { *this = *this / o; return *this; }

    MPFrac inv() const {
        if (is_zero()) throw Error("MPFrac: inverse of zero");
        return MPFrac(den_, num_);
    }

    MPFrac pow(long e) const {
        if (e == 0) return constant(arity(), Rat(1));
        MPFrac base = e < 0 ? inv() : *this;
        unsigned n = e < 0 ? static_cast<unsigned>(-(e + 1)) + 1 : static_cast<unsigned>(e);
        // num and den are coprime, so powers need no re-reduction.
        return raw(base.num_.pow(n), base.den_.pow(n));
    }

    Rat eval(std::span<const Rat> point) const {
        Rat d = den_.eval(point);
        if (d.is_zero()) throw Error("MPFrac: denominator vanishes at evaluation point");
        return num_.eval(point) / d;
    }

    std::string to_string(std::span<const std::string> names) const {
        if (is_polynomial()) return num_.to_string(names);
        return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
    }

private:
    /// Constructs from parts already known to be coprime: only the canonical
    /// denominator scaling is applied.
    static MPFrac raw(MPoly num, MPoly den) {
        MPFrac f;
        f.num_ = std::move(num);
        f.den_ = std::move(den);
        if (f.num_.is_zero()) {
            f.den_ = MPoly::constant(f.num_.arity(), Rat(1));
            return f;
        }
        Rat c = f.den_.content();
        if (f.den_.lead_coeff().sign() < 0) c = -c;
        if (!c.is_one()) {
            Rat ic = c.inv();
            f.num_ = f.num_.scaled(ic);
            f.den_ = f.den_.scaled(ic);
        }
        return f;
    }

    /// Addition/subtraction through the true lcm of the denominators.
    static MPFrac combine(const MPFrac& x, const MPFrac& y, bool sub) {
        if (x.den_ == y.den_)
            return MPFrac(sub ? x.num_ - y.num_ : x.num_ + y.num_, x.den_);
        if (x.den_.is_one() || y.den_.is_one() || x.is_zero() || y.is_zero())
            return MPFrac(sub ? x.num_ * y.den_ - y.num_ * x.den_
                              : x.num_ * y.den_ + y.num_ * x.den_,
                          x.den_ * y.den_);
        MPoly g = mpoly_gcd(x.den_, y.den_);
        if (g.is_constant())
            return MPFrac(sub ? x.num_ * y.den_ - y.num_ * x.den_
                              : x.num_ * y.den_ + y.num_ * x.den_,
                          x.den_ * y.den_);
        MPoly yred = *MPoly::exact_div(y.den_, g);
        MPoly xred = *MPoly::exact_div(x.den_, g);
        MPoly num = sub ? x.num_ * yred - y.num_ * xred : x.num_ * yred + y.num_ * xred;
        return MPFrac(std::move(num), x.den_ * yred);
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = MPoly::constant(num_.arity(), Rat(1));
            return;
        }
        // Common monomial factor.
        auto en = num_.min_exps(), ed = den_.min_exps();
        bool any = false;
        std::vector<int> g(en.size());
        for (std::size_t i = 0; i < en.size(); ++i) {
            g[i] = std::min(en[i], ed[i]);
            any |= g[i] > 0;
        }
        if (any) {
            num_ = num_.shift_down(g);
            den_ = den_.shift_down(g);
        }
        if (!den_.is_constant()) {
            if (auto q = MPoly::exact_div(num_, den_)) {
                num_ = std::move(*q);
                den_ = MPoly::constant(num_.arity(), Rat(1));
            } else if (!num_.is_constant()) {
                if (auto r = MPoly::exact_div(den_, num_)) {
                    den_ = std::move(*r);
                    num_ = MPoly::constant(num_.arity(), Rat(1));
                } else if (!reduce_univariate()) {
                    MPoly g = mpoly_gcd(num_, den_);
                    if (!g.is_constant()) {
                        num_ = *MPoly::exact_div(num_, g);
                        den_ = *MPoly::exact_div(den_, g);
                    }
                }
            }
        }
        // Scale so den has content 1 and positive leading coefficient.
        Rat c = den_.content();
        if (den_.lead_coeff().sign() < 0) c = -c;
        if (!c.is_one()) {
            Rat ic = c.inv();
            num_ = num_.scaled(ic);
            den_ = den_.scaled(ic);
        }
    }

    /// Fast path: both parts univariate in one shared variable. Returns
    /// whether it applied (the general gcd is skipped then).
    bool reduce_univariate() {
        unsigned mn = num_.vars_mask(), md = den_.vars_mask();
        unsigned m = mn | md;
        if (m == 0 || (m & (m - 1)) != 0) return false;  // not a single variable
        int idx = 0;
        while (!(m & (1u << idx))) ++idx;
        auto cn = num_.to_univariate(idx), cd = den_.to_univariate(idx);
        auto g = detail::uni_gcd(cn, cd);
        if (g.size() <= 1) return true;
        num_ = MPoly::from_univariate(num_.arity(), idx, detail::uni_exact_div(cn, g));
        den_ = MPoly::from_univariate(num_.arity(), idx, detail::uni_exact_div(cd, g));
        return true;
    }

    MPoly num_, den_;
};

}  // namespace hcf
