#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "hcf/ratfun.hpp"
#include "hcf/series.hpp"

// Shared shorthand for building small exact-arithmetic values in tests.
namespace th {

inline constexpr int kAr = 3;  // session parameters a, b, t

inline hcf::MPoly mc(long v) { return hcf::MPoly::constant(kAr, hcf::Rat(v)); }
inline hcf::MPoly ma() { return hcf::MPoly::var(kAr, 0); }
inline hcf::MPoly mb() { return hcf::MPoly::var(kAr, 1); }
inline hcf::MPoly mt() { return hcf::MPoly::var(kAr, 2); }

inline hcf::MPFrac fc(long v) { return hcf::MPFrac::constant(kAr, hcf::Rat(v)); }
inline hcf::MPFrac fq(long n, long d) { return hcf::MPFrac::constant(kAr, hcf::Rat(n, d)); }
inline hcf::MPFrac fa() { return hcf::MPFrac::var(kAr, 0); }
inline hcf::MPFrac fb() { return hcf::MPFrac::var(kAr, 1); }
inline hcf::MPFrac ft() { return hcf::MPFrac::var(kAr, 2); }
inline hcf::MPFrac fp(const hcf::MPoly& p) { return hcf::MPFrac::from_poly(p); }

inline hcf::XPoly xp(std::vector<hcf::MPFrac> cs) { return hcf::XPoly(kAr, std::move(cs)); }
inline hcf::XPoly xpi(std::initializer_list<long> cs) {
    std::vector<hcf::MPFrac> v;
    for (long c : cs) v.push_back(fc(c));
    return hcf::XPoly(kAr, std::move(v));
}
inline hcf::RatFun rf(hcf::XPoly num, hcf::XPoly den) {
    return hcf::RatFun(std::move(num), std::move(den));
}
inline hcf::RatFun rfp(hcf::XPoly num) { return hcf::RatFun::from_poly(std::move(num)); }

struct Rng {
    std::mt19937_64 g;
    explicit Rng(unsigned seed) : g(seed) {}

    long i(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(g);
    }

    hcf::Rat rat() {
        long n = i(-9, 9);
        long d = i(1, 9);
        return {n, d};
    }

    hcf::Rat rat_nonzero() {
        for (;;) {
            auto r = rat();
            if (!r.is_zero()) return r;
        }
    }

    hcf::MPoly mpoly(int max_terms = 4, int max_exp = 3) {
        std::vector<hcf::MPoly::Term> ts;
        long nt = i(0, max_terms);
        for (long k = 0; k < nt; ++k) {
            std::vector<int> e = {static_cast<int>(i(0, max_exp)),
                                  static_cast<int>(i(0, max_exp)),
                                  static_cast<int>(i(0, max_exp))};
            ts.emplace_back(hcf::MPoly::pack(e, kAr), rat());
        }
        return hcf::MPoly::from_terms(kAr, std::move(ts));
    }

    hcf::MPoly mpoly_nonzero(int max_terms = 4, int max_exp = 3) {
        for (;;) {
            auto p = mpoly(max_terms, max_exp);
            if (!p.is_zero()) return p;
        }
    }

    hcf::MPFrac mpfrac() { return {mpoly(), mpoly_nonzero(3, 2)}; }

    hcf::XPoly xpoly(int max_deg = 3) {
        std::vector<hcf::MPFrac> cs;
        long d = i(0, max_deg);
        for (long k = 0; k <= d; ++k)
            cs.push_back(hcf::MPFrac::constant(kAr, rat()));
        return {kAr, std::move(cs)};
    }

    /// Rational function with den(0) != 0 (expandable at the origin).
    hcf::RatFun ratfun_expandable(int max_deg = 3) {
        hcf::XPoly num = xpoly(max_deg);
        for (;;) {
            hcf::XPoly den = xpoly(max_deg);
            if (!den.is_zero() && !den.at_zero().is_zero()) return {num, den};
        }
    }

    /// Series with rational coefficients.
    hcf::Series series(int order) {
        hcf::Series s(kAr, order);
        for (int k = 0; k <= order; ++k) s.coeff_mut(k) = hcf::MPFrac::constant(kAr, rat());
        return s;
    }
};

}  // namespace th
