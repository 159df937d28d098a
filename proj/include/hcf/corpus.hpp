#pragma once

#include <utility>

#include "hcf/quadfe.hpp"

namespace hcf {

/// Session parameters for the generating-function families: either the
/// symbolic variables a, b, t or fixed rational values.
struct ParamSet {
    int arity = 3;
    MPFrac a, b, t;

    static ParamSet symbolic(int arity = 3) {
        ParamSet p;
        p.arity = arity;
        p.a = MPFrac::var(arity, 0);
        p.b = MPFrac::var(arity, 1);
        p.t = MPFrac::var(arity, 2);
        return p;
    }

    static ParamSet numeric(Rat a, Rat b, Rat t = Rat(0), int arity = 3) {
        ParamSet p;
        p.arity = arity;
        p.a = MPFrac::constant(arity, std::move(a));
        p.b = MPFrac::constant(arity, std::move(b));
        p.t = MPFrac::constant(arity, std::move(t));
        return p;
    }
};

/// C(x) = 1/(1 - x C(x)).
inline QuadFE catalan_fe(int arity = 3) {
    QuadFE fe;
    fe.d = 0;
    fe.k = 1;
    fe.u = RatFun::one(arity);
    fe.v = RatFun::constant(arity, MPFrac::constant(arity, Rat(-1)));
    fe.check();
    return fe;
}

/// f_m = 1 + a x f_m + b x^m f_m^2.
inline QuadFE fm_fe(const ParamSet& ps, int m) { return fe_fm(ps.arity, m, ps.a, ps.b); }

/// F_m = 1 + (a+t) x F_m + b x^m F_m f_m, made quadratic by eliminating f_m:
///   (b x^m - t x + t(a+t) x^2) F^2 - (1 - (a+2t)x) F + 1 = 0.
/// Requires v(0) != 0, i.e. t != 0 (t != b when m = 1): at t = 0 the family
/// collapses onto f_m, which has its own equation.
inline QuadFE Fm_fe(const ParamSet& ps, int m) {
    if (m < 1) throw Error("Fm_fe: m must be >= 1");
    int ar = ps.arity;
    XPoly p = XPoly::monomial(ar, m, ps.b) - XPoly::monomial(ar, 1, ps.t) +
              XPoly::monomial(ar, 2, ps.t * (ps.a + ps.t));
    XPoly q = XPoly::monomial(ar, 1, ps.a + ps.t + ps.t) - XPoly::one(ar);
    return fe_from_coeffs(RatFun::from_poly(p), RatFun::from_poly(q), RatFun::one(ar));
}

/// (G_m - 1)/x, where G_m = 1 + a x G_m + 2 b x^m G_m f_m. G_m itself
/// satisfies only the pure-square equation G^2 ((1-ax)^2 - 4 b x^m) = 1,
/// which has no linear term and therefore no Eq-(3.1) form; the unit shift
/// produces a representable equation with the same determinant content
/// (its Hankel determinants are the offset-1 determinants of G_m).
inline QuadFE gm_shift_fe(const ParamSet& ps, int m) {
    if (m < 1) throw Error("gm_shift_fe: m must be >= 1");
    int ar = ps.arity;
    XPoly w = XPoly::one(ar) - XPoly::monomial(ar, 1, ps.a);
    XPoly pg = w * w - XPoly::monomial(ar, m, MPFrac::constant(ar, Rat(4)) * ps.b);
    RatFun P = RatFun::from_poly(pg.shift_x(2));
    RatFun Q = RatFun::from_poly(pg.scaled(MPFrac::constant(ar, Rat(2))).shift_x(1));
    RatFun R = RatFun::from_poly(pg - XPoly::one(ar));
    return fe_from_coeffs(P, Q, R);
}

/// f_m(x) - 1 (the Lemma-style seed for the m >= 4 shifted chains).
inline QuadFE fm_minus1_fe(const ParamSet& ps, int m) {
    return fe_shift_subtract(fm_fe(ps, m), XPoly::one(ps.arity), 0);
}

/// (C(x) - 1 - x)/x^2: the seed whose determinants are H_n^{(2)}(C).
inline QuadFE catalan_h2_seed(int arity = 3) {
    return fe_shift_subtract(catalan_fe(arity), XPoly::one(arity) + XPoly::x(arity), 2);
}

/// (f_3 - a x - 1)/x^2: the seed whose determinants are H_n^{(2)}(f_3).
inline QuadFE f3_h2_seed(const ParamSet& ps) {
    XPoly c = XPoly::one(ps.arity) + XPoly::monomial(ps.arity, 1, ps.a);
    return fe_shift_subtract(fm_fe(ps, 3), c, 2);
}

/// F = 1 + (t+1) x F + t x^2 F + x^2 F^2 (unit-weight up/down steps with two
/// weighted level steps of spans 1 and 2). t defaults to the symbolic
/// parameter; a numeric value gives the specialized equation.
inline QuadFE level12_fe(const MPFrac& t) {
    int arity = t.arity();
    MPFrac one = MPFrac::constant(arity, Rat(1));
    XPoly p1 = XPoly::monomial(arity, 1, t + one) + XPoly::monomial(arity, 2, t);
    XPoly p2 = XPoly::monomial(arity, 2, one);
    return fe_from_quadratic(p1, p2);
}
inline QuadFE level12_fe(int arity = 3) { return level12_fe(MPFrac::var(arity, 2)); }

/// F = 1 + t x^2 F + (t+1) x^3 F + x^2 F^2 (level steps of spans 2 and 3).
inline QuadFE level23_fe(const MPFrac& t) {
    int arity = t.arity();
    MPFrac one = MPFrac::constant(arity, Rat(1));
    XPoly p1 = XPoly::monomial(arity, 2, t) + XPoly::monomial(arity, 3, t + one);
    XPoly p2 = XPoly::monomial(arity, 2, one);
    return fe_from_quadratic(p1, p2);
}
inline QuadFE level23_fe(int arity = 3) { return level23_fe(MPFrac::var(arity, 2)); }

/// F = 1 + x^3 F + x^2 F^2 (the period-14 determinant sequence).
inline QuadFE updown3_fe(int arity = 3) {
    MPFrac one = MPFrac::constant(arity, Rat(1));
    XPoly p1 = XPoly::monomial(arity, 3, one);
    XPoly p2 = XPoly::monomial(arity, 2, one);
    return fe_from_quadratic(p1, p2);
}

/// q_m(x,t) = 1/(1 - alpha x - beta x^m f_m): solved linearly once f_m is
/// known. alpha = a, beta = b gives f_m back; alpha = a+t -> F_m;
/// beta = 2b -> G_m.
inline Series qm_series(const ParamSet& ps, int m, const MPFrac& alpha, const MPFrac& beta,
                        int order) {
    Series f = solve_series(fm_fe(ps, m), order);
    Series den(ps.arity, order);
    den.coeff_mut(0) = MPFrac::constant(ps.arity, Rat(1));
    if (order >= 1) den.coeff_mut(1) = -alpha;
    den -= f.scaled(beta).shift_x(m);
    return den.inverse();
}

inline Series fm_series(const ParamSet& ps, int m, int order) {
    return solve_series(fm_fe(ps, m), order);
}
inline Series Fm_series(const ParamSet& ps, int m, int order) {
    return qm_series(ps, m, ps.a + ps.t, ps.b, order);
}
inline Series Gm_series(const ParamSet& ps, int m, int order) {
    return qm_series(ps, m, ps.a, ps.b + ps.b, order);
}
inline Series catalan_series(int order, int arity = 3) {
    return solve_series(catalan_fe(arity), order);
}

}  // namespace hcf
