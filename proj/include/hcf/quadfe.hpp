#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcf/series.hpp"

namespace hcf {

/// Quadratic functional equation in canonical form
///     F(x) = x^d / (u(x) + x^k v(x) F(x)),
/// with u, v rational power series, u(0) != 0, v(0) != 0, d >= 0, k >= 1.
/// Such an equation has a unique power-series solution, with lowest term
/// x^d / u(0).
struct QuadFE {
    int d = 0;
    int k = 1;
    RatFun u, v;

    int arity() const { return u.arity(); }

    void check() const {
        if (d < 0) throw Error("QuadFE: d must be nonnegative");
        if (k < 1) throw Error("QuadFE: k must be positive");
        if (!u.expandable() || u.at_zero().is_zero())
            throw Error("QuadFE: u(0) must exist and be nonzero");
        if (!v.expandable() || v.at_zero().is_zero())
            throw Error("QuadFE: v(0) must exist and be nonzero");
    }

    friend bool operator==(const QuadFE& f, const QuadFE& g) {
        return f.d == g.d && f.k == g.k && f.u == g.u && f.v == g.v;
    }
};

/// One step of the quadratic transformation, recording how the Hankel
/// determinants of source and image relate:
///     H_n(F) = sigma * gamma^n * H_{n-shift}(tau(F))   for all n >= shift.
/// Case i:      shift = 0, sigma = 1, gamma = u(0)^{-1}.
/// Cases ii/iii: shift = d+1, gamma = 1, sigma = (-1)^C(d+1,2).
struct TauRelation {
    enum class Case { i, ii, iii };
    Case kase = Case::i;
    int shift = 0;
    int sigma = 1;
    MPFrac gamma;
};

/// Canonicalizes a general quadratic P F^2 + Q F + R = 0 into Eq-(3.1) shape.
/// Errors when the equation is not quadratic, lacks the linear unit, or
/// falls outside the representable class (d < 0 or k < 1).
inline QuadFE fe_from_coeffs(const RatFun& P, const RatFun& Q, const RatFun& R) {
    if (P.is_zero()) throw Error("fe_from_coeffs: not quadratic (P = 0)");
    if (Q.is_zero()) throw Error("fe_from_coeffs: no linear term (Q = 0), not representable");
    if (R.is_zero()) throw Error("fe_from_coeffs: zero constant term, degenerate equation");
    int vq = Q.valuation();
    int d = R.valuation() - vq;
    int k = P.valuation() - vq;
    if (d < 0) throw Error("fe_from_coeffs: negative d, not representable");
    if (k < 1) throw Error("fe_from_coeffs: k < 1 (v(0) = 0 after valuation extraction)");
    QuadFE fe;
    fe.d = d;
    fe.k = k;
    fe.u = -(Q / R).shift_x(d);
    fe.v = -(P / R).shift_x(d - k);
    fe.check();
    return fe;
}

/// The canonical triple (P, Q, R) with P F^2 + Q F + R = 0 for a QuadFE.
struct QuadTriple {
    RatFun P, Q, R;
};

inline QuadTriple fe_to_coeffs(const QuadFE& fe) {
    int ar = fe.arity();
    RatFun xd = RatFun::from_poly(XPoly::monomial(ar, fe.d, MPFrac::constant(ar, Rat(1))));
    return {fe.v.shift_x(fe.k), fe.u, -xd};
}

/// Functional equation of A = (F - c(x)) / x^j, where F solves the given
/// equation and c is the degree-(j-1) prefix of its series (so A is again a
/// power series). This is the seed "massage" used before starting chains.
inline QuadFE fe_shift_subtract(const QuadFE& fe, const XPoly& c, int j) {
    if (j < 0) throw Error("fe_shift_subtract: negative shift");
    QuadTriple t = fe_to_coeffs(fe);
    RatFun cf = RatFun::from_poly(c);
    RatFun P2 = t.P.shift_x(2 * j);
    RatFun Q2 = (t.P.scaled(MPFrac::constant(fe.arity(), Rat(2))) * cf + t.Q).shift_x(j);
    RatFun R2 = t.P * cf * cf + t.Q * cf + t.R;
    return fe_from_coeffs(P2, Q2, R2);
}

/// Named construction forms.
///  - quadratic:   F = 1 + P1(x) F + P2(x) F^2       (P1(0) = 0 expected)
///  - mql family:  F = x^m / (1 - a x^q - b x^l F)
inline QuadFE fe_from_quadratic(const XPoly& p1, const XPoly& p2) {
    int ar = p1.arity();
    if (p2.is_zero()) throw Error("fe_from_quadratic: P2 = 0, not quadratic");
    RatFun P = RatFun::from_poly(p2);
    RatFun Q = RatFun::from_poly(p1 - XPoly::one(ar));
    RatFun R = RatFun::one(ar);
    return fe_from_coeffs(P, Q, R);
}

/// f_m(x,a,b) = 1 + a x f_m + b x^m f_m^2 rewritten fractionally:
/// u = 1 - a x, k = m, v = -b.
inline QuadFE fe_fm(int arity, int m, const MPFrac& a, const MPFrac& b) {
    if (m < 1) throw Error("fe_fm: m must be >= 1");
    XPoly p1 = XPoly::monomial(arity, 1, a);
    XPoly p2 = XPoly::monomial(arity, m, b);
    return fe_from_quadratic(p1, p2);
}

/// F = x^m/(1 - a x^q - b x^l F): d = m, k = l, u = 1 - a x^q, v = -b.
inline QuadFE fe_mql(int arity, int m, int q, int l, const MPFrac& a, const MPFrac& b) {
    if (l < 1) throw Error("fe_mql: l must be >= 1");
    if (q < 1) throw Error("fe_mql: q must be >= 1");
    QuadFE fe;
    fe.d = m;
    fe.k = l;
    fe.u = RatFun::from_poly(XPoly::one(arity) - XPoly::monomial(arity, q, a));
    fe.v = RatFun::constant(arity, -b);
    fe.check();
    return fe;
}

/// Unique power-series solution truncated to order N. The x-adic fixed
/// point of F <- x^d / (u + x^k v F) is solved coefficient by coefficient:
/// rewriting the equation as u F + x^k v F^2 = x^d, the x^n coefficient
/// determines F_n from strictly earlier coefficients (k >= 1 pushes the
/// quadratic part back), which is the fixed-point computation with each
/// coefficient settled exactly once.
inline Series solve_series(const QuadFE& fe, int N) {
    fe.check();
    if (N < 0) throw Error("solve_series: negative order");
    int ar = fe.arity();
    Series us = series_expand(fe.u, N);
    Series vs = series_expand(fe.v, N);
    MPFrac inv_u0 = us.coeff(0).inv();
    Series F(ar, N);
    std::vector<MPFrac> sq;  // coefficients of F^2, filled as F grows
    sq.reserve(N + 1);
    MPFrac zero = MPFrac::constant(ar, Rat(0));
    for (int n = 0; n <= N; ++n) {
        if (n - fe.k >= 0) {
            // extend sq through index n - k (uses F_0 .. F_{n-1} only)
            while (static_cast<int>(sq.size()) <= n - fe.k) {
                int m = static_cast<int>(sq.size());
                MPFrac acc = zero;
                for (int j = 0; j <= m; ++j) {
                    if (F.coeff(j).is_zero() || F.coeff(m - j).is_zero()) continue;
                    acc += F.coeff(j) * F.coeff(m - j);
                }
                sq.push_back(std::move(acc));
            }
        }
        MPFrac rhs = n == fe.d ? MPFrac::constant(ar, Rat(1)) : zero;
        for (int j = 1; j <= n; ++j) {
            if (us.coeff(j).is_zero() || F.coeff(n - j).is_zero()) continue;
            rhs -= us.coeff(j) * F.coeff(n - j);
        }
        for (int i = 0; i + fe.k <= n; ++i) {
            if (vs.coeff(i).is_zero() || sq[n - fe.k - i].is_zero()) continue;
            rhs -= vs.coeff(i) * sq[n - fe.k - i];
        }
        F.coeff_mut(n) = rhs * inv_u0;
    }
    return F;
}

/// Unique decomposition u = u_L + x^{d+2} u_H with deg u_L <= d+1.
struct UDecomposition {
    XPoly u_low;   // polynomial of degree <= d+1
    RatFun u_high;
};

inline UDecomposition decompose_u(const RatFun& u, int d) {
    if (!u.expandable()) throw Error("decompose_u: u not expandable at 0");
    Series s = series_expand(u, d + 1);
    std::vector<MPFrac> head(s.coeffs().begin(), s.coeffs().end());
    XPoly ul(u.arity(), std::move(head));
    RatFun uh = (u - RatFun::from_poly(ul)).shift_x(-(d + 2));
    return {std::move(ul), std::move(uh)};
}

/// The quadratic transformation. One call performs exactly one case:
///   i  (u(0) != 1):        rescale, H_n(F) = u(0)^{-n} H_n(tau F);
///   ii (u(0) = 1, k = 1):  shift step through G and (G - G(0))/x;
///   iii(u(0) = 1, k >= 2): shift step through G;
/// with the image always canonicalized back into Eq-(3.1) shape.
inline std::pair<QuadFE, TauRelation> tau(const QuadFE& fe) {
    fe.check();
    int ar = fe.arity();
    MPFrac one = MPFrac::constant(ar, Rat(1));
    MPFrac u0 = fe.u.at_zero();

    if (!u0.is_one()) {
        QuadFE out;
        out.d = fe.d;
        out.k = fe.k;
        out.u = fe.u.scaled(u0.inv());
        out.v = fe.v.scaled(u0.pow(-2));
        out.check();
        TauRelation rel;
        rel.kase = TauRelation::Case::i;
        rel.shift = 0;
        rel.sigma = 1;
        rel.gamma = u0.inv();
        return {std::move(out), std::move(rel)};
    }

    auto [ul, uh] = decompose_u(fe.u, fe.d);
    RatFun ulf = RatFun::from_poly(ul);
    RatFun D = ulf - uh.shift_x(fe.d + 2);  // = 2 u_L - u
    RatFun N(ar);
    if (fe.k == 1) {
        // G = (-v - x u_L u_H) / (u_L - x^{d+2} u_H - x^{d+1} G);
        // the image is W = (G - G(0))/x, i.e. substitute G = g0 + x W.
        N = -fe.v - (ulf * uh).shift_x(1);
        MPFrac g0 = N.at_zero();  // D(0) = u(0) = 1
        RatFun g0f = RatFun::constant(ar, g0);
        RatFun M = (N - D * g0f +
                    RatFun::from_poly(XPoly::monomial(ar, fe.d + 1, g0 * g0)))
                       .shift_x(-1);
        if (M.is_zero())
            throw Error("tau: degenerate image (zero numerator), leaves representable class");
        RatFun Dhat = D - RatFun::from_poly(
                              XPoly::monomial(ar, fe.d + 1, MPFrac::constant(ar, Rat(2)) * g0));
        int dnew = M.valuation();
        if (dnew < 0) throw Error("tau: image valuation negative (violated invariant)");
        RatFun Mu = M.shift_x(-dnew);
        QuadFE out;
        out.d = dnew;
        out.k = fe.d + 2;
        out.u = Dhat / Mu;
        out.v = -Mu.inv();
        out.check();
        TauRelation rel;
        rel.kase = TauRelation::Case::ii;
        rel.shift = fe.d + 1;
        rel.sigma = neg_one_pow(binom(fe.d + 1, 2).to_long());
        rel.gamma = one;
        return {std::move(out), std::move(rel)};
    }

    // Case iii: G = (-x^{k-2} v - u_L u_H) / (u_L - x^{d+2} u_H - x^{d+2} G).
    N = -fe.v.shift_x(fe.k - 2) - ulf * uh;
    if (N.is_zero())
        throw Error("tau: degenerate image (zero numerator), leaves representable class");
    int dnew = N.valuation();
    if (dnew < 0) throw Error("tau: image valuation negative (violated invariant)");
    RatFun Nu = N.shift_x(-dnew);
    QuadFE out;
    out.d = dnew;
    out.k = fe.d + 2;
    out.u = D / Nu;
    out.v = -Nu.inv();
    out.check();
    TauRelation rel;
    rel.kase = TauRelation::Case::iii;
    rel.shift = fe.d + 1;
    rel.sigma = neg_one_pow(binom(fe.d + 1, 2).to_long());
    rel.gamma = one;
    return {std::move(out), std::move(rel)};
}

/// A macro step is the paper-style display step: an eager case-i rescale
/// (when u(0) != 1) fused with the following shift step. The composite
/// relation is H_n(F) = sigma * gamma^n * H_{n-shift}(image).
inline std::pair<QuadFE, TauRelation> tau_macro(const QuadFE& fe) {
    auto [mid, rel1] = tau(fe);
    if (rel1.kase != TauRelation::Case::i) return {std::move(mid), std::move(rel1)};
    auto [out, rel2] = tau(mid);
    if (rel2.kase == TauRelation::Case::i)
        throw Error("tau_macro: two rescales in a row (violated invariant)");
    TauRelation rel;
    rel.kase = rel2.kase;
    rel.shift = rel2.shift;
    rel.sigma = rel2.sigma;
    rel.gamma = rel1.gamma;
    return {std::move(out), std::move(rel)};
}

/// A run of tau steps: states[0] = origin, relations[i] links states[i] to
/// states[i+1].
struct TauChain {
    std::vector<QuadFE> states;
    std::vector<TauRelation> relations;

    const QuadFE& origin() const { return states.front(); }
};

inline TauChain build_chain(const QuadFE& seed, int steps, bool macro = false) {
    TauChain ch;
    ch.states.push_back(seed);
    for (int i = 0; i < steps; ++i) {
        auto [next, rel] = macro ? tau_macro(ch.states.back()) : tau(ch.states.back());
        ch.states.push_back(std::move(next));
        ch.relations.push_back(std::move(rel));
    }
    return ch;
}

/// Composes every relation of the chain at a concrete index:
///     H_n(states[0]) = factor * H_{n - S}(states.back()),  S = sum of shifts.
/// Requires n >= S.
inline std::pair<MPFrac, int> compose_relations(const TauChain& chain, long n) {
    int ar = chain.origin().arity();
    long total = 0;
    for (const auto& r : chain.relations) total += r.shift;
    if (n < total)
        throw Error("compose_relations: n below total shift " + std::to_string(total));
    MPFrac factor = MPFrac::constant(ar, Rat(1));
    long at = n;
    for (const auto& r : chain.relations) {
        if (r.sigma < 0) factor = -factor;
        if (!r.gamma.is_one()) factor *= r.gamma.pow(at);
        at -= r.shift;
    }
    return {std::move(factor), static_cast<int>(n - total)};
}

}  // namespace hcf
