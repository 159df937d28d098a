#include <catch2/catch_amalgamated.hpp>

#include <tuple>

#include "hcf/corpus.hpp"
#include "hcf/hankel.hpp"
#include "helpers.hpp"

using namespace hcf;
using namespace th;

namespace {

// Back-substitution oracle: F solves the equation iff F * (u + x^k v F) = x^d
// to the working order.
bool satisfies_equation(const QuadFE& fe, const Series& F) {
    int N = F.order();
    Series us = series_expand(fe.u, N);
    Series vs = series_expand(fe.v, N);
    Series lhs = F * (us + (vs * F).shift_x(fe.k));
    Series xd(fe.arity(), N);
    if (fe.d <= N) xd.coeff_mut(fe.d) = fc(1);
    return series_equal_upto(lhs, xd, N);
}

// Exhaustive tau-soundness check of one relation against the determinant
// oracle: H_n(F) == sigma * gamma^n * H_{n-s}(tau F) for s <= n <= n_max.
void check_relation(const QuadFE& from, const QuadFE& to, const TauRelation& rel, int n_max) {
    int order = 2 * n_max;
    Series sf = solve_series(from, order);
    Series st = solve_series(to, order);
    for (int n = rel.shift; n <= n_max; ++n) {
        MPFrac lhs = hankel_det(sf, n, 0);
        MPFrac rhs = hankel_det(st, n - rel.shift, 0);
        rhs *= rel.gamma.pow(n);
        if (rel.sigma < 0) rhs = -rhs;
        INFO("n = " << n << ", shift = " << rel.shift);
        CHECK(lhs == rhs);
    }
}

}  // namespace

TEST_CASE("solve_series: Catalan numbers") {
    Series c = solve_series(catalan_fe(), 6);
    long expect[] = {1, 1, 2, 5, 14, 42, 132};
    for (int i = 0; i <= 6; ++i) CHECK(c.coeff(i) == fc(expect[i]));
}

TEST_CASE("solve_series: f1(1,1) verified by back-substitution") {
    ParamSet ps = ParamSet::numeric(Rat(1), Rat(1));
    QuadFE fe = fm_fe(ps, 1);
    Series f = solve_series(fe, 8);
    CHECK(satisfies_equation(fe, f));
    long expect[] = {1, 2, 6, 22, 90};
    for (int i = 0; i <= 4; ++i) CHECK(f.coeff(i) == fc(expect[i]));
}

TEST_CASE("solve_series: x/(1 - x^2 F) embeds Catalan at every third index") {
    QuadFE fe = fe_mql(kAr, 1, 1, 2, fc(0), fc(1));
    Series f = solve_series(fe, 9);
    CHECK(satisfies_equation(fe, f));
    // F = x + x^2 F^2 gives x * Cat(x^3): [0,1,0,0,1,0,0,2,0,0]
    long expect[] = {0, 1, 0, 0, 1, 0, 0, 2, 0, 0};
    for (int i = 0; i <= 9; ++i) CHECK(f.coeff(i) == fc(expect[i]));
}

TEST_CASE("fe_from_quadratic canonicalizations") {
    ParamSet ps = ParamSet::symbolic();

    QuadFE f2 = fm_fe(ps, 2);
    CHECK(f2.d == 0);
    CHECK(f2.k == 2);
    CHECK(f2.u == rf(xp({fc(1), -fa()}), xpi({1})));
    CHECK(f2.v == RatFun::constant(kAr, -fb()));

    QuadFE mql = fe_mql(kAr, 3, 2, 4, fa(), fb());
    CHECK(mql.d == 3);
    CHECK(mql.k == 4);
    CHECK(mql.u == rf(xp({fc(1), fc(0), -fa()}), xpi({1})));

    QuadFE s5 = level12_fe();
    CHECK(s5.d == 0);
    CHECK(s5.k == 2);
    CHECK(s5.u == rf(xp({fc(1), -(ft() + fc(1)), -ft()}), xpi({1})));
    CHECK(s5.v == RatFun::constant(kAr, fc(-1)));

    CHECK_THROWS_AS(fe_from_quadratic(xpi({0, 1}), XPoly(kAr)), Error);
    // P2 with nonzero constant term: k = 0 is outside the representable class
    CHECK_THROWS_AS(fe_from_quadratic(xpi({0, 1}), xpi({1, 1})), Error);
}

TEST_CASE("decompose_u examples and round trip") {
    auto [ul0, uh0] = decompose_u(RatFun::from_poly(xp({fc(1), -fa()})), 0);
    CHECK(ul0 == xp({fc(1), -fa()}));
    CHECK(uh0.is_zero());

    // u = 1 - a x^q with q = 4 > d+1 = 2: u_L = 1, u_H = -a x^{q-d-2}.
    RatFun u = RatFun::from_poly(XPoly::one(kAr) - XPoly::monomial(kAr, 4, fa()));
    auto [ul1, uh1] = decompose_u(u, 1);
    CHECK(ul1 == XPoly::one(kAr));
    CHECK(uh1 == RatFun::from_poly(XPoly::monomial(kAr, 1, -fa())));

    Rng rng(2024);
    for (int trial = 0; trial < 15; ++trial) {
        RatFun r = rng.ratfun_expandable(4);
        int d = static_cast<int>(rng.i(0, 3));
        auto [ul, uh] = decompose_u(r, d);
        CHECK(ul.degree() <= d + 1);
        CHECK(RatFun::from_poly(ul) + uh.shift_x(d + 2) == r);
    }
}

TEST_CASE("tau: Catalan goes to C1 = 1/(1 - 2x - x^2 C1)") {
    auto [c1, rel] = tau(catalan_fe());
    CHECK(c1.d == 0);
    CHECK(c1.k == 2);
    CHECK(c1.u == rf(xpi({1, -2}), xpi({1})));
    CHECK(c1.v == RatFun::constant(kAr, fc(-1)));
    CHECK(rel.shift == 1);
    CHECK(rel.sigma == 1);
    CHECK(rel.gamma.is_one());
    check_relation(catalan_fe(), c1, rel, 8);

    // C1 is a tau fixed point with H_n(C1) = H_{n-1}(C1).
    auto [c2, rel2] = tau(c1);
    CHECK(c2 == c1);
    CHECK(rel2.shift == 1);
    CHECK(rel2.sigma == 1);
}

TEST_CASE("tau: f1 chain reaches its cycle (the A_3 = A_2 structure)") {
    ParamSet ps = ParamSet::symbolic();
    TauChain ch = build_chain(fm_fe(ps, 1), 4);
    // states: f1 -> W1 -> W2 -> W3 = W1 (period 2 after a 1-step preperiod)
    CHECK(ch.states[3] == ch.states[1]);
    CHECK(ch.states[2] != ch.states[1]);
    for (int i = 0; i < 3; ++i)
        check_relation(ch.states[i], ch.states[i + 1], ch.relations[i], 6);
}

TEST_CASE("tau soundness, symbolic: f_m, F_m, (G_m-1)/x for m <= 3") {
    ParamSet ps = ParamSet::symbolic();
    for (int m = 1; m <= 3; ++m) {
        for (const QuadFE& seed : {fm_fe(ps, m), Fm_fe(ps, m), gm_shift_fe(ps, m)}) {
            TauChain ch = build_chain(seed, 3);
            for (int i = 0; i < 3; ++i)
                check_relation(ch.states[i], ch.states[i + 1], ch.relations[i], 5);
        }
    }
}

TEST_CASE("level12 chain returns to its seed after five steps") {
    QuadFE f0 = level12_fe();
    TauChain ch = build_chain(f0, 5);
    CHECK(ch.states[5] == f0);
    for (int i = 0; i < 5; ++i) CHECK(ch.states[i + 1] != ch.states[i]);
    for (int i = 0; i < 5; ++i)
        check_relation(ch.states[i], ch.states[i + 1], ch.relations[i], 6);

    // Composite over the cycle: H_n(F0) = (1+t)^{2n-3} H_{n-3}(F0).
    for (long n = 3; n <= 9; ++n) {
        auto [factor, idx] = compose_relations(ch, n);
        CHECK(idx == n - 3);
        CHECK(factor == (fc(1) + ft()).pow(2 * n - 3));
    }
    CHECK_THROWS_AS(compose_relations(ch, 2), Error);
}

TEST_CASE("level23 chain returns to its seed after nine raw steps") {
    QuadFE f0 = level23_fe();
    // Four of the five display steps fuse a rescale with the shift, so the
    // raw cycle length is 9; the macro chain closes in 5.
    TauChain ch = build_chain(f0, 9);
    CHECK(ch.states[9] == f0);
    // H_n(F0) = -(1+t)^{4n-14} H_{n-7}(F0)
    for (long n = 7; n <= 10; ++n) {
        auto [factor, idx] = compose_relations(ch, n);
        CHECK(idx == n - 7);
        CHECK(factor == -(fc(1) + ft()).pow(4 * n - 14));
    }

    TauChain mc = build_chain(f0, 5, /*macro=*/true);
    CHECK(mc.states[5] == f0);
    for (long n = 7; n <= 10; ++n) {
        auto [factor, idx] = compose_relations(mc, n);
        CHECK(idx == n - 7);
        CHECK(factor == -(fc(1) + ft()).pow(4 * n - 14));
    }
}

TEST_CASE("compose_relations on a single rescale step") {
    // F = 1/(2 - x F): u(0) = 2, a pure case-i step with factor c^{-n}.
    QuadFE fe;
    fe.d = 0;
    fe.k = 1;
    fe.u = RatFun::constant(kAr, fc(2));
    fe.v = RatFun::constant(kAr, fc(-1));
    fe.check();
    TauChain ch = build_chain(fe, 1);
    CHECK(ch.relations[0].kase == TauRelation::Case::i);
    auto [factor, idx] = compose_relations(ch, 5);
    CHECK(idx == 5);
    CHECK(factor == fq(1, 32));  // 2^{-5}
    check_relation(ch.states[0], ch.states[1], ch.relations[0], 6);
}

TEST_CASE("fe_shift_subtract: the H^(2) Catalan seed") {
    QuadFE a0 = catalan_h2_seed();
    CHECK(a0.d == 0);
    CHECK(a0.k == 3);
    CHECK(a0.u == rf(xpi({1, -2, -2}), xpi({2, 1})));
    CHECK(a0.v == rf(xpi({-1}), xpi({2, 1})));

    // Its series is the Catalan tail: coeff_i(A0) = C_{i+2}.
    Series c = catalan_series(10);
    Series a = solve_series(a0, 8);
    for (int i = 0; i <= 8; ++i) CHECK(a.coeff(i) == c.coeff(i + 2));
}

TEST_CASE("dual routes agree: F_m and (G_m-1)/x equations vs linear solves") {
    ParamSet ps = ParamSet::symbolic();
    for (int m : {1, 2, 3, 4}) {
        Series viaFe = solve_series(Fm_fe(ps, m), 8);
        Series viaLinear = Fm_series(ps, m, 8);
        CHECK(series_equal_upto(viaFe, viaLinear, 8));

        Series g = Gm_series(ps, m, 9);
        Series shifted = solve_series(gm_shift_fe(ps, m), 8);
        for (int i = 0; i <= 8; ++i) CHECK(shifted.coeff(i) == g.coeff(i + 1));
    }
}

TEST_CASE("solve_series back-substitution holds across the corpus") {
    ParamSet ps = ParamSet::symbolic();
    for (const QuadFE& fe : {catalan_fe(), fm_fe(ps, 2), fm_fe(ps, 5), Fm_fe(ps, 3),
                             gm_shift_fe(ps, 2), fm_minus1_fe(ps, 4), f3_h2_seed(ps),
                             level12_fe(), level23_fe(), updown3_fe(),
                             fe_mql(kAr, 2, 1, 3, fa(), fb())}) {
        Series f = solve_series(fe, 8);
        CHECK(satisfies_equation(fe, f));
    }
}

TEST_CASE("tau soundness on mql instances across the four theorem domains") {
    for (auto [m, q, l] : {std::tuple<int, int, int>{1, 2, 3},
                           {2, 3, 4},      // m+1 >= q, l >= q+1
                           {1, 4, 3},      // m+l = q
                           {0, 2, 5},      // i = q-m = 2, l >= q+2i-1
                           {6, 3, 2},      // l = q-i, m >= q+2i+1
                           {8, 4, 2}}) {
        QuadFE fe = fe_mql(kAr, m, q, l, fa(), fb());
        TauChain ch = build_chain(fe, 2);
        for (int i = 0; i < 2; ++i)
            check_relation(ch.states[i], ch.states[i + 1], ch.relations[i], 5);
    }
}

TEST_CASE("tau rejects degenerate images") {
    // Case-iii numerator N = -x^{k-2} v - u_L u_H vanishes identically for
    // u = 1 + x^2 (so u_L = 1, u_H = 1), k = 2, v = -1.
    QuadFE fe;
    fe.d = 0;
    fe.k = 2;
    fe.u = RatFun::from_poly(xpi({1, 0, 1}));
    fe.v = RatFun::constant(kAr, fc(-1));
    fe.check();
    CHECK_THROWS_AS(tau(fe), Error);
}
