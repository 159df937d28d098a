#include <catch2/catch_amalgamated.hpp>

#include "hcf/corpus.hpp"
#include "hcf/period.hpp"
#include "helpers.hpp"

using namespace hcf;
using namespace th;

TEST_CASE("rational fitting in p") {
    using detail::fit_rational;
    // (p^2 + 1) / (p + 3)
    std::vector<std::pair<long, Rat>> pts;
    for (long p = 0; p < 8; ++p) pts.emplace_back(p, Rat(p * p + 1) / Rat(p + 3));
    auto fit = fit_rational(pts, 4);
    REQUIRE(fit.has_value());
    CHECK(*fit->eval(Rat(11)) == Rat(122, 14));

    // constants fit as constants
    pts.clear();
    for (long p = 0; p < 6; ++p) pts.emplace_back(p, Rat(5, 3));
    fit = fit_rational(pts, 4);
    REQUIRE(fit.has_value());
    CHECK(fit->is_constant());
    CHECK(*fit->eval(Rat(100)) == Rat(5, 3));

    // 3^p is not rational in p: a cap-2 fit cannot interpolate 8 samples
    pts.clear();
    long v = 1;
    for (long p = 0; p < 8; ++p, v *= 3) pts.emplace_back(p, Rat(v));
    CHECK_FALSE(fit_rational(pts, 2).has_value());
}

TEST_CASE("detect_period: level12 cycle of five states") {
    auto rep = detect_period(level12_fe(), 12);
    REQUIRE(rep.has_value());
    CHECK(rep->preperiod == 0);
    CHECK(rep->period == 5);
    CHECK(rep->shift == 3);
    // factor(n) = (1+t)^{2n-3}
    for (long n = 3; n <= 8; ++n)
        CHECK(rep->factor.eval(n, kAr) == (fc(1) + ft()).pow(2 * n - 3));

    ClosedRecursion rec = closed_recursion(*rep, 15);
    CHECK(rec.shift == 3);
    CHECK(rec.valid_from == 3);
    CHECK(rec.base_cases[0] == fc(1));
    CHECK(rec.base_cases[1] == fc(1));
    CHECK(rec.base_cases[2] == fc(1) + ft());
    CHECK(rec.validated_up_to == 15);
    // closed forms: H_{3n} = (1+t)^{3n^2}; H_{3n+1} = (1+t)^{3n^2+2n}
    CHECK(rec.eval(9, kAr) == (fc(1) + ft()).pow(27));
    CHECK(rec.eval(7, kAr) == (fc(1) + ft()).pow(16));
}

TEST_CASE("detect_period: level23 cycle with shift 7") {
    auto rep = detect_period(level23_fe(), 15);
    REQUIRE(rep.has_value());
    CHECK(rep->preperiod == 0);
    CHECK(rep->period == 9);
    CHECK(rep->shift == 7);
    for (long n = 7; n <= 10; ++n)
        CHECK(rep->factor.eval(n, kAr) == -(fc(1) + ft()).pow(4 * n - 14));

    ClosedRecursion rec = closed_recursion(*rep, 15);
    MPFrac one_t = fc(1) + ft();
    CHECK(rec.base_cases[0] == fc(1));
    CHECK(rec.base_cases[1] == fc(1));
    CHECK(rec.base_cases[2] == one_t);
    CHECK(rec.base_cases[3] == fc(0));
    CHECK(rec.base_cases[4] == fc(0));
    CHECK(rec.base_cases[5] == -one_t.pow(7));
    CHECK(rec.base_cases[6] == -one_t.pow(10));
    // H_{7n} = (-1)^n (1+t)^{14n^2}: n = 2
    CHECK(rec.eval(14, kAr) == one_t.pow(56));
}

TEST_CASE("detect_period: the period-14 determinant chain") {
    auto rep = detect_period(updown3_fe(), 15);
    REQUIRE(rep.has_value());
    CHECK(rep->shift == 7);
    // H_n(F) = -H_{n-7}(F): the factor is the constant -1.
    for (long n = 7; n <= 12; ++n) CHECK(rep->factor.eval(n, kAr) == fc(-1));

    ClosedRecursion rec = closed_recursion(*rep, 15);
    Series f = solve_series(updown3_fe(), 40);
    for (int n = 0; n <= 6; ++n) CHECK(rec.eval(n, kAr) == hankel_det(f, n, 0));
}

TEST_CASE("detect_period: Catalan and its fixed point") {
    auto [c1, rel] = tau(catalan_fe());
    auto rep1 = detect_period(c1, 3);
    REQUIRE(rep1.has_value());
    CHECK(rep1->preperiod == 0);
    CHECK(rep1->period == 1);
    CHECK(rep1->shift == 1);
    ClosedRecursion rec1 = closed_recursion(*rep1, 12);
    CHECK(rec1.shift == 1);
    CHECK(rec1.valid_from == 1);
    CHECK(rec1.base_cases[0] == fc(1));
    CHECK(rec1.factor.powers.empty());
    CHECK(rec1.factor.sigma == 1);

    // Seed at C itself: one preperiod step, then the fixed point.
    auto rep = detect_period(catalan_fe(), 5);
    REQUIRE(rep.has_value());
    CHECK(rep->preperiod == 1);
    CHECK(rep->period == 1);
    ClosedRecursion rec = closed_recursion(*rep, 12);
    for (long n = 0; n <= 12; ++n) CHECK(rec.eval(n, kAr) == fc(1));
}

TEST_CASE("closed recursion for f1 equals the product closed form") {
    ParamSet ps = ParamSet::symbolic();
    auto rep = detect_period(fm_fe(ps, 1), 8);
    REQUIRE(rep.has_value());
    CHECK(rep->preperiod == 1);
    CHECK(rep->period == 2);
    CHECK(rep->shift == 1);

    ClosedRecursion rec = closed_recursion(*rep, 15);
    MPFrac bab = fb() * (fa() + fb());
    for (long n = 2; n <= 8; ++n) CHECK(rec.factor.eval(n, kAr) == bab.pow(n - 1));
    // H_n(f1) = b^C(n,2) (a+b)^C(n,2)
    for (long n = 0; n <= 10; ++n) CHECK(rec.eval(n, kAr) == bab.pow(n * (n - 1) / 2));
}

TEST_CASE("closed recursion for f_m matches the m-shift recursion") {
    ParamSet ps = ParamSet::symbolic();
    // m = 2 has a minimal cycle of shift 1 whose square is the 2-shift form.
    {
        auto rep = detect_period(fm_fe(ps, 2), 10);
        REQUIRE(rep.has_value());
        ClosedRecursion rec = closed_recursion(*rep, 12);
        CHECK(rec.shift == 1);
        for (long n = 2; n <= 6; ++n)
            CHECK(rec.factor.eval(n, kAr) * rec.factor.eval(n - 1, kAr) ==
                  fb().pow(2 * n - 3));
    }
    for (int m : {3, 4, 5}) {
        auto rep = detect_period(fm_fe(ps, m), 10);
        REQUIRE(rep.has_value());
        ClosedRecursion rec = closed_recursion(*rep, 12);
        CHECK(rec.shift == m);
        // H_n(f_m) = (-1)^C(m-1,2) b^{2n-m-1} H_{n-m}(f_m)
        MPFrac sgn = fc(neg_one_pow(binom(m - 1, 2).to_long()));
        for (long n = m; n <= m + 3; ++n)
            CHECK(rec.factor.eval(n, kAr) == sgn * fb().pow(2 * n - m - 1));
    }
}

TEST_CASE("no period within budget returns nullopt") {
    QuadFE fe;
    fe.d = 0;
    fe.k = 1;
    fe.u = RatFun::from_poly(xp({fc(1), fa() + fb(), fb()}));
    fe.v = RatFun::constant(kAr, fc(-1));
    fe.check();
    CHECK_FALSE(detect_period(fe, 4).has_value());
}

TEST_CASE("shifted period: Catalan H^(2) chain has a stride-1 template") {
    QuadFE a0 = catalan_h2_seed();
    auto rep = detect_shifted_period(a0, 3, 6);
    REQUIRE(rep.has_value());
    CHECK(rep->stride == 1);
    CHECK(rep->holdout_verified);
    CHECK(rep->d == 0);
    CHECK(rep->k == 2);
    // At least one slot genuinely varies with p.
    bool varies = false;
    for (const auto& [name, fit] : rep->maps) varies = varies || !fit.is_constant();
    CHECK(varies);

    // Extrapolate one stride past the holdout and compare against the actual
    // chain state: the template predicts states it never saw.
    long p = 6 + 2;  // window 6, holdout 2: first unseen p
    int target = rep->preperiod + static_cast<int>(p) * rep->stride;
    QuadFE cur = a0;
    for (int i = 0; i < target; ++i) cur = tau_macro(cur).first;
    for (const auto& [name, fit] : rep->maps) {
        auto want = fit.eval(Rat(p));
        REQUIRE(want.has_value());
        const RatFun& part = name[0] == 'u' ? cur.u : cur.v;
        const XPoly& poly = name.find(".num") != std::string::npos ? part.num() : part.den();
        int idx = std::stoi(name.substr(name.find('[') + 1));
        MPFrac got = poly.coeff(idx);
        REQUIRE(got.is_constant());
        CHECK(got.constant_value() == *want);
    }
}

TEST_CASE("shifted period: f_5 - 1 chain at a=b=1 has a stride-4 template") {
    ParamSet ps = ParamSet::numeric(Rat(1), Rat(1));
    QuadFE seed = fm_minus1_fe(ps, 5);
    auto rep = detect_shifted_period(seed, 6, 5);
    REQUIRE(rep.has_value());
    CHECK(rep->stride == 4);
    CHECK(rep->holdout_verified);
}

TEST_CASE("shifted period degenerates to constant maps on a periodic seed") {
    // The shifted detector needs numeric coefficients: specialize t = 2.
    auto rep = detect_shifted_period(level12_fe(fc(2)), 4, 6);
    REQUIRE(rep.has_value());
    for (const auto& [name, fit] : rep->maps) CHECK(fit.is_constant());
    CHECK(rep->stride == 3);  // the macro-step cycle length

    ClosedRecursion rec = closed_recursion(*rep, 12);
    CHECK(rec.shift == 3);
    for (long n = 3; n <= 8; ++n) CHECK(rec.factor.eval(n, kAr) == fc(3).pow(2 * n - 3));
}

TEST_CASE("shifted detector rejects symbolic coefficients") {
    CHECK_THROWS_AS(detect_shifted_period(level12_fe(), 4, 6), Error);
}

TEST_CASE("closed_recursion rejects genuinely p-dependent templates") {
    auto rep = detect_shifted_period(catalan_h2_seed(), 3, 6);
    REQUIRE(rep.has_value());
    CHECK_THROWS_AS(closed_recursion(*rep, 10), Error);
}
