#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hcf/mpoly.hpp"

namespace hcf {

namespace detail {

struct GcdBudget {
    long units = 0;
};
struct GcdGiveUp {};

/// Terms of p with the exponent of variable idx equal to e, that exponent
/// stripped.
inline MPoly coeff_in(const MPoly& p, int idx, int e) {
    std::vector<MPoly::Term> ts;
    for (const auto& [k, c] : p.terms()) {
        auto ex = MPoly::unpack(k, p.arity());
        if (ex[idx] != e) continue;
        ex[idx] = 0;
        ts.emplace_back(MPoly::pack(ex, p.arity()), c);
    }
    return MPoly::from_terms(p.arity(), std::move(ts));
}

inline MPoly mul_var_pow(const MPoly& p, int idx, int e) {
    if (e == 0 || p.is_zero()) return p;
    std::vector<MPoly::Term> ts;
    for (const auto& [k, c] : p.terms()) {
        auto ex = MPoly::unpack(k, p.arity());
        ex[idx] += e;
        ts.emplace_back(MPoly::pack(ex, p.arity()), c);
    }
    return MPoly::from_terms(p.arity(), std::move(ts));
}

inline MPoly strip_rat_content(MPoly p) {
    if (p.is_zero()) return p;
    Rat c = p.content();
    if (p.lead_coeff().sign() < 0) c = -c;
    return c.is_one() ? p : p.scaled(c.inv());
}

/// Pseudo-remainder of a by b in variable idx, rational content stripped
/// each round (the multiplier is discarded; callers take primitive parts).
inline MPoly prem(MPoly a, const MPoly& b, int idx, GcdBudget& budget) {
    int db = b.degree_in(idx);
    MPoly lcb = coeff_in(b, idx, db);
    int da;
    while (!a.is_zero() && (da = a.degree_in(idx)) >= db) {
        budget.units -= static_cast<long>(a.terms().size()) *
                        static_cast<long>(lcb.terms().size() + 1);
        if (budget.units < 0) throw GcdGiveUp{};
        MPoly lca = coeff_in(a, idx, da);
        a = strip_rat_content(a * lcb - mul_var_pow(b * lca, idx, da - db));
    }
    return a;
}

/// Modular coprimality probe. Evaluating all but one variable at fixed
/// points over Z_p keeps a multiple of the gcd's image alive, so a constant
/// image gcd in every shared variable certifies (up to vanishing leading
/// coefficients, which only costs a missed reduction) that the true gcd is
/// constant. The pseudo-remainder sequence then never runs on coprime
/// operands, whose intermediate swell is the PRS worst case.
namespace probe {

constexpr std::uint64_t kP = (1ull << 61) - 1;  // Mersenne prime

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kP);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= kP;
    while (e) {
        if (e & 1) r = mulmod(r, b);
        b = mulmod(b, b);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a) { return powmod(a, kP - 2); }

inline std::uint64_t mpz_mod_p(const mpz_class& z) {
    mpz_class m = z % static_cast<unsigned long>(kP);
    if (m < 0) m += static_cast<unsigned long>(kP);
    return m.get_ui();
}

/// Image of p as a univariate polynomial in variable idx, all other
/// variables fixed at deterministic points. False when the probe prime
/// divides a coefficient denominator.
inline bool image_in(const MPoly& p, int idx, std::vector<std::uint64_t>& out) {
    static constexpr std::uint64_t pts[MPoly::kMaxArity] = {3, 7, 19, 43};
    out.assign(static_cast<std::size_t>(p.degree_in(idx)) + 1, 0);
    for (const auto& [k, c] : p.terms()) {
        std::uint64_t den = mpz_mod_p(mpz_class(c.raw().get_den()));
        if (den == 0) return false;
        std::uint64_t v = mulmod(mpz_mod_p(mpz_class(c.raw().get_num())), invmod(den));
        auto e = MPoly::unpack(k, p.arity());
        for (int i = 0; i < p.arity(); ++i)
            if (i != idx && e[i] != 0) v = mulmod(v, powmod(pts[i], e[i]));
        std::size_t pos = static_cast<std::size_t>(e[idx]);
        out[pos] = (out[pos] + v) % kP;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return true;
}

inline int gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
    auto trim = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a), trim(b);
    while (!b.empty()) {
        std::uint64_t il = invmod(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t f = mulmod(a.back(), il);
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t s = mulmod(f, b[i]);
                a[off + i] = (a[off + i] + kP - s) % kP;
            }
            trim(a);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

/// True when the probe certifies a constant gcd. False means "possibly
/// nontrivial" (including probe failure), and the caller must compute.
inline bool certainly_coprime(const MPoly& p, const MPoly& q) {
    unsigned shared = p.vars_mask() & q.vars_mask();
    if (shared == 0) return true;
    std::vector<std::uint64_t> ia, ib;
    for (int v = 0; v < p.arity(); ++v) {
        if (!(shared & (1u << v))) continue;
        if (!image_in(p, v, ia) || !image_in(q, v, ib)) return false;
        if (ia.empty() || ib.empty()) return false;
        if (gcd_degree(std::move(ia), std::move(ib)) != 0) return false;
    }
    return true;
}

}  // namespace probe

MPoly gcd_impl(const MPoly& p, const MPoly& q, GcdBudget& budget);

/// Content of p viewed as a univariate polynomial in variable idx: the gcd
/// of its coefficient polynomials.
inline MPoly content_in(const MPoly& p, int idx, GcdBudget& budget) {
    MPoly c(p.arity());
    for (int e = 0; e <= p.degree_in(idx); ++e) {
        MPoly ce = coeff_in(p, idx, e);
        if (ce.is_zero()) continue;
        c = c.is_zero() ? ce : gcd_impl(c, ce, budget);
        if (c.is_constant()) break;
    }
    return c;
}

inline MPoly exact_div_checked(const MPoly& p, const MPoly& d) {
    auto q = MPoly::exact_div(p, d);
    if (!q) throw Error("mpoly_gcd: exact division failed (internal)");
    return *q;
}

/// Primitive PRS on the lowest variable present, contents handled
/// recursively over the (at most kMaxArity) session parameters.
inline MPoly gcd_impl(const MPoly& p, const MPoly& q, GcdBudget& budget) {
    int ar = p.arity();
    if (p.is_zero()) return strip_rat_content(q);
    if (q.is_zero()) return strip_rat_content(p);
    if (p.is_constant() || q.is_constant()) return MPoly::constant(ar, Rat(1));
    if (p.terms().size() == 1 || q.terms().size() == 1) {
        // gcd against a monomial: the shared monomial part.
        auto ep = p.min_exps(), eq = q.min_exps();
        MPoly g = MPoly::constant(ar, Rat(1));
        for (std::size_t i = 0; i < ep.size(); ++i) {
            int e = std::min(ep[i], eq[i]);
            if (e > 0) g = mul_var_pow(g, static_cast<int>(i), e);
        }
        return g;
    }
    if (probe::certainly_coprime(p, q)) return MPoly::constant(ar, Rat(1));

    unsigned mask = p.vars_mask() | q.vars_mask();
    int idx = 0;
    while (!(mask & (1u << idx))) ++idx;

    MPoly cp = content_in(p, idx, budget);
    MPoly cq = content_in(q, idx, budget);
    MPoly cont = gcd_impl(cp, cq, budget);
    MPoly a = strip_rat_content(exact_div_checked(p, cp));
    MPoly b = strip_rat_content(exact_div_checked(q, cq));
    if (a.degree_in(idx) < b.degree_in(idx)) std::swap(a, b);
    while (!b.is_zero()) {
        MPoly r = prem(a, b, idx, budget);
        a = std::move(b);
        if (r.is_zero()) {
            b = std::move(r);
            break;
        }
        MPoly cr = content_in(r, idx, budget);
        b = strip_rat_content(exact_div_checked(r, cr));
    }
    if (a.degree_in(idx) == 0) return strip_rat_content(cont);
    return strip_rat_content(cont * a);
}

}  // namespace detail

/// Greatest common divisor over Q[params], primitive with positive leading
/// coefficient. Best effort under a deterministic work budget: when the
/// pseudo-remainder sequence exceeds it, the result degrades to 1 ("no
/// reduction found"), which every caller treats as a skipped cancellation,
/// never as a wrong answer. Divisibility of a nontrivial result is verified
/// before it is returned.
inline MPoly mpoly_gcd(const MPoly& p, const MPoly& q) {
    detail::GcdBudget budget{
        400000 + 400L * static_cast<long>(p.terms().size() + q.terms().size())};
    MPoly g(p.arity());
    try {
        g = detail::gcd_impl(p, q, budget);
    } catch (const detail::GcdGiveUp&) {
        return MPoly::constant(p.arity(), Rat(1));
    }
    if (!g.is_constant() && !p.is_zero() && !q.is_zero()) {
        if (!MPoly::exact_div(p, g) || !MPoly::exact_div(q, g))
            return MPoly::constant(p.arity(), Rat(1));
    }
    return g;
}

}  // namespace hcf
