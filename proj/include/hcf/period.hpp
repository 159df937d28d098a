#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcf/hankel.hpp"
#include "hcf/quadfe.hpp"

namespace hcf {

/// A product sigma * prod_i base_i ^ (alpha_i n + beta_i): the shape every
/// composed chain factor takes, since each step contributes sigma_i and
/// gamma_i^(n - partial shift).
struct CycleFactor {
    struct Pow {
        MPFrac base;
        long alpha = 0;
        long beta = 0;
    };
    int sigma = 1;
    std::vector<Pow> powers;

    void push(const MPFrac& base, long alpha, long beta) {
        if (base.is_one()) return;
        for (auto& p : powers) {
            if (p.base == base) {
                p.alpha += alpha;
                p.beta += beta;
                return;
            }
        }
        powers.push_back({base, alpha, beta});
    }

    MPFrac eval(long n, int arity) const {
        MPFrac r = MPFrac::constant(arity, Rat(sigma));
        for (const auto& p : powers) r *= p.base.pow(p.alpha * n + p.beta);
        return r;
    }

    /// The factor with n replaced by n - t.
    CycleFactor shifted_n(long t) const {
        CycleFactor r = *this;
        for (auto& p : r.powers) p.beta -= p.alpha * t;
        return r;
    }
};

/// Composes relations [first, last) of a chain into sigma * gamma_i^(n-...)
/// form, where n indexes the determinants of states[first].
inline CycleFactor compose_factor(const TauChain& chain, std::size_t first, std::size_t last) {
    CycleFactor f;
    long at = 0;
    for (std::size_t i = first; i < last; ++i) {
        const TauRelation& r = chain.relations[i];
        f.sigma *= r.sigma;
        if (!r.gamma.is_one()) f.push(r.gamma, 1, -at);
        at += r.shift;
    }
    return f;
}

/// Detected cycle of a raw tau chain: states[preperiod + period] equals
/// states[preperiod] as canonical equations (RatFun cross-multiplication
/// equality, not truncated-series equality), and one trip around the cycle
/// multiplies the Hankel determinants by factor while shifting n by shift:
///   H_n(states[preperiod]) = factor(n) * H_{n-shift}(states[preperiod]).
struct PeriodReport {
    int preperiod = 0;
    int period = 0;
    long shift = 0;
    CycleFactor factor;
    TauChain chain;  // states 0 .. preperiod+period inclusive
};

/// Runs raw tau steps (each step one Prop-case) and reports the first state
/// repetition, scanning up to max_steps. Unbounded growth without
/// repetition yields nullopt, never an exception; tau failures propagate
/// annotated with the step index.
inline std::optional<PeriodReport> detect_period(const QuadFE& seed, int max_steps) {
    if (max_steps < 1) throw Error("detect_period: max_steps must be >= 1");
    TauChain ch;
    ch.states.push_back(seed);
    for (int step = 0; step < max_steps; ++step) {
        std::pair<QuadFE, TauRelation> next;
        try {
            next = tau(ch.states.back());
        } catch (const Error& e) {
            throw Error("detect_period: tau failed at step " + std::to_string(step) + ": " +
                        e.what());
        }
        ch.states.push_back(std::move(next.first));
        ch.relations.push_back(std::move(next.second));
        for (std::size_t p = 0; p + 1 < ch.states.size(); ++p) {
            if (!(ch.states[p] == ch.states.back())) continue;
            PeriodReport rep;
            rep.preperiod = static_cast<int>(p);
            rep.period = static_cast<int>(ch.states.size() - 1 - p);
            rep.factor = compose_factor(ch, p, ch.states.size() - 1);
            for (std::size_t i = p; i + 1 < ch.states.size(); ++i)
                rep.shift += ch.relations[i].shift;
            rep.chain = std::move(ch);
            return rep;
        }
    }
    return std::nullopt;
}

/// Exact rational function of the chain parameter p, produced by the
/// shifted-period fit.
struct RatInP {
    std::vector<Rat> num{Rat(0)};
    std::vector<Rat> den{Rat(1)};

    static RatInP constant(Rat v) { return {{std::move(v)}, {Rat(1)}}; }

    bool is_constant() const { return num.size() <= 1 && den.size() <= 1; }

    static Rat eval_poly(const std::vector<Rat>& c, const Rat& p) {
        Rat acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * p + *it;
        return acc;
    }

    std::optional<Rat> eval(const Rat& p) const {
        Rat d = eval_poly(den, p);
        if (d.is_zero()) return std::nullopt;
        return eval_poly(num, p) / d;
    }
};

namespace detail {

/// Least-degree exact rational interpolation num/den (degrees <= cap) through
/// every sample, denominator nonvanishing on the samples.
inline std::optional<RatInP> fit_rational(const std::vector<std::pair<long, Rat>>& samples,
                                          int cap) {
    for (int total = 0; total <= 2 * cap; ++total) {
        for (int dn = std::max(0, total - cap); dn <= std::min(cap, total); ++dn) {
            int dd = total - dn;
            std::size_t unknowns = static_cast<std::size_t>(dn) + dd + 2;
            // Row per sample: sum n_i p^i - v * sum d_j p^j = 0.
            std::vector<std::vector<Rat>> m;
            for (const auto& [p, v] : samples) {
                std::vector<Rat> row;
                Rat pw(1);
                for (int i = 0; i <= dn; ++i) {
                    row.push_back(pw);
                    pw *= Rat(p);
                }
                pw = Rat(1);
                for (int j = 0; j <= dd; ++j) {
                    row.push_back(-(v * pw));
                    pw *= Rat(p);
                }
                m.push_back(std::move(row));
            }
            // Reduced echelon form; then read one nullspace vector.
            std::size_t rows = m.size(), rank = 0;
            std::vector<std::size_t> lead_col;
            for (std::size_t c = 0; c < unknowns && rank < rows; ++c) {
                std::size_t piv = rank;
                while (piv < rows && m[piv][c].is_zero()) ++piv;
                if (piv == rows) continue;
                std::swap(m[rank], m[piv]);
                Rat inv = m[rank][c].inv();
                for (auto& x : m[rank]) x *= inv;
                for (std::size_t r = 0; r < rows; ++r) {
                    if (r == rank || m[r][c].is_zero()) continue;
                    Rat f = m[r][c];
                    for (std::size_t x = 0; x < unknowns; ++x) m[r][x] -= f * m[rank][x];
                }
                lead_col.push_back(c);
                ++rank;
            }
            if (rank == unknowns) continue;  // only the zero solution
            // Free column: the first non-pivot; set it to 1.
            std::vector<Rat> sol(unknowns, Rat(0));
            std::size_t free_col = 0;
            while (free_col < unknowns &&
                   std::find(lead_col.begin(), lead_col.end(), free_col) != lead_col.end())
                ++free_col;
            sol[free_col] = Rat(1);
            for (std::size_t r = 0; r < rank; ++r)
                sol[lead_col[r]] = -m[r][free_col];
            RatInP fit;
            fit.num.assign(sol.begin(), sol.begin() + dn + 1);
            fit.den.assign(sol.begin() + dn + 1, sol.end());
            while (fit.num.size() > 1 && fit.num.back().is_zero()) fit.num.pop_back();
            while (fit.den.size() > 1 && fit.den.back().is_zero()) fit.den.pop_back();
            bool all_den_zero = true;
            for (const auto& cden : fit.den) all_den_zero = all_den_zero && cden.is_zero();
            if (all_den_zero) continue;
            // Monic denominator for a deterministic representation.
            Rat lead = fit.den.back();
            if (!lead.is_zero()) {
                for (auto& x : fit.num) x /= lead;
                for (auto& x : fit.den) x /= lead;
            }
            bool ok = true;
            for (const auto& [p, v] : samples) {
                auto got = fit.eval(Rat(p));
                ok = ok && got.has_value() && *got == v;
            }
            if (ok) return fit;
        }
    }
    return std::nullopt;
}

/// Flattened coefficient slots of a canonical state; degrees taken from the
/// widest state in the family so vanishing coefficients fit as zero.
struct SlotView {
    int dun, dud, dvn, dvd;

    static Rat coeff_at(const XPoly& p, int i, const char* what) {
        MPFrac c = p.coeff(i);
        if (!c.is_constant())
            throw Error(std::string("detect_shifted_period: ") + what +
                        " has symbolic coefficients; run the chain at numeric parameters");
        return c.constant_value();
    }

    std::vector<std::pair<std::string, Rat>> slots(const QuadFE& fe) const {
        std::vector<std::pair<std::string, Rat>> out;
        for (int i = 0; i <= dun; ++i)
            out.emplace_back("u.num[" + std::to_string(i) + "]", coeff_at(fe.u.num(), i, "u"));
        for (int i = 0; i <= dud; ++i)
            out.emplace_back("u.den[" + std::to_string(i) + "]", coeff_at(fe.u.den(), i, "u"));
        for (int i = 0; i <= dvn; ++i)
            out.emplace_back("v.num[" + std::to_string(i) + "]", coeff_at(fe.v.num(), i, "v"));
        for (int i = 0; i <= dvd; ++i)
            out.emplace_back("v.den[" + std::to_string(i) + "]", coeff_at(fe.v.den(), i, "v"));
        return out;
    }
};

}  // namespace detail

/// A verified shifted-period template: the macro-chain states at steps
/// preperiod + p*stride, for p = 0..window-1, share (d, k) and have every
/// coefficient slot given by an exact rational function of p; at least two
/// held-out strides re-verified the instantiation.
struct ShiftedPeriodReport {
    int preperiod = 0;
    int stride = 0;
    int d = 0;
    int k = 0;
    long p_min = 0, p_max = 0;  // window used for the fit
    bool holdout_verified = false;
    std::map<std::string, RatInP> maps;
    std::vector<QuadFE> samples;  // window + holdout states, in p order
    std::vector<TauRelation> sample_relations;  // macro relations within one stride at p=0
};

/// Scans strides q <= stride_guess_max (and small preperiods) over the
/// macro-step chain, fitting every structural slot as a rational function
/// of p with numerator/denominator degree <= degree_cap. The first template
/// that interpolates the window and survives >= 2 held-out strides wins.
/// No verified stride is an ordinary nullopt, not an error.
inline std::optional<ShiftedPeriodReport> detect_shifted_period(const QuadFE& seed,
                                                                int stride_guess_max,
                                                                int window,
                                                                int degree_cap = 4,
                                                                int preperiod_max = 6) {
    if (window < 4) throw Error("detect_shifted_period: window must be >= 4");
    if (stride_guess_max < 1) throw Error("detect_shifted_period: stride_guess_max must be >= 1");
    const int holdout = 2;
    int need = preperiod_max + stride_guess_max * (window + holdout - 1) + 1;
    TauChain ch;
    ch.states.push_back(seed);
    for (int step = 0; step < need; ++step) {
        std::pair<QuadFE, TauRelation> next;
        try {
            next = tau_macro(ch.states.back());
        } catch (const Error& e) {
            throw Error("detect_shifted_period: tau failed at macro step " +
                        std::to_string(step) + ": " + e.what());
        }
        ch.states.push_back(std::move(next.first));
        ch.relations.push_back(std::move(next.second));
    }

    for (int q = 1; q <= stride_guess_max; ++q) {
        for (int pre = 0; pre <= preperiod_max; ++pre) {
            std::vector<const QuadFE*> all;
            for (int p = 0; p < window + holdout; ++p)
                all.push_back(&ch.states[pre + static_cast<std::size_t>(p) * q]);
            bool structural = true;
            for (const QuadFE* s : all)
                structural = structural && s->d == all[0]->d && s->k == all[0]->k;
            if (!structural) continue;

            detail::SlotView view{0, 0, 0, 0};
            for (const QuadFE* s : all) {
                view.dun = std::max(view.dun, s->u.num().degree());
                view.dud = std::max(view.dud, s->u.den().degree());
                view.dvn = std::max(view.dvn, s->v.num().degree());
                view.dvd = std::max(view.dvd, s->v.den().degree());
            }

            std::map<std::string, std::vector<std::pair<long, Rat>>> table;
            bool numeric = true;
            try {
                for (int p = 0; p < window + holdout; ++p)
                    for (auto& [name, val] : view.slots(*all[p]))
                        table[name].emplace_back(p, val);
            } catch (const Error&) {
                numeric = false;
            }
            if (!numeric)
                throw Error("detect_shifted_period: requires numeric parameters");

            std::map<std::string, RatInP> maps;
            bool fitted = true;
            for (auto& [name, samples] : table) {
                std::vector<std::pair<long, Rat>> fitpts(samples.begin(),
                                                         samples.begin() + window);
                auto fit = detail::fit_rational(fitpts, degree_cap);
                if (!fit) {
                    fitted = false;
                    break;
                }
                // Holdout check for this slot.
                for (int p = window; p < window + holdout && fitted; ++p) {
                    auto got = fit->eval(Rat(p));
                    fitted = got.has_value() && *got == samples[p].second;
                }
                if (!fitted) break;
                maps.emplace(name, std::move(*fit));
            }
            if (!fitted) continue;

            ShiftedPeriodReport rep;
            rep.preperiod = pre;
            rep.stride = q;
            rep.d = all[0]->d;
            rep.k = all[0]->k;
            rep.p_min = 0;
            rep.p_max = window - 1;
            rep.holdout_verified = true;
            rep.maps = std::move(maps);
            for (const QuadFE* s : all) rep.samples.push_back(*s);
            for (int i = 0; i < q; ++i)
                rep.sample_relations.push_back(ch.relations[pre + i]);
            return rep;
        }
    }
    return std::nullopt;
}

/// Closed determinant recursion about the chain's seed:
///   H_n(seed) = factor(n) * H_{n-shift}(seed)    for n >= valid_from,
/// with the base table H_0 .. H_{valid_from-1} pinned by the determinant
/// oracle and the recursion re-validated against the oracle through n_max
/// at construction (a failed validation throws, carrying the first bad n).
struct ClosedRecursion {
    long shift = 0;
    CycleFactor factor;
    long valid_from = 0;
    std::vector<MPFrac> base_cases;
    long validated_up_to = 0;

    MPFrac eval(long n, int arity) const {
        if (n < 0) return MPFrac::constant(arity, Rat(0));
        if (n < valid_from) return base_cases[static_cast<std::size_t>(n)];
        return factor.eval(n, arity) * eval(n - shift, arity);
    }
};

inline ClosedRecursion closed_recursion(const PeriodReport& rep, int n_max = 12) {
    const TauChain& ch = rep.chain;
    int ar = ch.origin().arity();
    long pre_shift = 0;
    CycleFactor psi = compose_factor(ch, 0, static_cast<std::size_t>(rep.preperiod));
    for (int i = 0; i < rep.preperiod; ++i) pre_shift += ch.relations[i].shift;

    // H_n(seed) = psi(n) H_{n-T}(F_P) and H_j(F_P) = phi(j) H_{j-S}(F_P)
    // combine to H_n(seed) = [prod gamma^{alpha S}] phi(n-T) H_{n-S}(seed).
    ClosedRecursion rec;
    rec.shift = rep.shift;
    rec.factor = rep.factor.shifted_n(pre_shift);
    for (const auto& pw : psi.powers) rec.factor.push(pw.base, 0, pw.alpha * rep.shift);
    rec.valid_from = rep.shift + pre_shift;

    if (rec.shift < 1) throw Error("closed_recursion: cycle has zero shift");
    int order = 2 * std::max<long>(n_max, rec.valid_from) - 2;
    Series s = solve_series(ch.origin(), std::max(order, 0));
    for (long n = 0; n < rec.valid_from; ++n)
        rec.base_cases.push_back(hankel_det(s, static_cast<int>(n), 0));
    for (long n = rec.valid_from; n <= n_max; ++n) {
        MPFrac expect = rec.factor.eval(n, ar) * hankel_det(s, static_cast<int>(n - rec.shift), 0);
        if (!(hankel_det(s, static_cast<int>(n), 0) == expect))
            throw Error("closed_recursion: oracle validation failed at n = " + std::to_string(n));
    }
    rec.validated_up_to = n_max;
    return rec;
}

/// For a shifted-periodic chain the per-stride factor depends on the chain
/// parameter p, which the ClosedRecursion shape cannot carry; only the
/// degenerate constant-in-p case (an ordinary period observed through the
/// shifted detector) collapses to a closed recursion.
inline ClosedRecursion closed_recursion(const ShiftedPeriodReport& rep, int n_max = 12) {
    for (const auto& [name, fit] : rep.maps)
        if (!fit.is_constant())
            throw Error("closed_recursion: template is genuinely p-dependent (slot " + name +
                        "); no fixed-factor recursion exists");
    TauChain cycle;
    cycle.states.assign(rep.samples.begin(), rep.samples.begin() + 2);
    cycle.relations = rep.sample_relations;
    PeriodReport p;
    p.preperiod = 0;
    p.period = rep.stride;
    p.factor = compose_factor(cycle, 0, cycle.relations.size());
    for (const auto& r : cycle.relations) p.shift += r.shift;
    p.chain = std::move(cycle);
    return closed_recursion(p, n_max);
}

}  // namespace hcf
