#pragma once

#include <utility>
#include <vector>

#include "hcf/quadfe.hpp"

namespace hcf {

/// One lattice step: horizontal span dx >= 1, rise dy, exact weight.
struct Step {
    int dx = 1;
    int dy = 0;
    MPFrac weight;
};

struct StepSet {
    int arity = 3;
    std::vector<Step> steps;

    void check() const {
        for (const auto& s : steps) {
            if (s.dx < 1) throw Error("StepSet: dx must be >= 1");
            if (s.weight.arity() != arity) throw Error("StepSet: weight arity mismatch");
        }
    }
};

/// Weighted counts of height-nonnegative paths from (0,0) to (n,0) for
/// n = 0..n_max, by the obvious dynamic program over (x, y). The height cap
/// n_max * max(dy, 1) is exact: no admissible path exceeds it.
inline std::vector<MPFrac> count_paths(const StepSet& ss, int n_max) {
    ss.check();
    if (n_max < 0) throw Error("count_paths: negative n_max");
    int up = 1;
    for (const auto& s : ss.steps) up = std::max(up, s.dy);
    int ymax = n_max * up;
    MPFrac zero = MPFrac::constant(ss.arity, Rat(0));
    std::vector<std::vector<MPFrac>> w(
        static_cast<std::size_t>(n_max) + 1,
        std::vector<MPFrac>(static_cast<std::size_t>(ymax) + 1, zero));
    w[0][0] = MPFrac::constant(ss.arity, Rat(1));
    for (int x = 1; x <= n_max; ++x)
        for (int y = 0; y <= ymax; ++y) {
            MPFrac acc = zero;
            for (const auto& s : ss.steps) {
                int px = x - s.dx, py = y - s.dy;
                if (px < 0 || py < 0 || py > ymax) continue;
                if (s.weight.is_zero() || w[px][py].is_zero()) continue;
                acc += s.weight * w[px][py];
            }
            w[x][y] = std::move(acc);
        }
    std::vector<MPFrac> out;
    out.reserve(n_max + 1);
    for (int x = 0; x <= n_max; ++x) out.push_back(w[x][0]);
    return out;
}

/// Cross-check of a step set against a functional equation: the solution
/// series of F = x^d/(u + x^k v F) carries the path counts at an index
/// shift of exactly d, i.e. W[n] == [x^{n+d}] F.
///
/// The shift convention was determined empirically: writing F = x^d W gives
/// W = 1/(u + x^{k+d} v W), whose arches pair an up step with a down step of
/// span k+d-1, so for the x^m/(1 - a x^q - b x^l F) family the matching step
/// set is {(1,1), (q,0), (l+m-1,-1)} with weights (1, a, b) and the counts
/// sit d = m places below the series index.
inline bool coefficients_match(const StepSet& ss, const QuadFE& fe, int n_max) {
    std::vector<MPFrac> counts = count_paths(ss, n_max);
    Series f = solve_series(fe, n_max + fe.d);
    for (int n = 0; n <= n_max; ++n)
        if (!(counts[static_cast<std::size_t>(n)] == f.coeff(n + fe.d))) return false;
    return true;
}

/// The step set matching fe_mql(m, q, l): {(1,1), (q,0), (l+m-1,-1)} with
/// weights (1, a, b).
inline StepSet mql_steps(int arity, int m, int q, int l, const MPFrac& a, const MPFrac& b) {
    if (l + m < 2) throw Error("mql_steps: down-step span l+m-1 must be >= 1");
    StepSet ss;
    ss.arity = arity;
    ss.steps = {{1, 1, MPFrac::constant(arity, Rat(1))}, {q, 0, a}, {l + m - 1, -1, b}};
    ss.check();
    return ss;
}

}  // namespace hcf
