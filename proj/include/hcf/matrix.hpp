#pragma once

#include <utility>
#include <vector>

#include "hcf/mpfrac.hpp"

namespace hcf {

/// Dense square matrix over the parameter fraction field.
class SquareMatrix {
public:
    SquareMatrix(int arity, int n)
        : arity_(arity), n_(n),
          e_(static_cast<std::size_t>(n) * n, MPFrac::constant(arity, Rat(0))) {
        if (n < 0) throw Error("SquareMatrix: negative size");
    }

    int size() const { return n_; }
    int arity() const { return arity_; }

    MPFrac& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const MPFrac& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    friend bool operator==(const SquareMatrix& x, const SquareMatrix& y) {
        if (x.n_ != y.n_) return false;
        for (std::size_t i = 0; i < x.e_.size(); ++i)
            if (x.e_[i] != y.e_[i]) return false;
        return true;
    }

    bool all_polynomial() const {
        for (const auto& v : e_)
            if (!v.is_polynomial()) return false;
        return true;
    }

private:
    int arity_, n_;
    std::vector<MPFrac> e_;
};

namespace detail {

/// Fraction-free Bareiss elimination over the polynomial ring. Exact
/// divisions by the previous pivot are guaranteed by the algorithm; a zero
/// column below the pivot row means a zero determinant.
inline MPFrac det_bareiss(const SquareMatrix& M) {
    int n = M.size(), ar = M.arity();
    std::vector<MPoly> a(static_cast<std::size_t>(n) * n, MPoly::zero(ar));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i * n + j] = M.at(i, j).num();
    int sign = 1;
    MPoly prev = MPoly::constant(ar, Rat(1));
    for (int k = 0; k + 1 < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (!a[r * n + k].is_zero()) { piv = r; break; }
        if (piv < 0) return MPFrac::constant(ar, Rat(0));
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MPoly t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                auto q = MPoly::exact_div(t, prev);
                if (!q) throw Error("det: Bareiss division not exact (internal)");
                a[i * n + j] = std::move(*q);
            }
            a[i * n + k] = MPoly::zero(ar);
        }
        prev = a[k * n + k];
    }
    MPoly d = a[(n - 1) * n + (n - 1)];
    return MPFrac::from_poly(sign < 0 ? -d : d);
}

/// Determinant of a matrix with genuine fraction entries: each row is
/// multiplied by the product of its distinct denominators (making the row
/// polynomial), Bareiss runs on the cleared matrix, and the collected row
/// multipliers are divided back out at the end. Plain fraction-field
/// elimination has exponential coefficient swell here because the field has
/// no full gcd; clearing keeps every intermediate an honest minor.
inline MPFrac det_cleared(const SquareMatrix& M) {
    int n = M.size(), ar = M.arity();
    SquareMatrix P(ar, n);
    MPoly total = MPoly::constant(ar, Rat(1));
    for (int i = 0; i < n; ++i) {
        MPoly rowmul = MPoly::constant(ar, Rat(1));
        for (int j = 0; j < n; ++j) {
            const MPoly& d = M.at(i, j).den();
            if (d.is_one()) continue;
            MPoly g = mpoly_gcd(rowmul, d);
            rowmul *= g.is_constant() ? d : *MPoly::exact_div(d, g);
        }
        total *= rowmul;
        for (int j = 0; j < n; ++j) {
            auto cofac = MPoly::exact_div(rowmul, M.at(i, j).den());
            if (!cofac) throw Error("det: denominator clearing failed (internal)");
            P.at(i, j) = MPFrac::from_poly(M.at(i, j).num() * *cofac);
        }
    }
    MPFrac d = det_bareiss(P);
    return MPFrac(d.num(), d.den() * total);
}

}  // namespace detail

/// Exact determinant. Empty matrix (n = 0) evaluates to 1. Polynomial
/// matrices go through fraction-free Bareiss elimination (bounds the
/// intermediate swell); matrices with genuine fractions are cleared row by
/// row and divided back.
inline MPFrac det_exact(const SquareMatrix& M) {
    if (M.size() == 0) return MPFrac::constant(M.arity(), Rat(1));
    if (M.size() == 1) return M.at(0, 0);
    if (M.all_polynomial()) return detail::det_bareiss(M);
    return detail::det_cleared(M);
}

}  // namespace hcf
