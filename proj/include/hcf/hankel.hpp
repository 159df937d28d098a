#pragma once

#include <string>
#include <vector>

#include "hcf/matrix.hpp"
#include "hcf/series.hpp"

namespace hcf {

/// A shifted Hankel matrix request: n x n entries a_{i+j+k} of the source
/// series. n = 0 denotes the empty determinant, with value 1.
struct HankelSpec {
    const Series& source;
    int offset = 0;  // k
    int size = 0;    // n
};

inline void check_hankel_order(const Series& a, int n, int k, const char* who) {
    if (n < 0 || k < 0) throw Error(std::string(who) + ": negative size/offset");
    if (n > 0 && a.order() < 2 * n - 2 + k)
        throw Error(std::string(who) + ": series order " + std::to_string(a.order()) +
                    " below required " + std::to_string(2 * n - 2 + k));
}

/// (a_{i+j+k})_{0<=i,j<n}.
inline SquareMatrix hankel_matrix(const HankelSpec& spec) {
    check_hankel_order(spec.source, spec.size, spec.offset, "hankel_matrix");
    SquareMatrix m(spec.source.arity(), spec.size);
    for (int i = 0; i < spec.size; ++i)
        for (int j = 0; j < spec.size; ++j)
            m.at(i, j) = spec.source.coeff(i + j + spec.offset);
    return m;
}

/// det (a_{i+j+k}); the brute-force oracle used to check every closed form.
inline MPFrac hankel_det(const Series& a, int n, int k = 0) {
    return det_exact(hankel_matrix({a, k, n}));
}

enum class KernelVariant { ordinary, shifted };

/// The n x n coefficient matrix of the divided difference
///   (x f(x) - y f(y)) / (x - y)   (ordinary,  f = A)
///   (f(x) - f(y)) / (x - y)       (shifted,   f = A)
/// computed by synthetic division of f(x) - f(y) by (x - y): each
/// (x^s - y^s)/(x - y) contributes the antidiagonal x^i y^{s-1-i}. This is a
/// genuinely different construction from hankel_matrix, so the classical
/// identity kernel_matrix == hankel_matrix is a meaningful test.
inline SquareMatrix kernel_matrix(const Series& a, int n, KernelVariant variant) {
    int need = variant == KernelVariant::ordinary ? 2 * n - 1 : 2 * n;
    if (n > 0 && a.order() < need - 1)
        throw Error("kernel_matrix: series order below required " + std::to_string(need - 1));
    int ar = a.arity();
    // f = x*A(x) (ordinary) or A(x) (shifted), as a coefficient list.
    std::vector<MPFrac> f;
    if (variant == KernelVariant::ordinary) {
        f.push_back(MPFrac::constant(ar, Rat(0)));
        for (int i = 0; i <= std::min(a.order(), 2 * n - 2); ++i) f.push_back(a.coeff(i));
    } else {
        for (int i = 0; i <= std::min(a.order(), 2 * n - 1); ++i) f.push_back(a.coeff(i));
    }
    SquareMatrix m(ar, n);
    for (std::size_t s = 1; s < f.size(); ++s) {
        if (f[s].is_zero()) continue;
        for (std::size_t i = 0; i < s; ++i) {
            std::size_t j = s - 1 - i;
            if (i < static_cast<std::size_t>(n) && j < static_cast<std::size_t>(n))
                m.at(static_cast<int>(i), static_cast<int>(j)) += f[s];
        }
    }
    return m;
}

/// Desnanot-Jacobi condensation:
///   H_n^{(k)} H_{n-2}^{(k+2)} == H_{n-1}^{(k)} H_{n-1}^{(k+2)} - (H_{n-1}^{(k+1)})^2,
/// evaluated exactly through the determinant oracle.
inline bool condensation_check(const Series& a, int n, int k) {
    if (n < 2) throw Error("condensation_check: requires n >= 2");
    check_hankel_order(a, n, k, "condensation_check");
    MPFrac lhs = hankel_det(a, n, k) * hankel_det(a, n - 2, k + 2);
    MPFrac m1 = hankel_det(a, n - 1, k);
    MPFrac m2 = hankel_det(a, n - 1, k + 2);
    MPFrac m3 = hankel_det(a, n - 1, k + 1);
    return lhs == m1 * m2 - m3 * m3;
}

}  // namespace hcf
