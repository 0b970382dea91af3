#pragma once

#include <vector>

#include "tilinglab/error.hpp"
#include "tilinglab/numbers.hpp"

namespace tilinglab::detail {

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const QComplex& x) { return x.is_zero(); }

// Gauss-Jordan inverse over an exact field (Rational or QComplex).
template <class F>
std::vector<std::vector<F>> exact_inverse(std::vector<std::vector<F>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<F>> inv(n, std::vector<F>(n, F(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = F(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        F scale = F(1) / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_zero(a[col][j])) a[col][j] = a[col][j] * scale;
            if (!is_zero(inv[col][j])) inv[col][j] = inv[col][j] * scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(a[r][col])) continue;
            F f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                if (!is_zero(a[col][j])) a[r][j] = a[r][j] - f * a[col][j];
                if (!is_zero(inv[col][j])) inv[r][j] = inv[r][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace tilinglab::detail
