#pragma once

#include <stdexcept>
#include <vector>

#include "hlpp/numeric.hpp"

namespace hlpp {

using RatMatrix = std::vector<std::vector<Rational>>;

// Determinant by fraction-wise Gaussian elimination.
inline Rational rat_det(RatMatrix a) {
    const size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            const Rational f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

// Unique solution of a square system; throws on a singular matrix.
inline std::vector<Rational> rat_solve(RatMatrix a, std::vector<Rational> b) {
    const size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("dimension mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("solve needs a square matrix");
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::domain_error("singular linear system");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

/* Basis of the right kernel via reduced row echelon form.  Each free
 * column yields one basis vector with a unit entry there, so the result
 * is canonical for a given row order. */
inline std::vector<std::vector<Rational>> rat_kernel(RatMatrix a) {
    if (a.empty()) return {};
    const size_t rows = a.size(), cols = a[0].size();
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");

    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const Rational inv = Rational(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<char> is_pivot(cols, 0);
    for (size_t c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<Rational>> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_c] = Rational(1);
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hlpp
