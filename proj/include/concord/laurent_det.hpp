#pragma once

#include <vector>

#include "concord/laurent.hpp"

namespace concord {

template <class K>
using LaurentMatrix = std::vector<std::vector<Laurent<K>>>;

// Determinant of a square matrix over K by fraction-free-enough Gaussian
// elimination (plain field elimination; K is an exact field).
template <class K>
K field_det(std::vector<std::vector<K>> m) {
    const std::size_t n = m.size();
    K det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == K(0)) ++piv;
        if (piv == n) return K(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = K(0) - det;
        }
        det = det * m[col][col];
        K inv = K(1) / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == K(0)) continue;
            K f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
        }
    }
    return det;
}

// Determinant of a matrix of Laurent polynomials, computed exactly by
// shifting each row to nonnegative exponents, evaluating at small integer
// points 1..D+1 (D = sum of per-row maximal degrees after shifting),
// interpolating, and unshifting.  The empty matrix has determinant 1.
template <class K>
Laurent<K> laurent_det(const LaurentMatrix<K>& mat) {
    const std::size_t n = mat.size();
    if (n == 0) return Laurent<K>(K(1));
    for (const auto& row : mat)
        if (row.size() != n) throw std::domain_error("laurent_det needs a square matrix");

    long total_shift = 0;
    long degree_bound = 0;
    LaurentMatrix<K> shifted(n);
    for (std::size_t r = 0; r < n; ++r) {
        long lo = 0, hi = 0;
        bool seen = false;
        for (const auto& p : mat[r]) {
            if (p.is_zero()) continue;
            lo = seen ? std::min(lo, p.lowest()) : p.lowest();
            hi = seen ? std::max(hi, p.highest()) : p.highest();
            seen = true;
        }
        if (!seen) return Laurent<K>();  // zero row
        total_shift += lo;
        degree_bound += hi - lo;
        shifted[r].reserve(n);
        for (const auto& p : mat[r]) shifted[r].push_back(p.shifted(-lo));
    }

    const long points = degree_bound + 1;
    std::vector<K> xs, ys;
    xs.reserve(points);
    ys.reserve(points);
    for (long i = 1; i <= points; ++i) {
        K x(i);
        std::vector<std::vector<K>> num(n, std::vector<K>());
        for (std::size_t r = 0; r < n; ++r) {
            num[r].reserve(n);
            for (std::size_t c = 0; c < n; ++c) num[r].push_back(shifted[r][c].eval(x));
        }
        xs.push_back(x);
        ys.push_back(field_det(std::move(num)));
    }

    // Lagrange interpolation via Newton's divided differences.
    std::vector<K> coef = ys;
    for (long j = 1; j < points; ++j)
        for (long i = points - 1; i >= j; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    Laurent<K> poly;
    for (long i = points - 1; i >= 0; --i) {
        // poly = poly * (t - x_i) + coef[i]
        Laurent<K> factor;
        factor.set(1, K(1));
        factor.set(0, K(0) - xs[i]);
        poly = poly * factor + Laurent<K>(coef[i]);
    }
    return poly.shifted(total_shift);
}

// Cofactor-expansion determinant, the independent cross-check for small
// matrices used by the tests.
template <class K>
Laurent<K> laurent_det_cofactor(const LaurentMatrix<K>& mat) {
    const std::size_t n = mat.size();
    if (n == 0) return Laurent<K>(K(1));
    if (n == 1) return mat[0][0];
    Laurent<K> acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (mat[0][j].is_zero()) continue;
        LaurentMatrix<K> minor(n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor[r - 1].push_back(mat[r][c]);
        Laurent<K> term = mat[0][j] * laurent_det_cofactor(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace concord
