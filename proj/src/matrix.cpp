#include "hilb/matrix.hpp"

namespace hilb {

Poly det_bareiss(const PolyMat& m) {
    if (m.rows() != m.cols()) throw shape_error("determinant of non-square matrix");
    size_t n = m.rows();
    const Context& ctx = m.ctx();
    if (n == 0) return Poly::constant(ctx, 1);
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n, Poly::zero(ctx)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    Poly prev = Poly::constant(ctx, 1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly::zero(ctx); // whole column zero
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = divexact(num, prev);
            }
            a[i][k] = Poly::zero(ctx);
        }
        prev = a[k][k];
    }
    Poly det = a[n - 1][n - 1];
    return sign == 1 ? det : -det;
}

Poly det_cofactor(const PolyMat& m) {
    if (m.rows() != m.cols()) throw shape_error("determinant of non-square matrix");
    size_t n = m.rows();
    const Context& ctx = m.ctx();
    if (n == 0) return Poly::constant(ctx, 1);
    if (n == 1) return m.at(0, 0);
    Poly acc = Poly::zero(ctx);
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMat minor(n - 1, n - 1, ctx);
        for (size_t i = 1; i < n; ++i) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        Poly cof = m.at(0, j) * det_cofactor(minor);
        acc = (j % 2 == 0) ? acc + cof : acc - cof;
    }
    return acc;
}

Poly determinant(const PolyMat& m) { return det_bareiss(m); }

unsigned rat_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    unsigned rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[row][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace hilb
