#pragma once

#include "hilb/poly.hpp"

#include <vector>

namespace hilb {

// Square (or rectangular) matrix of polynomials, row major.
class PolyMat {
  public:
    PolyMat(size_t rows, size_t cols, const Context& ctx)
        : rows_(rows), cols_(cols), ctx_(ctx), a_(rows * cols, Poly::zero(ctx)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Context& ctx() const { return ctx_; }
    Poly& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Poly& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  private:
    size_t rows_, cols_;
    Context ctx_;
    std::vector<Poly> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
Poly det_bareiss(const PolyMat& m);
// Exact determinant by cofactor expansion along the first row.
Poly det_cofactor(const PolyMat& m);
// Default route (Bareiss).
Poly determinant(const PolyMat& m);

// Rank of a rational matrix by Gaussian elimination.
unsigned rat_rank(std::vector<std::vector<Rat>> m);

} // namespace hilb
