#ifndef CRNID_EXACT_LINALG_HPP
#define CRNID_EXACT_LINALG_HPP

#include <vector>

#include "crnid/rational.hpp"

namespace crnid {

// Dense matrix of exact rationals. Row-major.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Exact rank via Bareiss fraction-free elimination with full pivoting.
int rank_bareiss(const RatMatrix& m);

// Exact rank via Lemma-style minor enumeration (largest s with a nonzero
// s x s minor), determinants by cofactor recursion. Independent of
// rank_bareiss; used to cross-check non-identifiability witnesses.
int rank_by_minors(const RatMatrix& m);

// Exact determinant (square input) by fraction-free elimination.
Rational determinant_exact(const RatMatrix& m);

// Basis of the right nullspace (vectors of length cols()), via Gauss-Jordan
// over Q. Deterministic: free columns in ascending order, free coordinate
// set to 1.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& m);

}  // namespace crnid

#endif
