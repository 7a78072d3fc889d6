#ifndef CRNID_POLY_MATRIX_HPP
#define CRNID_POLY_MATRIX_HPP

#include <span>
#include <string>
#include <vector>

#include "crnid/exact_linalg.hpp"
#include "crnid/polynomial.hpp"

namespace crnid {

// Dense rectangular grid of polynomials on one catalog (zeros explicit).
// Immutable in spirit: built once, then read.
class PolyMatrix {
  public:
    PolyMatrix() = default;
    // All entries initialized to the zero polynomial.
    PolyMatrix(CatalogPtr cat, int rows, int cols, TermOrder ord = {});

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const CatalogPtr& catalog() const { return cat_; }
    const TermOrder& order() const { return ord_; }

    const Polynomial& at(int r, int c) const;
    void set(int r, int c, Polynomial p);

    PolyMatrix transposed() const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;

    // A * v for a polynomial vector v of length cols().
    std::vector<Polynomial> apply(std::span<const Polynomial> v) const;

    bool operator==(const PolyMatrix& o) const;

    RatMatrix evaluate(const RationalPoint& point) const;

  private:
    CatalogPtr cat_;
    TermOrder ord_;
    int rows_ = 0, cols_ = 0;
    std::vector<Polynomial> grid_;
};

// J[i][j] = d f_i / d x_{vars[j]}.
PolyMatrix jacobian(std::span<const Polynomial> f, std::span<const int> vars);

// Symbolic symmetric covariance built from the catalog's p_{ab} variables
// (entry (a,b) with a > b resolves to the upper-triangle variable).
PolyMatrix symbolic_covariance(CatalogPtr cat, int n, TermOrder ord = {});

// Upper-triangle entries (i,j), i <= j, of J P + P J^T + Q in row-major
// order; n(n+1)/2 polynomials. Q must be symmetric as polynomials.
std::vector<Polynomial> lyapunov_residual(const PolyMatrix& J, const PolyMatrix& P,
                                          const PolyMatrix& Q);

// Exact symbolic determinant via Laplace expansion with subset memoization.
Polynomial determinant(const PolyMatrix& m);

// All s x s minors, enumerated lexicographically over (row subset, column
// subset), content-normalized, identical zeros dropped and duplicates (up
// to sign) removed.
std::vector<Polynomial> minors(const PolyMatrix& m, int s);

// Number of s x s minors before zero-dropping/dedup: C(rows,s) * C(cols,s).
unsigned long long minor_count_nominal(const PolyMatrix& m, int s);

// Exact rank of the matrix evaluated at a rational point (Bareiss).
int rank_at_point(const PolyMatrix& m, const RationalPoint& point);

// Aligned plain-text dump; one bracketed row per line.
std::string matrix_to_text(const PolyMatrix& m);

}  // namespace crnid

#endif
