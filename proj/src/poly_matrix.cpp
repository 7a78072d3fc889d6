#include "crnid/poly_matrix.hpp"

#include <algorithm>
#include <unordered_map>

#include "crnid/error.hpp"
#include "crnid/poly_text.hpp"

namespace crnid {

PolyMatrix::PolyMatrix(CatalogPtr cat, int rows, int cols, TermOrder ord)
    : cat_(std::move(cat)), ord_(ord), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    grid_.assign(size_t(rows) * size_t(cols), Polynomial::zero(cat_, ord_));
}

const Polynomial& PolyMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DimensionError("matrix index out of range");
    return grid_[size_t(r) * size_t(cols_) + size_t(c)];
}

void PolyMatrix::set(int r, int c, Polynomial p) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DimensionError("matrix index out of range");
    if (!compatible(cat_, p.catalog())) throw CatalogMismatchError("matrix entry on a different catalog");
    grid_[size_t(r) * size_t(cols_) + size_t(c)] = std::move(p);
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix t(cat_, cols_, rows_, ord_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in +");
    PolyMatrix s(cat_, rows_, cols_, ord_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) s.set(r, c, at(r, c) + o.at(r, c));
    return s;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix shape mismatch in *");
    PolyMatrix p(cat_, rows_, o.cols_, ord_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < o.cols_; ++c) {
            Polynomial acc = Polynomial::zero(cat_, ord_);
            for (int t = 0; t < cols_; ++t) acc = acc + at(r, t) * o.at(t, c);
            p.set(r, c, std::move(acc));
        }
    return p;
}

std::vector<Polynomial> PolyMatrix::apply(std::span<const Polynomial> v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionError("vector length mismatch in apply");
    std::vector<Polynomial> out;
    out.reserve(size_t(rows_));
    for (int r = 0; r < rows_; ++r) {
        Polynomial acc = Polynomial::zero(cat_, ord_);
        for (int c = 0; c < cols_; ++c) acc = acc + at(r, c) * v[size_t(c)];
        out.push_back(std::move(acc));
    }
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!(at(r, c) == o.at(r, c))) return false;
    return true;
}

RatMatrix PolyMatrix::evaluate(const RationalPoint& point) const {
    RatMatrix m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c).evaluate(point);
    return m;
}

PolyMatrix jacobian(std::span<const Polynomial> f, std::span<const int> vars) {
    if (f.empty()) throw DimensionError("jacobian of an empty system");
    if (f.size() != vars.size())
        throw DimensionError("jacobian needs as many state variables as equations");
    CatalogPtr cat = f[0].catalog();
    TermOrder ord = f[0].order();
    int n = static_cast<int>(f.size());
    PolyMatrix J(cat, n, n, ord);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) J.set(i, j, f[size_t(i)].derivative(vars[size_t(j)]));
    return J;
}

PolyMatrix symbolic_covariance(CatalogPtr cat, int n, TermOrder ord) {
    PolyMatrix P(cat, n, n, ord);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            int lo = std::min(a, b), hi = std::max(a, b);
            int idx = -1;
            for (int i = 0; i < cat->size(); ++i) {
                const VarInfo& v = cat->var(i);
                if ((v.role == VarRole::Covariance) && v.a == lo && v.b == hi) {
                    idx = i;
                    break;
                }
            }
            if (idx < 0)
                throw UnknownVariableError("catalog lacks covariance variable p_" +
                                           std::to_string(lo) + std::to_string(hi));
            P.set(a - 1, b - 1, Polynomial::variable(cat, idx, ord));
        }
    return P;
}

std::vector<Polynomial> lyapunov_residual(const PolyMatrix& J, const PolyMatrix& P,
                                          const PolyMatrix& Q) {
    int n = J.rows();
    if (J.cols() != n || Q.rows() != n || Q.cols() != n || P.rows() != n || P.cols() != n)
        throw DimensionError("lyapunov_residual needs square n x n inputs");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(Q.at(i, j) == Q.at(j, i)))
                throw PreconditionError("diffusion matrix is not symmetric");
    PolyMatrix JP = J * P;
    PolyMatrix R = JP + JP.transposed() + Q;
    std::vector<Polynomial> out;
    out.reserve(size_t(n) * (n + 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) out.push_back(R.at(i, j));
    return out;
}

namespace {

// Laplace expansion along the last column of the frame prefix, memoized on
// the row subset. Within one column frame every det of rows S uses columns
// frame[0..|S|-1], so the mask identifies the subproblem.
class FrameDet {
  public:
    FrameDet(const PolyMatrix& m, std::vector<int> frame_cols)
        : m_(m), cols_(std::move(frame_cols)) {
        memo_[0] = Polynomial::constant(m_.catalog(), Rational(1), m_.order());
    }

    const Polynomial& det(unsigned long long row_mask) {
        auto it = memo_.find(row_mask);
        if (it != memo_.end()) return it->second;
        std::vector<int> rows;
        for (int r = 0; r < m_.rows(); ++r)
            if (row_mask >> r & 1) rows.push_back(r);
        int j = static_cast<int>(rows.size()) - 1;
        Polynomial acc = Polynomial::zero(m_.catalog(), m_.order());
        int sign = (j % 2 == 0) ? 1 : -1;
        for (size_t t = 0; t < rows.size(); ++t) {
            const Polynomial& entry = m_.at(rows[t], cols_[size_t(j)]);
            if (!entry.is_zero()) {
                const Polynomial& sub = det(row_mask & ~(1ull << rows[t]));
                if (!sub.is_zero()) {
                    Polynomial contrib = entry * sub;
                    acc = (sign > 0) ? acc + contrib : acc - contrib;
                }
            }
            sign = -sign;
        }
        return memo_.emplace(row_mask, std::move(acc)).first->second;
    }

  private:
    const PolyMatrix& m_;
    std::vector<int> cols_;
    std::unordered_map<unsigned long long, Polynomial> memo_;
};

bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[size_t(i)] < n - (k - i)) {
            ++idx[size_t(i)];
            for (int j = i + 1; j < k; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / i;
    return r;
}

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
    if (m.rows() == 0) return Polynomial::constant(m.catalog(), Rational(1), m.order());
    if (m.rows() > 62) throw DimensionError("determinant limited to 62 rows");
    std::vector<int> cols(static_cast<size_t>(m.cols()));
    for (int i = 0; i < m.cols(); ++i) cols[size_t(i)] = i;
    FrameDet fd(m, cols);
    return fd.det((1ull << m.rows()) - 1);
}

std::vector<Polynomial> minors(const PolyMatrix& m, int s) {
    if (s < 1 || s > std::min(m.rows(), m.cols()))
        throw PreconditionError("minor size out of range");
    if (m.rows() > 62) throw DimensionError("minor enumeration limited to 62 rows");

    // One memo table per column frame, shared across all row subsets.
    std::vector<std::vector<int>> frames;
    std::vector<int> csel(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) csel[size_t(i)] = i;
    do {
        frames.push_back(csel);
    } while (next_combination(csel, m.cols()));
    std::vector<FrameDet> tables;
    tables.reserve(frames.size());
    for (auto& f : frames) tables.emplace_back(m, f);

    std::vector<Polynomial> out;
    std::vector<Polynomial> seen;  // content-normalized, positive leading coeff
    std::vector<int> rsel(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) rsel[size_t(i)] = i;
    do {
        unsigned long long mask = 0;
        for (int r : rsel) mask |= 1ull << r;
        for (auto& table : tables) {
            const Polynomial& d = table.det(mask);
            if (d.is_zero()) continue;
            Polynomial canon = d.content_normalized();
            bool dup = false;
            for (const Polynomial& p : seen)
                if (p == canon) {
                    dup = true;
                    break;
                }
            if (!dup) {
                seen.push_back(canon);
                out.push_back(std::move(canon));
            }
        }
    } while (next_combination(rsel, m.rows()));
    return out;
}

unsigned long long minor_count_nominal(const PolyMatrix& m, int s) {
    return binomial(m.rows(), s) * binomial(m.cols(), s);
}

int rank_at_point(const PolyMatrix& m, const RationalPoint& point) {
    return rank_bareiss(m.evaluate(point));
}

std::string matrix_to_text(const PolyMatrix& m) {
    std::vector<std::string> cell(size_t(m.rows()) * size_t(m.cols()));
    std::vector<size_t> width(size_t(m.cols()), 0);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            std::string s = to_string(m.at(r, c));
            width[size_t(c)] = std::max(width[size_t(c)], s.size());
            cell[size_t(r) * size_t(m.cols()) + size_t(c)] = std::move(s);
        }
    std::string out;
    for (int r = 0; r < m.rows(); ++r) {
        out += "[ ";
        for (int c = 0; c < m.cols(); ++c) {
            const std::string& s = cell[size_t(r) * size_t(m.cols()) + size_t(c)];
            out.append(width[size_t(c)] - s.size(), ' ');
            out += s;
            out += (c + 1 < m.cols()) ? "  " : " ";
        }
        out += "]\n";
    }
    return out;
}

}  // namespace crnid
