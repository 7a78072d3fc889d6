#include "crnid/exact_linalg.hpp"

#include <algorithm>

#include "crnid/error.hpp"

namespace crnid {

namespace {

// Clears denominators row by row and returns integer entries; scaling rows
// by positive constants changes neither rank nor nullspace support.
std::vector<std::vector<Integer>> to_integer_rows(const RatMatrix& m) {
    std::vector<std::vector<Integer>> a(static_cast<size_t>(m.rows()), std::vector<Integer>(static_cast<size_t>(m.cols())));
    for (int r = 0; r < m.rows(); ++r) {
        Integer l(1);
        for (int c = 0; c < m.cols(); ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
        for (int c = 0; c < m.cols(); ++c) {
            Rational v = m.at(r, c) * l;
            a[size_t(r)][size_t(c)] = v.get_num();
        }
    }
    return a;
}

}  // namespace

int rank_bareiss(const RatMatrix& m) {
    auto a = to_integer_rows(m);
    int rows = m.rows(), cols = m.cols();
    int rank = 0;
    Integer prev(1);
    for (int step = 0; rank < rows && rank < cols; ++step) {
        // Full pivoting: smallest nonzero entry by bit size keeps the
        // fraction-free products small.
        int pr = -1, pc = -1;
        size_t best = 0;
        for (int r = rank; r < rows; ++r)
            for (int c = rank; c < cols; ++c) {
                if (a[size_t(r)][size_t(c)] == 0) continue;
                size_t bits = mpz_sizeinbase(a[size_t(r)][size_t(c)].get_mpz_t(), 2);
                if (pr < 0 || bits < best) {
                    pr = r;
                    pc = c;
                    best = bits;
                }
            }
        if (pr < 0) break;
        std::swap(a[size_t(pr)], a[size_t(rank)]);
        if (pc != rank)
            for (int r = 0; r < rows; ++r) std::swap(a[size_t(r)][size_t(pc)], a[size_t(r)][size_t(rank)]);

        const Integer pivot = a[size_t(rank)][size_t(rank)];
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = rank + 1; c < cols; ++c) {
                Integer t = a[size_t(r)][size_t(c)] * pivot - a[size_t(r)][size_t(rank)] * a[size_t(rank)][size_t(c)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[size_t(r)][size_t(c)] = t;
            }
            a[size_t(r)][size_t(rank)] = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

namespace {

Rational det_cofactor(const RatMatrix& m, std::vector<int>& rows, std::vector<int>& cols) {
    size_t n = rows.size();
    if (n == 1) return m.at(rows[0], cols[0]);
    Rational acc(0);
    int sign = 1;
    int top = rows.front();
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < n; ++j) {
        const Rational& entry = m.at(top, cols[j]);
        if (entry != 0) {
            std::vector<int> sub_cols;
            sub_cols.reserve(n - 1);
            for (size_t t = 0; t < n; ++t)
                if (t != j) sub_cols.push_back(cols[t]);
            Rational d = det_cofactor(m, sub_rows, sub_cols);
            acc += Rational(sign) * entry * d;
        }
        sign = -sign;
    }
    return acc;
}

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

}  // namespace

int rank_by_minors(const RatMatrix& m) {
    int maxs = std::min(m.rows(), m.cols());
    for (int s = maxs; s >= 1; --s) {
        std::vector<int> rsel(static_cast<size_t>(s));
        for (int i = 0; i < s; ++i) rsel[size_t(i)] = i;
        do {
            std::vector<int> csel(static_cast<size_t>(s));
            for (int i = 0; i < s; ++i) csel[size_t(i)] = i;
            do {
                if (det_cofactor(m, rsel, csel) != 0) return s;
            } while (next_combination(csel, m.cols()));
        } while (next_combination(rsel, m.rows()));
    }
    return 0;
}

Rational determinant_exact(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
    if (m.rows() == 0) return Rational(1);
    std::vector<int> rows(static_cast<size_t>(m.rows()));
    std::vector<int> cols(static_cast<size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) rows[size_t(i)] = cols[size_t(i)] = i;
    return det_cofactor(m, rows, cols);
}

std::vector<std::vector<Rational>> nullspace(const RatMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    // Reduced row echelon form over Q.
    std::vector<std::vector<Rational>> a(static_cast<size_t>(rows), std::vector<Rational>(static_cast<size_t>(cols)));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) a[size_t(r)][size_t(c)] = m.at(r, c);

    std::vector<int> pivot_col;
    int lead = 0;
    for (int c = 0; c < cols && lead < rows; ++c) {
        int pr = -1;
        for (int r = lead; r < rows; ++r)
            if (a[size_t(r)][size_t(c)] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[size_t(pr)], a[size_t(lead)]);
        Rational inv = Rational(1) / a[size_t(lead)][size_t(c)];
        for (int t = c; t < cols; ++t) a[size_t(lead)][size_t(t)] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == lead || a[size_t(r)][size_t(c)] == 0) continue;
            Rational f = a[size_t(r)][size_t(c)];
            for (int t = c; t < cols; ++t) a[size_t(r)][size_t(t)] -= f * a[size_t(lead)][size_t(t)];
        }
        pivot_col.push_back(c);
        ++lead;
    }

    std::vector<bool> is_pivot(size_t(cols), false);
    for (int c : pivot_col) is_pivot[size_t(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[size_t(free_c)]) continue;
        std::vector<Rational> v(size_t(cols), Rational(0));
        v[size_t(free_c)] = 1;
        for (size_t pi = 0; pi < pivot_col.size(); ++pi)
            v[size_t(pivot_col[pi])] = -a[pi][size_t(free_c)];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace crnid
