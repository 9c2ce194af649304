#include "foldseq/matrix.hpp"

namespace fsq {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) fail(ErrorKind::Argument, "matrix dimension mismatch");
    IntMatrix p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& x = at(r, k);
            if (x == 0) continue;
            for (int c = 0; c < o.cols_; ++c) {
                const BigInt& y = o.at(k, c);
                if (y != 0) mpz_addmul(p.at(r, c).get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            }
        }
    return p;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

QVec IntMatrix::apply(const QVec& v) const {
    if (static_cast<int>(v.size()) != cols_) fail(ErrorKind::Argument, "vector dimension mismatch");
    QVec out(rows_);
    for (int r = 0; r < rows_; ++r) {
        Rational s = 0;
        for (int c = 0; c < cols_; ++c)
            if (at(r, c) != 0) s += Rational(at(r, c)) * v[c];
        out[r] = s;
    }
    return out;
}

QVec IntMatrix::apply_transpose(const QVec& v) const {
    if (static_cast<int>(v.size()) != rows_) fail(ErrorKind::Argument, "vector dimension mismatch");
    QVec out(cols_);
    for (int c = 0; c < cols_; ++c) {
        Rational s = 0;
        for (int r = 0; r < rows_; ++r)
            if (at(r, c) != 0) s += Rational(at(r, c)) * v[r];
        out[c] = s;
    }
    return out;
}

QVec IntMatrix::column(int c) const {
    QVec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

QVec IntMatrix::row(int r) const {
    QVec v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

BigInt IntMatrix::max_entry() const {
    BigInt m = 0;
    for (const auto& x : a_)
        if (x > m) m = x;
    return m;
}

BigInt IntMatrix::column_sum(int c) const {
    BigInt s = 0;
    for (int r = 0; r < rows_; ++r) s += abs(at(r, c));
    return s;
}

namespace {

// Row-reduce in place; returns the pivot columns.
std::vector<int> row_reduce(std::vector<QVec>& rows, int ncols) {
    std::vector<int> pivots;
    size_t pr = 0;
    for (int c = 0; c < ncols && pr < rows.size(); ++c) {
        size_t sel = pr;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pr], rows[sel]);
        Rational inv = 1 / rows[pr][c];
        for (auto& x : rows[pr]) x *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pr || rows[r][c] == 0) continue;
            Rational f = rows[r][c];
            for (int k = c; k < static_cast<int>(rows[r].size()); ++k) rows[r][k] -= f * rows[pr][k];
        }
        pivots.push_back(c);
        ++pr;
    }
    return pivots;
}

}  // namespace

int rational_rank(const std::vector<QVec>& vectors) {
    if (vectors.empty()) return 0;
    std::vector<QVec> rows = vectors;
    return static_cast<int>(row_reduce(rows, static_cast<int>(rows[0].size())).size());
}

bool solve_combination(const std::vector<QVec>& basis, const QVec& target, QVec& coeffs) {
    // Augmented system: rows indexed by coordinates, columns by basis vectors.
    const int k = static_cast<int>(basis.size());
    const int d = static_cast<int>(target.size());
    std::vector<QVec> rows(d, QVec(k + 1));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < k; ++j) rows[i][j] = basis[j][i];
        rows[i][k] = target[i];
    }
    auto piv = row_reduce(rows, k + 1);
    coeffs.assign(k, 0);
    for (size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == k) return false;
        coeffs[piv[r]] = rows[r][k];
    }
    return static_cast<int>(piv.size()) == k;
}

bool unimodular_inverse(const IntMatrix& m, IntMatrix& inv) {
    const int n = m.rows();
    if (n != m.cols()) return false;
    std::vector<QVec> rows(n, QVec(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
        rows[i][n + i] = 1;
    }
    auto piv = row_reduce(rows, n);
    if (static_cast<int>(piv.size()) != n) return false;
    inv = IntMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& x = rows[i][n + j];
            if (x.get_den() != 1) return false;
            inv.at(i, j) = x.get_num();
        }
    return true;
}

}  // namespace fsq
