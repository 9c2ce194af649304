#pragma once

#include "foldseq/rational.hpp"

#include <vector>

namespace fsq {

// Dense big-integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const BigInt& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const;
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    QVec apply(const QVec& v) const;            // M v
    QVec apply_transpose(const QVec& v) const;  // M^T v
    QVec column(int c) const;
    QVec row(int r) const;
    BigInt max_entry() const;
    BigInt column_sum(int c) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> a_;
};

// Rank of a set of rational vectors (exact Gaussian elimination).
int rational_rank(const std::vector<QVec>& vectors);

// Solve sum_j c_j basis[j] = target exactly. Returns false when inconsistent.
// basis vectors must be linearly independent.
bool solve_combination(const std::vector<QVec>& basis, const QVec& target, QVec& coeffs);

// Exact inverse of a square integer matrix with determinant +-1.
bool unimodular_inverse(const IntMatrix& m, IntMatrix& inv);

}  // namespace fsq
