#pragma once

#include <cstddef>
#include <vector>

#include "tricoord/bigint.hpp"
#include "tricoord/bit_bound.hpp"

namespace tricoord {

/// Dense matrix of unbounded integers.
class BigMatrix {
public:
    BigMatrix() : rows_(0), cols_(0) {}
    BigMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static BigMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    BigMatrix mul(const BigMatrix& o) const;
    std::vector<BigInt> mul_vec(const std::vector<BigInt>& v) const;

    /// Rows of this matrix followed by rows of o.
    BigMatrix vstack(const BigMatrix& o) const;

    BigMatrix sub(const BigMatrix& o) const;
    BigMatrix negated() const;

    void append_row(const std::vector<BigInt>& row);

    bool operator==(const BigMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<BigInt> data_;
};

/// Max over entries of log2|entry|; 0 for an all-zero (or empty) matrix.
BitBound bit_bound(const BigMatrix& m);
BitBound bit_bound(const std::vector<BigInt>& v);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const BigMatrix& m);

/// Rank over the rationals, by fraction-free elimination.
std::size_t rank(const BigMatrix& m);

/// Integral basis of the rational kernel, one column per free variable,
/// each column gcd-reduced.
BigMatrix kernel_basis(const BigMatrix& m);

/// k*n + n*log2(n)/2; bounds the determinant of any k-bounded n x n matrix.
BitBound hadamard_bound(const BitBound& k, std::size_t n);

} // namespace tricoord
