#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "hypersym/bigint.hpp"

namespace hypersym {

// Dense matrix of arbitrary-precision integers, row-major.
class BigIntMatrix {
public:
    BigIntMatrix() = default;
    BigIntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static BigIntMatrix identity(std::size_t n) {
        BigIntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const Int& at(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }
    // row a <- row a + q * row b
    void add_row(std::size_t a, std::size_t b, const Int& q) {
        for (std::size_t j = 0; j < cols_; ++j) at(a, j) += q * at(b, j);
    }
    void add_col(std::size_t a, std::size_t b, const Int& q) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, a) += q * at(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
    }
    void negate_col(std::size_t a) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
    }

    friend BigIntMatrix operator*(const BigIntMatrix& a, const BigIntMatrix& b) {
        assert(a.cols_ == b.rows_);
        BigIntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Int& aik = a.at(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }

    bool operator==(const BigIntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    // Laplace expansion; intended for the small square matrices in tests.
    Int determinant() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

}  // namespace hypersym
