#ifndef SUNINV_EXACT_MATRIX_HPP
#define SUNINV_EXACT_MATRIX_HPP

#include "suninv/bigint.hpp"
#include "suninv/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace suninv {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, std::move(fill)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    bool operator==(const Matrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T{}) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    const T& b = rhs(k, j);
                    if (b == T{}) continue;
                    out(i, j) += a * b;
                }
            }
        }
        return out;
    }

    Matrix operator+(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument("Matrix: shape mismatch in sum");
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
        return out;
    }

    Matrix operator-(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument("Matrix: shape mismatch in difference");
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
        return out;
    }

    Matrix operator*(const T& scalar) const {
        Matrix out = *this;
        for (auto& v : out.data_) v *= scalar;
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = (*this)(i, j);
        return out;
    }

    T trace() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: trace of non-square matrix");
        T out{};
        for (std::size_t i = 0; i < rows_; ++i) out += (*this)(i, i);
        return out;
    }

    static Matrix identity(std::size_t n) {
        Matrix out(n, n);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = T{1};
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Rank over the rationals via fraction-free (Bareiss) elimination with full
/// pivoting. Every division is exact, so the result is a certificate, not an
/// estimate. The input is taken by value and consumed.
int bareiss_rank(Matrix<BigInt> m);

/// Rank of a rational matrix; rows are scaled to a common integer denominator
/// (which leaves the rank unchanged) and handed to bareiss_rank.
int exact_rank(const Matrix<Rational>& m);

} // namespace suninv

#endif // SUNINV_EXACT_MATRIX_HPP
