#include <doctest.h>

#include "suninv/exact_matrix.hpp"

#include <random>

using suninv::BigInt;
using suninv::Matrix;
using suninv::Rational;

namespace {

// Independent rank oracle: plain Gauss elimination over the rationals.
int rational_gauss_rank(Matrix<Rational> m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = m.rows();
        for (std::size_t r = rank; r < m.rows(); ++r) {
            if (!m(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == m.rows()) continue;
        m.swap_rows(rank, pivot);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (m(r, col).is_zero()) continue;
            Rational factor = m(r, col) / m(rank, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) -= factor * m(rank, c);
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

Matrix<Rational> to_rational(const Matrix<BigInt>& m) {
    Matrix<Rational> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational{m(i, j)};
    return out;
}

} // namespace

TEST_SUITE_BEGIN("exact_matrix");

TEST_CASE("hand-checked ranks") {
    Matrix<BigInt> zero(3, 3);
    CHECK(suninv::bareiss_rank(zero) == 0);

    Matrix<BigInt> id = Matrix<BigInt>::identity(4);
    CHECK(suninv::bareiss_rank(id) == 4);

    // rows 0 and 2 proportional
    Matrix<BigInt> m(3, 3);
    int values[3][3] = {{1, 2, 3}, {4, 5, 6}, {2, 4, 6}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = BigInt{values[i][j]};
    CHECK(suninv::bareiss_rank(m) == 2);

    // zero leading column forces the pivot search sideways
    Matrix<BigInt> shifted(2, 3);
    shifted(0, 1) = BigInt{7};
    shifted(1, 2) = BigInt{5};
    CHECK(suninv::bareiss_rank(shifted) == 2);
}

TEST_CASE("non-square and degenerate shapes") {
    Matrix<BigInt> wide(2, 5);
    wide(0, 0) = BigInt{1};
    wide(1, 0) = BigInt{2};
    CHECK(suninv::bareiss_rank(wide) == 1);
    CHECK(suninv::bareiss_rank(Matrix<BigInt>(0, 0)) == 0);
    CHECK(suninv::bareiss_rank(Matrix<BigInt>(3, 0)) == 0);
}

TEST_CASE("random matrices agree with the rational-elimination oracle") {
    std::mt19937_64 rng{5150};
    for (int round = 0; round < 120; ++round) {
        std::size_t rows = 1 + rng() % 7;
        std::size_t cols = 1 + rng() % 7;
        Matrix<BigInt> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = BigInt{static_cast<std::int64_t>(rng() % 7) - 3};
        // Half the rounds: plant an extra dependent row.
        if (rows >= 2 && (rng() & 1)) {
            for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * BigInt{2};
        }
        CHECK(suninv::bareiss_rank(m) == rational_gauss_rank(to_rational(m)));
    }
}

TEST_CASE("rational rank clears denominators row by row") {
    Matrix<Rational> m(2, 2);
    m(0, 0) = Rational{BigInt{1}, BigInt{2}};
    m(0, 1) = Rational{BigInt{1}, BigInt{3}};
    m(1, 0) = Rational{BigInt{3}, BigInt{2}};
    m(1, 1) = Rational{BigInt{1}, BigInt{1}};
    CHECK(suninv::exact_rank(m) == 1);
    m(1, 1) = Rational{BigInt{2}, BigInt{1}};
    CHECK(suninv::exact_rank(m) == 2);
}

TEST_CASE("entries large enough to overflow built-in integers") {
    // Hilbert-like structure scaled huge; rank must still certify exactly.
    Matrix<BigInt> m(4, 4);
    BigInt scale = BigInt::pow(BigInt{10}, 25);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            m(i, j) = scale / BigInt{static_cast<std::int64_t>(i + j + 1)};
    CHECK(suninv::bareiss_rank(m) == 4);
}

TEST_CASE("matrix product and trace") {
    Matrix<BigInt> a(2, 2), b(2, 2);
    a(0, 0) = BigInt{1};
    a(0, 1) = BigInt{2};
    a(1, 0) = BigInt{3};
    a(1, 1) = BigInt{4};
    b(0, 0) = BigInt{5};
    b(0, 1) = BigInt{6};
    b(1, 0) = BigInt{7};
    b(1, 1) = BigInt{8};
    Matrix<BigInt> c = a * b;
    CHECK(c(0, 0) == BigInt{19});
    CHECK(c(0, 1) == BigInt{22});
    CHECK(c(1, 0) == BigInt{43});
    CHECK(c(1, 1) == BigInt{50});
    CHECK(c.trace() == BigInt{69});
    CHECK(a.transpose().transpose() == a);
}

TEST_SUITE_END();
