#include "suninv/exact_matrix.hpp"

namespace suninv {

int bareiss_rank(Matrix<BigInt> m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t steps = rows < cols ? rows : cols;

    BigInt prev_pivot{1};
    std::size_t rank = 0;
    for (std::size_t step = 0; step < steps; ++step) {
        // Full pivot search: first nonzero entry of the trailing submatrix.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = step; i < rows && pr == rows; ++i) {
            for (std::size_t j = step; j < cols; ++j) {
                if (!m(i, j).is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
            }
        }
        if (pr == rows) break;
        m.swap_rows(step, pr);
        m.swap_cols(step, pc);

        const BigInt pivot = m(step, step);
        for (std::size_t i = step + 1; i < rows; ++i) {
            for (std::size_t j = step + 1; j < cols; ++j) {
                // Exact by the Sylvester determinant identity.
                m(i, j) = (m(i, j) * pivot - m(i, step) * m(step, j)) / prev_pivot;
            }
            m(i, step) = BigInt{};
        }
        prev_pivot = pivot;
        ++rank;
    }
    return static_cast<int>(rank);
}

int exact_rank(const Matrix<Rational>& m) {
    Matrix<BigInt> scaled(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt row_den{1};
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const BigInt& den = m(i, j).denominator();
            row_den = row_den / BigInt::gcd(row_den, den) * den;
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& v = m(i, j);
            scaled(i, j) = v.numerator() * (row_den / v.denominator());
        }
    }
    return bareiss_rank(std::move(scaled));
}

} // namespace suninv
