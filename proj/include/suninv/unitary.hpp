#ifndef SUNINV_UNITARY_HPP
#define SUNINV_UNITARY_HPP

#include "suninv/algebra.hpp"
#include "suninv/permutation.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace suninv {

/// Row-major complex matrix; the only floating-point corner of the project.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::complex<double>& operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const std::complex<double>& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;

    double max_abs_entry() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::complex<double>> data_;
};

/// Deterministic special unitary: a seeded complex Gaussian matrix (mt19937_64
/// Box-Muller), orthonormalized column by column, with the last column
/// rescaled by 1/det so the determinant is exactly one up to rounding.
ComplexMatrix random_special_unitary(std::size_t dim, std::uint64_t seed);

/// U^(tensor k) on the flattened product basis (same flattening as
/// dense_operator).
ComplexMatrix kronecker_power(const ComplexMatrix& u, int k);

/// max |(rho U - U rho)_{ij}| where U is the k-fold product of
/// random_special_unitary(N, seed). With control_nonproduct set, U is instead
/// drawn directly at dimension N^k, which fails to commute with every
/// non-identity permutation.
double invariance_deviation(const Permutation& rho, const TensorSpaceConfig& cfg,
                            std::uint64_t seed, bool control_nonproduct = false);

/// True iff invariance_deviation(rho, cfg, seed) < tol.
bool check_unitary_invariance(const Permutation& rho, const TensorSpaceConfig& cfg,
                              std::uint64_t seed, double tol);

} // namespace suninv

#endif // SUNINV_UNITARY_HPP
