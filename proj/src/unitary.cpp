#include "suninv/unitary.hpp"

#include "suninv/errors.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace suninv {

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("ComplexMatrix: shape mismatch in product");
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::complex<double> a = (*this)(i, k);
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("ComplexMatrix: shape mismatch in difference");
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
}

double ComplexMatrix::max_abs_entry() const {
    double best = 0.0;
    for (const auto& v : data_) best = std::max(best, std::abs(v));
    return best;
}

namespace {

// Box-Muller over explicit mt19937_64 uniforms; std::normal_distribution is
// implementation-defined and would break seed reproducibility.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 1e-300) u1 = uniform01();
        double u2 = uniform01();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

std::complex<double> determinant(ComplexMatrix m) {
    const std::size_t n = m.rows();
    std::complex<double> det{1.0, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
        if (std::abs(m(pivot, col)) == 0.0) return {0.0, 0.0};
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            std::complex<double> factor = m(r, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(r, j) -= factor * m(col, j);
        }
    }
    return det;
}

} // namespace

ComplexMatrix random_special_unitary(std::size_t dim, std::uint64_t seed) {
    if (dim == 0) throw std::invalid_argument("random_special_unitary: empty dimension");
    GaussianSource gauss{seed};
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            m(i, j) = {gauss.next(), gauss.next()};

    // Modified Gram-Schmidt on columns.
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            std::complex<double> proj{0.0, 0.0};
            for (std::size_t i = 0; i < dim; ++i) proj += std::conj(m(i, prev)) * m(i, c);
            for (std::size_t i = 0; i < dim; ++i) m(i, c) -= proj * m(i, prev);
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < dim; ++i) norm += std::norm(m(i, c));
        norm = std::sqrt(norm);
        if (norm < 1e-12)
            throw std::runtime_error("random_special_unitary: degenerate sample");
        for (std::size_t i = 0; i < dim; ++i) m(i, c) /= norm;
    }

    // The determinant of a unitary is a phase; fold it into the last column.
    std::complex<double> det = determinant(m);
    for (std::size_t i = 0; i < dim; ++i) m(i, dim - 1) /= det;
    return m;
}

ComplexMatrix kronecker_power(const ComplexMatrix& u, int k) {
    ComplexMatrix out(1, 1);
    out(0, 0) = {1.0, 0.0};
    for (int step = 0; step < k; ++step) {
        ComplexMatrix next(out.rows() * u.rows(), out.cols() * u.cols());
        for (std::size_t i = 0; i < out.rows(); ++i)
            for (std::size_t j = 0; j < out.cols(); ++j)
                for (std::size_t r = 0; r < u.rows(); ++r)
                    for (std::size_t c = 0; c < u.cols(); ++c)
                        next(i * u.rows() + r, j * u.cols() + c) = out(i, j) * u(r, c);
        out = std::move(next);
    }
    return out;
}

namespace {

ComplexMatrix dense_complex(const Permutation& rho, const TensorSpaceConfig& cfg) {
    Matrix<Rational> exact = dense_operator(rho, cfg);
    ComplexMatrix out(exact.rows(), exact.cols());
    for (std::size_t i = 0; i < exact.rows(); ++i)
        for (std::size_t j = 0; j < exact.cols(); ++j)
            if (!exact(i, j).is_zero()) out(i, j) = {1.0, 0.0};
    return out;
}

} // namespace

double invariance_deviation(const Permutation& rho, const TensorSpaceConfig& cfg,
                            std::uint64_t seed, bool control_nonproduct) {
    const long dim = cfg.dense_dimension();
    ComplexMatrix big_u =
        control_nonproduct
            ? random_special_unitary(static_cast<std::size_t>(dim), seed)
            : kronecker_power(random_special_unitary(static_cast<std::size_t>(cfg.n_dim), seed),
                              cfg.k);
    ComplexMatrix perm = dense_complex(rho, cfg);
    return (perm * big_u - big_u * perm).max_abs_entry();
}

bool check_unitary_invariance(const Permutation& rho, const TensorSpaceConfig& cfg,
                              std::uint64_t seed, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("check_unitary_invariance: tol must be > 0");
    return invariance_deviation(rho, cfg, seed) < tol;
}

} // namespace suninv
