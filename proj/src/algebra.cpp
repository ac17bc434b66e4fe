#include "suninv/algebra.hpp"

#include "suninv/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace suninv {

long TensorSpaceConfig::dense_dimension() const {
    if (n_dim < 1) throw std::invalid_argument("TensorSpaceConfig: N must be >= 1");
    if (k < 0) throw std::invalid_argument("TensorSpaceConfig: k must be >= 0");
    long dim = 1;
    for (int i = 0; i < k; ++i) {
        dim *= n_dim;
        if (dim > dense_budget)
            throw capacity_error("dense operator: N^k exceeds the dense budget " +
                                 std::to_string(dense_budget));
    }
    return dim;
}

AlgebraElement AlgebraElement::basis(const Permutation& rho) {
    AlgebraElement out{rho.degree()};
    out.add_term(rho, Rational{1});
    return out;
}

void AlgebraElement::add_term(const Permutation& rho, const Rational& coefficient) {
    if (rho.degree() != degree_)
        throw degree_mismatch("AlgebraElement: term degree differs from element degree");
    auto it = terms_.find(rho);
    if (it == terms_.end()) {
        if (!coefficient.is_zero()) terms_.emplace(rho, coefficient);
        return;
    }
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
    if (degree_ != rhs.degree_)
        throw degree_mismatch("AlgebraElement: degrees differ in sum");
    AlgebraElement out = *this;
    for (const auto& [rho, coeff] : rhs.terms_) out.add_term(rho, coeff);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
    if (degree_ != rhs.degree_)
        throw degree_mismatch("AlgebraElement: degrees differ in difference");
    AlgebraElement out = *this;
    for (const auto& [rho, coeff] : rhs.terms_) out.add_term(rho, -coeff);
    return out;
}

AlgebraElement AlgebraElement::operator*(const Rational& scalar) const {
    AlgebraElement out{degree_};
    if (scalar.is_zero()) return out;
    for (const auto& [rho, coeff] : terms_) out.add_term(rho, coeff * scalar);
    return out;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [rho, coeff] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (coeff != Rational{1}) os << coeff.to_string() << "*";
        os << "[" << format_permutation(rho) << "]";
    }
    return os.str();
}

BigInt inner_product(const Permutation& a, const Permutation& b, int n_dim) {
    Permutation relative = compose(inverse(a), b);
    return BigInt::pow(BigInt{n_dim},
                       static_cast<unsigned long>(cycle_count(relative)));
}

Rational inner_product(const AlgebraElement& a, const AlgebraElement& b, int n_dim) {
    if (a.degree() != b.degree())
        throw degree_mismatch("inner_product: degrees differ");
    Rational total;
    for (const auto& [rho, alpha] : a.terms())
        for (const auto& [tau, beta] : b.terms())
            total += alpha * beta * Rational{inner_product(rho, tau, n_dim)};
    return total;
}

AlgebraElement adjoint(const AlgebraElement& x) {
    AlgebraElement out{x.degree()};
    for (const auto& [rho, coeff] : x.terms()) out.add_term(inverse(rho), coeff);
    return out;
}

std::pair<std::vector<AlgebraElement>, std::vector<AlgebraElement>>
split_hermitian_basis(int k, int cap) {
    std::vector<AlgebraElement> hermitian, anti;
    for_each_permutation(
        k,
        [&](const Permutation& rho) {
            Permutation inv = inverse(rho);
            if (inv == rho) {
                hermitian.push_back(AlgebraElement::basis(rho));
            } else if (rho < inv) {
                // Lexicographically smaller member represents the pair.
                hermitian.push_back(AlgebraElement::basis(rho) + AlgebraElement::basis(inv));
                anti.push_back(AlgebraElement::basis(rho) - AlgebraElement::basis(inv));
            }
        },
        cap);
    return {std::move(hermitian), std::move(anti)};
}

GramMatrix gram_matrix(const std::vector<AlgebraElement>& basis, int n_dim) {
    GramMatrix g;
    g.n_dim = n_dim;
    const std::size_t n = basis.size();
    for (std::size_t i = 1; i < n; ++i) {
        if (basis[i].degree() != basis[0].degree())
            throw degree_mismatch("gram_matrix: basis elements have mixed degrees");
    }
    g.entries = Matrix<Rational>(n, n);
    g.basis_labels.reserve(n);
    for (const auto& element : basis) g.basis_labels.push_back(element.to_string());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Rational value = inner_product(basis[i], basis[j], n_dim);
            g.entries(i, j) = value;
            g.entries(j, i) = value; // rational coefficients: symmetric
        }
    }
    return g;
}

int exact_rank(const GramMatrix& g) { return exact_rank(g.entries); }

Matrix<Rational> dense_operator(const Permutation& rho, const TensorSpaceConfig& cfg) {
    if (rho.degree() != cfg.k)
        throw degree_mismatch("dense_operator: permutation degree differs from cfg.k");
    const long dim = cfg.dense_dimension();
    const int n = cfg.n_dim;
    const int k = cfg.k;
    Matrix<Rational> out(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    std::vector<int> digits(static_cast<std::size_t>(k), 0);
    for (long col = 0; col < dim; ++col) {
        // Column multi-index (j_1..j_k), first factor most significant.
        long rest = col;
        for (int t = k - 1; t >= 0; --t) {
            digits[static_cast<std::size_t>(t)] = static_cast<int>(rest % n);
            rest /= n;
        }
        // Row with i_rho(t) = j_t for all t.
        long row = 0;
        std::vector<int> row_digits(static_cast<std::size_t>(k), 0);
        for (int t = 1; t <= k; ++t)
            row_digits[static_cast<std::size_t>(rho(t) - 1)] =
                digits[static_cast<std::size_t>(t - 1)];
        for (int t = 0; t < k; ++t) row = row * n + row_digits[static_cast<std::size_t>(t)];
        out(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) = Rational{1};
    }
    return out;
}

Matrix<Rational> dense_operator(const AlgebraElement& x, const TensorSpaceConfig& cfg) {
    if (x.degree() != cfg.k)
        throw degree_mismatch("dense_operator: element degree differs from cfg.k");
    const long dim = cfg.dense_dimension();
    Matrix<Rational> out(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (const auto& [rho, coeff] : x.terms()) {
        Matrix<Rational> term = dense_operator(rho, cfg);
        out = out + term * coeff;
    }
    return out;
}

} // namespace suninv
