#ifndef SUNINV_ALGEBRA_HPP
#define SUNINV_ALGEBRA_HPP

#include "suninv/bigint.hpp"
#include "suninv/exact_matrix.hpp"
#include "suninv/permutation.hpp"
#include "suninv/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace suninv {

/// Dimension parameters for the tensor space V^(tensor k), dim V = N.
/// dense_budget bounds the side length N^k of any dense matrix built here.
struct TensorSpaceConfig {
    int n_dim = 2;
    int k = 1;
    long dense_budget = 4096;

    /// N^k, guarded against the budget. Throws capacity_error.
    long dense_dimension() const;
};

/// Formal linear combination of permutations of a fixed degree with exact
/// rational coefficients. Zero coefficients are never stored; the degree is
/// pinned at construction so mixed-degree sums fail loudly.
class AlgebraElement {
public:
    explicit AlgebraElement(int degree) : degree_(degree) {}

    /// A single permutation with coefficient 1.
    static AlgebraElement basis(const Permutation& rho);

    int degree() const { return degree_; }
    const std::map<Permutation, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Permutation& rho, const Rational& coefficient);

    AlgebraElement operator+(const AlgebraElement& rhs) const;
    AlgebraElement operator-(const AlgebraElement& rhs) const;
    AlgebraElement operator*(const Rational& scalar) const;

    bool operator==(const AlgebraElement& rhs) const {
        return degree_ == rhs.degree_ && terms_ == rhs.terms_;
    }

    std::string to_string() const;

private:
    int degree_;
    std::map<Permutation, Rational> terms_;
};

/// <a|b> = tr(a^dagger b) = N^(number of cycles of a^-1 b). Exact; symmetric
/// in its arguments. Throws degree_mismatch.
BigInt inner_product(const Permutation& a, const Permutation& b, int n_dim);

/// Bilinear extension with the adjoint on the left slot (coefficients are
/// rational, hence self-conjugate).
Rational inner_product(const AlgebraElement& a, const AlgebraElement& b, int n_dim);

/// Hermitian conjugate: each permutation replaced by its inverse.
AlgebraElement adjoint(const AlgebraElement& x);

/// Basis split of the group algebra into Hermitian and anti-Hermitian parts:
/// every involution rho stays as itself; every non-Hermitian conjugate pair
/// {rho, rho^-1} contributes rho + rho^-1 to the Hermitian list and
/// rho - rho^-1 to the anti-Hermitian list. Pair representatives are the
/// lexicographically smaller member; list order follows the enumeration.
std::pair<std::vector<AlgebraElement>, std::vector<AlgebraElement>>
split_hermitian_basis(int k, int cap = kDefaultEnumerationCap);

/// Gram matrix of a basis under the invariant scalar product, with the basis
/// rendering kept alongside for reporting. Entries are exact (integral for
/// every integer-coefficient basis).
struct GramMatrix {
    std::vector<std::string> basis_labels;
    Matrix<Rational> entries;
    int n_dim = 0;
};

GramMatrix gram_matrix(const std::vector<AlgebraElement>& basis, int n_dim);

int exact_rank(const GramMatrix& g);

/// Dense matrix of x acting on V^(tensor k): a permutation rho maps the
/// basis tensor with column multi-index (j_1..j_k) to the one with row
/// multi-index satisfying i_rho(t) = j_t for all t. Multi-indices are
/// flattened base N with the first factor most significant.
Matrix<Rational> dense_operator(const AlgebraElement& x, const TensorSpaceConfig& cfg);
Matrix<Rational> dense_operator(const Permutation& rho, const TensorSpaceConfig& cfg);

} // namespace suninv

#endif // SUNINV_ALGEBRA_HPP
