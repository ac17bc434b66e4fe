#ifndef SUNINV_RS_HPP
#define SUNINV_RS_HPP

#include "suninv/permutation.hpp"
#include "suninv/tableaux.hpp"

#include <string>
#include <vector>

namespace suninv {

/// An element of Y_k^{PQ}: two standard tableaux of the same shape.
struct TableauPair {
    StandardTableau p;
    StandardTableau q;

    TableauPair() = default;
    TableauPair(StandardTableau p_in, StandardTableau q_in);

    bool operator==(const TableauPair& rhs) const { return p == rhs.p && q == rhs.q; }
    bool operator!=(const TableauPair& rhs) const { return !(*this == rhs); }
    bool operator<(const TableauPair& rhs) const {
        return p < rhs.p || (p == rhs.p && q < rhs.q);
    }

    /// "P=<tableau> | Q=<tableau>"
    std::string to_string() const;
};

/// Robinson-Schensted row insertion: inserts rho(1), ..., rho(k) into P and
/// records in Q, at step t, the box that insertion created (with entry t).
TableauPair rs_map(const Permutation& rho);

/// Reverse bumping; total inverse of rs_map. Throws std::invalid_argument if
/// the pair does not satisfy the equal-shape invariant.
Permutation rs_inverse(const TableauPair& pair);

/// Exhaustive check that rs_map(inverse(rho)) == (Q_rho, P_rho) over S_k.
bool check_schuetzenberger(int k, int cap = kDefaultEnumerationCap);

/// The permutations whose P- and Q-symbols coincide; exactly the involutions.
std::vector<Permutation> diagonal_permutations(int k, int cap = kDefaultEnumerationCap);

} // namespace suninv

#endif // SUNINV_RS_HPP
