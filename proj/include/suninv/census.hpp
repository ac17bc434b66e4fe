#ifndef SUNINV_CENSUS_HPP
#define SUNINV_CENSUS_HPP

#include "suninv/bigint.hpp"
#include "suninv/permutation.hpp"
#include "suninv/rs.hpp"

#include <string>
#include <utility>
#include <vector>

namespace suninv {

/// Permutations above this degree are refused by the Gram-rank verification
/// unless the caller raises the cap (the Gram matrix is k! x k!).
inline constexpr int kDefaultRankCap = 5;

/// Pass/fail record of one counting identity, carrying every independently
/// computed value so a failure is diagnosable from the report alone.
///
/// Oracle names are dot-grouped: "count.brute" and "count.recurrence" belong
/// to group "count", and the report passes exactly when every group is
/// internally equal. A name without a dot forms its own group. This keeps
/// `passed` a pure function of the values mapping while letting one report
/// check several identities side by side.
struct CensusReport {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<std::string, BigInt>> values;
    bool passed = false;
};

/// Recomputes the pass flag from the dot-grouped values; used by every
/// verify_* builder and exposed for tests.
bool census_passed(const std::vector<std::pair<std::string, BigInt>>& values);

/// Number of irreducible representations on V^(tensor k) equals the number
/// of involutions in S_k: brute count, recurrence, hook-length tableau
/// total, and the Robinson-Schensted diagonal must agree.
CensusReport verify_theorem(int k, int cap = kDefaultEnumerationCap);

/// Size bookkeeping of the Hermitian/anti-Hermitian basis split: checks
/// |H_k| = n_P + n_T/2 and |A_k| = n_T/2, that n_T is even, that the
/// projector count k! - n_T matches the tableau total, and that the full
/// basis size matches sum f_lambda^2 = k!.
CensusReport verify_proof_counts(int k, int cap = kDefaultEnumerationCap);

/// Mirror-Hermitian census of S_(m,n) equals the involution count and the
/// tableau total of S_(m+n); also records |S_(m,n)| = (m+n)!.
CensusReport verify_corollary(int m, int n, int cap = kDefaultEnumerationCap);

/// Exact Gram ranks against row-restricted tableau sums: the S_k Gram rank
/// must equal sum of f_lambda^2 over shapes with at most N rows, and the
/// involutions-only Gram rank must equal sum of f_lambda.
CensusReport verify_rank_remark(int k, int n_dim, int rank_cap = kDefaultRankCap);

struct FigureRow {
    Permutation perm;
    TableauPair pair;
    bool diagonal = false;
};

/// One row per permutation of S_k with its tableau pair and diagonal flag,
/// in enumeration order.
std::vector<FigureRow> figure_one_table(int k, int cap = kDefaultEnumerationCap);

} // namespace suninv

#endif // SUNINV_CENSUS_HPP
