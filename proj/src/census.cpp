#include "suninv/census.hpp"

#include "suninv/algebra.hpp"
#include "suninv/errors.hpp"
#include "suninv/mixed.hpp"
#include "suninv/tableaux.hpp"

#include <map>

namespace suninv {

bool census_passed(const std::vector<std::pair<std::string, BigInt>>& values) {
    std::map<std::string, const BigInt*> group_head;
    for (const auto& [name, value] : values) {
        std::string group = name.substr(0, name.find('.'));
        auto [it, inserted] = group_head.emplace(group, &value);
        if (!inserted && *it->second != value) return false;
    }
    return true;
}

namespace {

CensusReport finish(CensusReport report) {
    report.passed = census_passed(report.values);
    return report;
}

BigInt factorial(int k) {
    BigInt out{1};
    for (int i = 2; i <= k; ++i) out *= BigInt{i};
    return out;
}

} // namespace

CensusReport verify_theorem(int k, int cap) {
    CensusReport report;
    report.claim = "irrep-count-equals-involutions";
    report.params = {{"k", std::to_string(k)}};
    report.values = {
        {"count.brute", involution_count(k, InvolutionMethod::Brute, cap)},
        {"count.recurrence", involution_count(k, InvolutionMethod::Recurrence)},
        {"count.syt_total", syt_total(k)},
        {"count.rs_diagonal", BigInt{static_cast<std::int64_t>(
                                  diagonal_permutations(k, cap).size())}},
    };
    return finish(std::move(report));
}

CensusReport verify_proof_counts(int k, int cap) {
    CensusReport report;
    report.claim = "projector-basis-counts";
    report.params = {{"k", std::to_string(k)}};

    auto [hermitian, anti] = split_hermitian_basis(k, cap);
    const BigInt n_p = involution_count(k, InvolutionMethod::Brute, cap);
    const BigInt group_size = factorial(k);
    const BigInt n_t = group_size - n_p;
    const BigInt h_size{static_cast<std::int64_t>(hermitian.size())};
    const BigInt a_size{static_cast<std::int64_t>(anti.size())};
    const BigInt syt = syt_total(k);
    const BigInt syt_sq = syt_square_total(k);

    report.values = {
        {"n_p", n_p},
        {"n_t", n_t},
        {"parity.n_t_mod_2", n_t % BigInt{2}},
        {"parity.zero", BigInt{}},
        {"hermitian.split_size", h_size},
        {"hermitian.n_p_plus_half_n_t", n_p + n_t / BigInt{2}},
        {"anti.split_size", a_size},
        {"anti.half_n_t", n_t / BigInt{2}},
        {"projectors.group_minus_n_t", group_size - n_t},
        {"projectors.syt_total", syt},
        {"basis.group_size", group_size},
        {"basis.syt_square_total", syt_sq},
        {"transitions.n_t", n_t},
        {"transitions.group_minus_syt_total", group_size - syt},
    };
    return finish(std::move(report));
}

CensusReport verify_corollary(int m, int n, int cap) {
    CensusReport report;
    report.claim = "mixed-space-hermitian-census";
    report.params = {{"m", std::to_string(m)}, {"n", std::to_string(n)}};

    const MixedShape shape{m, n};
    std::vector<MixedDiagram> diagrams = enumerate_mixed(shape, cap);
    std::int64_t hermitian = 0;
    for (const MixedDiagram& d : diagrams)
        if (is_hermitian(d)) ++hermitian;

    report.values = {
        {"count.hermitian_census", BigInt{hermitian}},
        {"count.involutions", involution_count(m + n, InvolutionMethod::Recurrence)},
        {"count.syt_total", syt_total(m + n)},
        {"size.mixed_diagrams", BigInt{static_cast<std::int64_t>(diagrams.size())}},
        {"size.factorial", factorial(m + n)},
    };
    return finish(std::move(report));
}

CensusReport verify_rank_remark(int k, int n_dim, int rank_cap) {
    if (k > rank_cap)
        throw capacity_error("verify_rank_remark: k = " + std::to_string(k) +
                             " exceeds the rank cap " + std::to_string(rank_cap) +
                             " (the Gram matrix is k! x k!)");
    CensusReport report;
    report.claim = "linearly-independent-involutions";
    report.params = {{"k", std::to_string(k)}, {"N", std::to_string(n_dim)}};

    std::vector<AlgebraElement> full_basis, involutions;
    for_each_permutation(
        k,
        [&](const Permutation& rho) {
            full_basis.push_back(AlgebraElement::basis(rho));
            if (is_involution(rho)) involutions.push_back(AlgebraElement::basis(rho));
        },
        rank_cap);

    report.values = {
        {"full.rank", BigInt{exact_rank(gram_matrix(full_basis, n_dim))}},
        {"full.syt_square_total", syt_square_total(k, n_dim)},
        {"involutions.rank", BigInt{exact_rank(gram_matrix(involutions, n_dim))}},
        {"involutions.syt_total", syt_total(k, n_dim)},
    };
    return finish(std::move(report));
}

std::vector<FigureRow> figure_one_table(int k, int cap) {
    std::vector<FigureRow> rows;
    for_each_permutation(
        k,
        [&](const Permutation& rho) {
            TableauPair pair = rs_map(rho);
            bool diagonal = pair.p == pair.q;
            rows.push_back(FigureRow{rho, std::move(pair), diagonal});
        },
        cap);
    return rows;
}

} // namespace suninv
