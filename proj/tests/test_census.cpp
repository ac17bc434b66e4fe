#include <doctest.h>

#include "suninv/census.hpp"
#include "suninv/errors.hpp"

#include <map>

using namespace suninv;

namespace {

BigInt value_of(const CensusReport& report, const std::string& name) {
    for (const auto& [key, value] : report.values)
        if (key == name) return value;
    FAIL("missing oracle value ", name);
    return BigInt{};
}

} // namespace

TEST_SUITE_BEGIN("census");

TEST_CASE("pass flag is a pure function of dot-grouped values") {
    CHECK(census_passed({}));
    CHECK(census_passed({{"a", BigInt{1}}, {"b", BigInt{2}}}));
    CHECK(census_passed({{"g.x", BigInt{3}}, {"g.y", BigInt{3}}, {"h.z", BigInt{9}}}));
    CHECK(!census_passed({{"g.x", BigInt{3}}, {"g.y", BigInt{4}}}));
    CHECK(!census_passed({{"g.x", BigInt{3}}, {"g.y", BigInt{3}}, {"g.z", BigInt{5}}}));
}

TEST_CASE("verify_theorem") {
    CensusReport zero = verify_theorem(0);
    CHECK(zero.passed);
    for (const auto& [name, value] : zero.values) CHECK(value == BigInt{1});

    CensusReport one = verify_theorem(1);
    CHECK(one.passed);
    for (const auto& [name, value] : one.values) CHECK(value == BigInt{1});

    CensusReport three = verify_theorem(3);
    CHECK(three.passed);
    CHECK(three.claim == "irrep-count-equals-involutions");
    CHECK(value_of(three, "count.brute") == BigInt{4});
    CHECK(value_of(three, "count.recurrence") == BigInt{4});
    CHECK(value_of(three, "count.syt_total") == BigInt{4});
    CHECK(value_of(three, "count.rs_diagonal") == BigInt{4});

    CensusReport six = verify_theorem(6);
    CHECK(six.passed);
    for (const auto& [name, value] : six.values) CHECK(value == BigInt{76});

    CHECK_THROWS_AS(verify_theorem(11), capacity_error);
}

TEST_CASE("verify_proof_counts") {
    CensusReport two = verify_proof_counts(2);
    CHECK(two.passed);
    CHECK(value_of(two, "n_t") == BigInt{0});
    CHECK(value_of(two, "transitions.n_t") == BigInt{0});

    CensusReport three = verify_proof_counts(3);
    CHECK(three.passed);
    CHECK(value_of(three, "n_p") == BigInt{4});
    CHECK(value_of(three, "n_t") == BigInt{2});
    CHECK(value_of(three, "projectors.group_minus_n_t") == BigInt{4});
    CHECK(value_of(three, "transitions.n_t") == BigInt{2});
    CHECK(value_of(three, "hermitian.split_size") == BigInt{5});
    CHECK(value_of(three, "anti.split_size") == BigInt{1});

    CensusReport four = verify_proof_counts(4);
    CHECK(four.passed);
    CHECK(value_of(four, "n_p") == BigInt{10});
    CHECK(value_of(four, "n_t") == BigInt{14});
    CHECK(value_of(four, "projectors.group_minus_n_t") == BigInt{10});
    CHECK(value_of(four, "transitions.n_t") == BigInt{14});
    CHECK(value_of(four, "basis.syt_square_total") == BigInt{24});

    for (int k = 0; k <= 6; ++k) CHECK(verify_proof_counts(k).passed);
}

TEST_CASE("verify_corollary") {
    CensusReport mixed21 = verify_corollary(2, 1);
    CHECK(mixed21.passed);
    CHECK(value_of(mixed21, "count.hermitian_census") == BigInt{4});
    CHECK(value_of(mixed21, "size.mixed_diagrams") == BigInt{6});

    CensusReport mixed22 = verify_corollary(2, 2);
    CHECK(mixed22.passed);
    CHECK(value_of(mixed22, "count.hermitian_census") == BigInt{10});

    // (k, 0) carries the same counts as the theorem itself
    CensusReport pure = verify_corollary(3, 0);
    CHECK(pure.passed);
    CHECK(value_of(pure, "count.hermitian_census") == BigInt{4});

    // duality symmetry
    for (int total = 0; total <= 4; ++total)
        for (int m = 0; m <= total; ++m)
            CHECK(value_of(verify_corollary(m, total - m), "count.hermitian_census") ==
                  value_of(verify_corollary(total - m, m), "count.hermitian_census"));

    CHECK_THROWS_AS(verify_corollary(6, 6), capacity_error);
}

TEST_CASE("verify_rank_remark") {
    // full rank at N >= k, where the tableau comparison is sound
    CensusReport full = verify_rank_remark(3, 3);
    CHECK(full.passed);
    CHECK(value_of(full, "full.rank") == BigInt{6});
    CHECK(value_of(full, "involutions.rank") == BigInt{4});

    // N = 1: every permutation acts as the identity
    CensusReport ones = verify_rank_remark(3, 1);
    CHECK(ones.passed);
    CHECK(value_of(ones, "full.rank") == BigInt{1});
    CHECK(value_of(ones, "involutions.rank") == BigInt{1});

    // 1 < N < k: the involutions stay linearly independent, so the
    // tableau-sum comparison the report encodes does not hold and the
    // report honestly fails while the full-basis group still agrees.
    CensusReport deficient = verify_rank_remark(3, 2);
    CHECK(!deficient.passed);
    CHECK(value_of(deficient, "full.rank") == BigInt{5});
    CHECK(value_of(deficient, "full.syt_square_total") == BigInt{5});
    CHECK(value_of(deficient, "involutions.rank") == BigInt{4});
    CHECK(value_of(deficient, "involutions.syt_total") == BigInt{3});

    CHECK_THROWS_AS(verify_rank_remark(6, 2), capacity_error);
    CHECK_NOTHROW(verify_rank_remark(4, 2, 4));
}

TEST_CASE("figure_one_table") {
    auto rows3 = figure_one_table(3);
    REQUIRE(rows3.size() == 6);
    int diagonal = 0;
    for (const FigureRow& row : rows3) {
        if (row.diagonal) ++diagonal;
        CHECK(row.diagonal == is_involution(row.perm));
        CHECK(row.diagonal == (row.pair.p == row.pair.q));
        CHECK(rs_map(row.perm) == row.pair);
    }
    CHECK(diagonal == 4);

    auto rows1 = figure_one_table(1);
    REQUIRE(rows1.size() == 1);
    CHECK(rows1[0].diagonal);

    auto rows4 = figure_one_table(4);
    CHECK(rows4.size() == 24);
    int diagonal4 = 0;
    for (const FigureRow& row : rows4)
        if (row.diagonal) ++diagonal4;
    CHECK(diagonal4 == 10);
}

TEST_SUITE_END();
