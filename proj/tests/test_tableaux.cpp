#include <doctest.h>

#include "suninv/errors.hpp"
#include "suninv/tableaux.hpp"

#include <algorithm>
#include <set>

using namespace suninv;

TEST_SUITE_BEGIN("tableaux");

TEST_CASE("partition validation and text form") {
    CHECK_NOTHROW((Partition{{4, 2, 2, 1}}));
    CHECK_THROWS_AS((Partition{{2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS((Partition{{2, 0}}), std::invalid_argument);
    CHECK(Partition{{4, 2, 2, 1}}.size() == 9);
    CHECK(Partition{{4, 2, 2, 1}}.to_string() == "(4,2,2,1)");
    CHECK(Partition{}.size() == 0);
}

TEST_CASE("partition enumeration is reverse-lexicographic") {
    auto parts3 = enumerate_partitions(3);
    REQUIRE(parts3.size() == 3);
    CHECK(parts3[0] == Partition{{3}});
    CHECK(parts3[1] == Partition{{2, 1}});
    CHECK(parts3[2] == Partition{{1, 1, 1}});

    auto limited = enumerate_partitions(3, 2);
    REQUIRE(limited.size() == 2);
    CHECK(limited[0] == Partition{{3}});
    CHECK(limited[1] == Partition{{2, 1}});

    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0] == Partition{});

    // p(k) for k = 0..10: 1 1 2 3 5 7 11 15 22 30 42
    const std::size_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int k = 0; k <= 10; ++k)
        CHECK(enumerate_partitions(k).size() == p[static_cast<std::size_t>(k)]);
}

TEST_CASE("standard tableau validation") {
    CHECK_NOTHROW(StandardTableau::from_string("1 3 4 9; 2 7; 5 8; 6"));
    // row not increasing
    CHECK_THROWS_AS(StandardTableau::from_string("2 1; 3"), std::invalid_argument);
    // column not increasing
    CHECK_THROWS_AS(StandardTableau::from_string("2 3; 1"), std::invalid_argument);
    // rows must weakly decrease in length
    CHECK_THROWS_AS(StandardTableau::from_string("1 2; 3 4 5"), std::invalid_argument);
    // entries must be exactly 1..k
    CHECK_THROWS_AS(StandardTableau::from_string("1 2; 4"), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau::from_string("1 2; 2"), std::invalid_argument);

    StandardTableau t = StandardTableau::from_string("1 3 4 9; 2 7; 5 8; 6");
    CHECK(t.shape() == Partition{{4, 2, 2, 1}});
    CHECK(t.size() == 9);
    CHECK(t.to_string() == "1 3 4 9; 2 7; 5 8; 6");
}

TEST_CASE("hook counts") {
    CHECK(hook_count(Partition{{5}}) == BigInt{1});
    CHECK(hook_count(Partition{{1, 1, 1, 1}}) == BigInt{1});
    CHECK(hook_count(Partition{{2, 1}}) == BigInt{2});
    CHECK(hook_count(Partition{{3, 1}}) == BigInt{3});
    CHECK(hook_count(Partition{{2, 2}}) == BigInt{2});
    CHECK(hook_count(Partition{{4, 2, 2, 1}}) == BigInt{216});
    CHECK(hook_count(Partition{}) == BigInt{1});
}

TEST_CASE("syt enumeration matches hook counts and stays valid") {
    auto col = enumerate_syt(Partition{{1, 1, 1}});
    REQUIRE(col.size() == 1);
    CHECK(col[0].to_string() == "1; 2; 3");

    auto two_one = enumerate_syt(Partition{{2, 1}});
    REQUIRE(two_one.size() == 2);
    CHECK(two_one[0].to_string() == "1 2; 3");
    CHECK(two_one[1].to_string() == "1 3; 2");

    // the shape (4,2,2,1) admits the filling 1 3 4 9; 2 7; 5 8; 6
    auto big = enumerate_syt(Partition{{4, 2, 2, 1}});
    CHECK(big.size() == 216);
    StandardTableau member = StandardTableau::from_string("1 3 4 9; 2 7; 5 8; 6");
    CHECK(std::count(big.begin(), big.end(), member) == 1);

    for (int k = 0; k <= 8; ++k) {
        for (const Partition& shape : enumerate_partitions(k)) {
            auto fillings = enumerate_syt(shape);
            CHECK(BigInt{static_cast<std::int64_t>(fillings.size())} == hook_count(shape));
            std::set<StandardTableau> unique(fillings.begin(), fillings.end());
            CHECK(unique.size() == fillings.size());
        }
    }
    CHECK_THROWS_AS(enumerate_syt(Partition{{8, 4}}), capacity_error);
}

TEST_CASE("tableau totals") {
    CHECK(syt_total(3) == BigInt{4});
    CHECK(syt_total(4) == BigInt{10});
    CHECK(syt_total(3, 2) == BigInt{3});
    CHECK(syt_total(0) == BigInt{1});

    CHECK(syt_square_total(1) == BigInt{1});
    CHECK(syt_square_total(3) == BigInt{6});
    CHECK(syt_square_total(3, 2) == BigInt{5});

    BigInt factorial{1};
    for (int k = 1; k <= 8; ++k) {
        factorial *= BigInt{k};
        CHECK(syt_square_total(k) == factorial);
    }
}

TEST_SUITE_END();
