#include <doctest.h>

#include "suninv/algebra.hpp"
#include "suninv/errors.hpp"
#include "suninv/mixed.hpp"

#include <set>

using namespace suninv;

namespace {

MixedDiagram identity_diagram(MixedShape shape) {
    return swap_map(Permutation::identity(shape.total()), shape);
}

// The "cross" of S_(1,1): both strands run within one side.
MixedDiagram cross_11() { return MixedDiagram::from_string("R1-R2,L1-L2", {1, 1}); }

} // namespace

TEST_SUITE_BEGIN("mixed");

TEST_CASE("construction validates matchings and arrows") {
    CHECK_NOTHROW(MixedDiagram::from_string("R1-L1,R2-R3,L2-L3", {2, 1}));
    // wrong strand count
    CHECK_THROWS_AS(MixedDiagram::from_string("R1-L1", {2, 1}), std::invalid_argument);
    // leg reused
    CHECK_THROWS_AS(MixedDiagram::from_string("R1-L1,R1-L2,R2-R3", {2, 1}),
                    std::invalid_argument);
    // tail-to-tail strand: R1 and L3 are both tails on shape (2,1)
    CHECK_THROWS_AS(MixedDiagram::from_string("R1-L3,L1-R2,R3-L2", {2, 1}),
                    std::invalid_argument);
    // height out of range
    CHECK_THROWS_AS(MixedDiagram::from_string("R1-L4,R2-R3,L2-L3", {2, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(MixedDiagram::from_string("R1!L1", {1, 0}), parse_error);
    CHECK_THROWS_AS(MixedDiagram::from_string("X1-L1", {1, 0}), parse_error);

    // canonical encoding is order-insensitive
    CHECK(MixedDiagram::from_string("L2-L3,R3-R2,L1-R1", {2, 1}).to_string() ==
          "R1-L1,R2-R3,L2-L3");
}

TEST_CASE("swap_map reproduces the worked S_(2,1) diagrams") {
    const MixedShape shape{2, 1};
    CHECK(identity_diagram(shape).to_string() == "R1-L1,R2-L2,R3-L3");
    CHECK(swap_map(parse_permutation("1 3 2"), shape).to_string() == "R1-L1,R2-R3,L2-L3");
    // cycle 1->2->3->1
    CHECK(swap_map(parse_permutation("2 3 1"), shape).to_string() == "R1-L2,R2-R3,L1-L3");
    CHECK_THROWS_AS(swap_map(Permutation::identity(2), shape), degree_mismatch);

    // pure permutation shape: the map is the plain birdtrack
    CHECK(swap_map(parse_permutation("2 3 1"), {3, 0}).to_string() == "R1-L2,R2-L3,R3-L1");
}

TEST_CASE("swap_map is a bijection with unswap_map inverse") {
    for (int total = 0; total <= 4; ++total) {
        for (int m = 0; m <= total; ++m) {
            MixedShape shape{m, total - m};
            std::set<MixedDiagram> seen;
            for_each_permutation(total, [&](const Permutation& rho) {
                MixedDiagram d = swap_map(rho, shape);
                seen.insert(d);
                CHECK(unswap_map(d) == rho);
            });
            std::size_t expected = 1;
            for (int i = 2; i <= total; ++i) expected *= static_cast<std::size_t>(i);
            CHECK(seen.size() == expected);
        }
    }
}

TEST_CASE("enumerate_mixed") {
    CHECK(enumerate_mixed({1, 1}).size() == 2);
    CHECK(enumerate_mixed({2, 1}).size() == 6);
    CHECK(enumerate_mixed({0, 0}).size() == 1);
    CHECK(enumerate_mixed({0, 0})[0].strands().empty());
    CHECK_THROWS_AS(enumerate_mixed({6, 6}), capacity_error);
}

TEST_CASE("mirror is an involution realizing the adjoint") {
    const MixedShape shape{2, 1};
    CHECK(mirror(identity_diagram(shape)) == identity_diagram(shape));

    MixedDiagram d = MixedDiagram::from_string("R1-L2,R2-R3,L1-L3", shape);
    MixedDiagram expected = MixedDiagram::from_string("L1-R2,L2-L3,R1-R3", shape);
    CHECK(mirror(d) == expected);

    for (const MixedDiagram& diagram : enumerate_mixed(shape))
        CHECK(mirror(mirror(diagram)) == diagram);

    // on pure permutation diagrams, mirror is the group inverse
    for (const Permutation& rho : enumerate_group(4))
        CHECK(mirror(swap_map(rho, {4, 0})) == swap_map(inverse(rho), {4, 0}));
}

TEST_CASE("hermitian census") {
    CHECK(is_hermitian(identity_diagram({2, 1})));
    int hermitian = 0;
    for (const MixedDiagram& d : enumerate_mixed({2, 1}))
        if (is_hermitian(d)) ++hermitian;
    CHECK(hermitian == 4);

    for (const MixedDiagram& d : enumerate_mixed({1, 1})) CHECK(is_hermitian(d));

    // hermiticity transports through swap_map exactly on involutions
    for (int m = 0; m <= 4; ++m) {
        MixedShape shape{m, 4 - m};
        for_each_permutation(4, [&](const Permutation& rho) {
            CHECK(is_hermitian(swap_map(rho, shape)) == is_involution(rho));
        });
    }
}

TEST_CASE("composition") {
    const MixedShape shape{2, 1};
    for (const MixedDiagram& d : enumerate_mixed(shape)) {
        MixedProduct left = compose(identity_diagram(shape), d);
        CHECK(left.loops == 0);
        CHECK(left.result == d);
        MixedProduct right = compose(d, identity_diagram(shape));
        CHECK(right.loops == 0);
        CHECK(right.result == d);
    }

    // X . X = N . X
    MixedProduct xx = compose(cross_11(), cross_11());
    CHECK(xx.loops == 1);
    CHECK(xx.result == cross_11());

    // pure permutation diagrams compose loop-free and match the group law
    for (const Permutation& sigma : enumerate_group(3)) {
        for (const Permutation& tau : enumerate_group(3)) {
            MixedProduct product = compose(swap_map(sigma, {3, 0}), swap_map(tau, {3, 0}));
            CHECK(product.loops == 0);
            CHECK(product.result == swap_map(compose(sigma, tau), {3, 0}));
        }
    }

    CHECK_THROWS_AS(compose(cross_11(), identity_diagram({2, 0})), degree_mismatch);
}

TEST_CASE("close_trace") {
    CHECK(close_trace(identity_diagram({2, 1})) == 3);
    CHECK(close_trace(cross_11()) == 1);
    CHECK(close_trace(swap_map(parse_permutation("2 3 1"), {3, 0})) == 1);
    CHECK(close_trace(identity_diagram({0, 0})) == 0);

    for (const Permutation& rho : enumerate_group(4))
        CHECK(close_trace(swap_map(rho, {4, 0})) == cycle_count(rho));
}

TEST_CASE("mixed inner product") {
    const MixedShape shape{1, 1};
    MixedDiagram id = identity_diagram(shape);
    CHECK(mixed_inner_product(id, id, 3) == BigInt{9});
    CHECK(mixed_inner_product(id, cross_11(), 2) == BigInt{2});
    CHECK(mixed_inner_product(cross_11(), cross_11(), 2) == BigInt{4});

    // symmetry and N^(m+n) diagonal across a whole shape
    for (const MixedDiagram& a : enumerate_mixed({2, 1})) {
        CHECK(mixed_inner_product(a, a, 2) == BigInt{8});
        for (const MixedDiagram& b : enumerate_mixed({2, 1}))
            CHECK(mixed_inner_product(a, b, 2) == mixed_inner_product(b, a, 2));
    }

    // shape (k,0) reproduces the permutation scalar product
    for (const Permutation& sigma : enumerate_group(3))
        for (const Permutation& tau : enumerate_group(3))
            CHECK(mixed_inner_product(swap_map(sigma, {3, 0}), swap_map(tau, {3, 0}), 2) ==
                  inner_product(sigma, tau, 2));
}

TEST_CASE("dense oracle: compose, trace, and gram entries") {
    for (int total = 0; total <= 3; ++total) {
        for (int m = 0; m <= total; ++m) {
            MixedShape shape{m, total - m};
            const int n_dim = 2;
            auto diagrams = enumerate_mixed(shape);
            std::vector<Matrix<Rational>> dense;
            dense.reserve(diagrams.size());
            for (const MixedDiagram& d : diagrams)
                dense.push_back(dense_mixed_operator(d, n_dim));

            for (std::size_t i = 0; i < diagrams.size(); ++i) {
                // trace
                BigInt trace_expected =
                    BigInt::pow(BigInt{n_dim},
                                static_cast<unsigned long>(close_trace(diagrams[i])));
                CHECK(dense[i].trace() == Rational{trace_expected});

                for (std::size_t j = 0; j < diagrams.size(); ++j) {
                    // composition with loop factor
                    MixedProduct product = compose(diagrams[i], diagrams[j]);
                    Matrix<Rational> expected =
                        dense_mixed_operator(product.result, n_dim) *
                        Rational{BigInt::pow(BigInt{n_dim},
                                             static_cast<unsigned long>(product.loops))};
                    CHECK(dense[i] * dense[j] == expected);

                    // gram entry: tr(mirror(a) b) via transpose
                    Rational gram{(dense[i].transpose() * dense[j]).trace()};
                    CHECK(Rational{mixed_inner_product(diagrams[i], diagrams[j], n_dim)} ==
                          gram);
                }
            }
        }
    }
    CHECK_THROWS_AS(dense_mixed_operator(identity_diagram({3, 3}), 5), capacity_error);
}

TEST_CASE("no cross-type diagram has a compositional inverse") {
    auto has_same_side_strand = [](const MixedDiagram& d) {
        for (const auto& [a, b] : d.strands())
            if (a.side == b.side) return true;
        return false;
    };
    auto diagrams = enumerate_mixed({2, 1});
    MixedDiagram id = identity_diagram({2, 1});
    int cross_type = 0;
    for (const MixedDiagram& d : diagrams) {
        if (!has_same_side_strand(d)) continue;
        ++cross_type;
        for (const MixedDiagram& e : diagrams) {
            MixedProduct left = compose(d, e);
            MixedProduct right = compose(e, d);
            CHECK((left.loops >= 1 || left.result != id));
            CHECK((right.loops >= 1 || right.result != id));
        }
    }
    // the four dualized diagrams of S_(2,1) beyond the two permutation-like ones
    CHECK(cross_type == 4);
}

TEST_SUITE_END();
