#include "oretk/errors.hpp"
#include "oretk/fusionring.hpp"

#include <doctest.h>

#include <numeric>

using namespace oretk;

namespace {

// Group ring of Z/n: N_i[j][k] = 1 iff k = i + j mod n.
std::vector<FusionMatrix> cyclic_group_ring(int n) {
    std::vector<FusionMatrix> mats(n, FusionMatrix(n, std::vector<long>(n, 0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) mats[i][j][(i + j) % n] = 1;
    }
    return mats;
}

}  // namespace

TEST_CASE("rank-1 ring") {
    FusionRing ring = fusion_ring_from_matrices({{{1}}});
    CHECK(ring.rank == 1);
    CHECK(ring.dims == std::vector<long>{1});
    CHECK(fusion_subrings(ring).size() == 1);
}

TEST_CASE("group rings") {
    SUBCASE("Z/2") {
        FusionRing ring = fusion_ring_from_matrices(cyclic_group_ring(2));
        CHECK(ring.dims == std::vector<long>{1, 1});
        CHECK(ring.dual == std::vector<int>{0, 1});
    }
    SUBCASE("Z/4 has three closed subsets, matching its subgroups") {
        FusionRing ring = fusion_ring_from_matrices(cyclic_group_ring(4));
        CHECK(ring.dual == std::vector<int>{0, 3, 2, 1});
        auto subrings = fusion_subrings(ring);
        REQUIRE(subrings.size() == 3);
        CHECK(subrings[0] == std::vector<int>{0});
        CHECK(subrings[1] == std::vector<int>{0, 2});
        CHECK(subrings[2] == std::vector<int>{0, 1, 2, 3});
    }
}

TEST_CASE("the rank-7 dimension-210 fixture") {
    FusionRing ring = fusion_ring_from_matrices(fusion_fixture_210());
    CHECK(ring.rank == 7);
    CHECK(ring.dims == std::vector<long>{1, 5, 5, 5, 6, 7, 7});
    CHECK(ring.dimension() == 210);
    for (int i = 0; i < 7; ++i) CHECK(ring.dual[i] == i);  // all self-dual

    SUBCASE("only the two trivial closed subsets exist") {
        auto subrings = fusion_subrings(ring);
        REQUIRE(subrings.size() == 2);
        CHECK(subrings[0].size() == 1);
        CHECK(subrings[1].size() == 7);
    }
    SUBCASE("a dimension balance row: 5*5 splits as 1+5+5+7+7") {
        long acc = 0;
        for (int k = 0; k < 7; ++k) acc += ring.N[1][1][k] * ring.dims[k];
        CHECK(acc == 25);
        CHECK(ring.N[1][1] == std::vector<long>{1, 1, 0, 1, 0, 1, 1});
    }
    SUBCASE("dims are multiplicative on every product") {
        for (int i = 0; i < 7; ++i) {
            for (int j = 0; j < 7; ++j) {
                long acc = 0;
                for (int k = 0; k < 7; ++k) acc += ring.N[i][j][k] * ring.dims[k];
                CHECK(acc == ring.dims[i] * ring.dims[j]);
            }
        }
    }
}

TEST_CASE("axiom violations are structured") {
    SUBCASE("broken unit") {
        auto mats = cyclic_group_ring(2);
        mats[0][0][0] = 2;
        try {
            fusion_ring_from_matrices(mats);
            FAIL("expected AxiomViolation");
        } catch (const AxiomViolation& e) {
            CHECK(e.kind() == "unit");
        }
    }
    SUBCASE("negative entry") {
        auto mats = cyclic_group_ring(2);
        mats[1][1][0] = -1;
        try {
            fusion_ring_from_matrices(mats);
            FAIL("expected AxiomViolation");
        } catch (const AxiomViolation& e) {
            CHECK(e.kind() == "negative");
            CHECK(e.indices() == std::vector<int>{1, 1, 0});
        }
    }
    SUBCASE("broken duality") {
        auto mats = cyclic_group_ring(3);
        mats[1][1][0] = 1;  // a second unit hit in the same row block
        try {
            fusion_ring_from_matrices(mats);
            FAIL("expected AxiomViolation");
        } catch (const AxiomViolation& e) {
            CHECK(e.kind() == "duality");
        }
    }
    SUBCASE("broken associativity") {
        // Tweak a non-unit entry of the 210 fixture.
        auto mats = fusion_fixture_210();
        mats[4][5][6] += 1;
        try {
            fusion_ring_from_matrices(mats);
            FAIL("expected AxiomViolation");
        } catch (const AxiomViolation& e) {
            CHECK(e.kind() == "associativity");
        }
    }
    SUBCASE("shape") {
        CHECK_THROWS_AS(fusion_ring_from_matrices({{{1, 0}, {0, 1}}}), AxiomViolation);
    }
}

TEST_CASE("non-integral dimensions are reported, not silently accepted") {
    // The Fibonacci ring: x*x = 1 + x, a valid based ring whose dimension
    // (1+sqrt(5))/2 is irrational.
    std::vector<FusionMatrix> fib = {
        {{1, 0}, {0, 1}},
        {{0, 1}, {1, 1}},
    };
    CHECK_THROWS_AS(fusion_ring_from_matrices(fib), NonIntegralDims);
}

TEST_CASE("JSON input forms") {
    auto bare = fusion_matrices_from_json("[[[1]]]");
    CHECK(bare.size() == 1);
    auto wrapped = fusion_matrices_from_json(R"({"matrices": [[[1]]]})");
    CHECK(wrapped.size() == 1);
    CHECK_THROWS_AS(fusion_matrices_from_json("{}"), ParseError);
    CHECK_THROWS_AS(fusion_matrices_from_json("not json"), ParseError);
}

TEST_CASE("subring search cap") {
    // A rank-21 identity-like ring would pass structure checks but must be
    // rejected by the subring cap before the 2^21 scan.
    std::vector<FusionMatrix> big(21, FusionMatrix(21, std::vector<long>(21, 0)));
    for (int i = 0; i < 21; ++i) {
        for (int j = 0; j < 21; ++j) big[i][j][(i + j) % 21] = 1;
    }
    FusionRing ring = fusion_ring_from_matrices(big);
    CHECK_THROWS_AS(fusion_subrings(ring), CapExceeded);
}
