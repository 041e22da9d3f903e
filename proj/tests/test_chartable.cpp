#include "oretk/catalog.hpp"
#include "oretk/chartable.hpp"
#include "oretk/errors.hpp"
#include "oretk/subgroup_lattice.hpp"

#include <doctest.h>

#include <algorithm>

using namespace oretk;

namespace {

Subgroup span_of(const GroupPtr& g, const std::string& gens) {
    return subgroup_generated_by(g, parse_generator_list(gens, g->degree()));
}

long long degree_square_sum(const CharacterTable& t) {
    long long acc = 0;
    for (int d : t.degrees) acc += static_cast<long long>(d) * d;
    return acc;
}

}  // namespace

TEST_CASE("character table degrees") {
    SUBCASE("S3: degrees 1, 1, 2") {
        auto t = character_table(group_from_name("S3"));
        CHECK(t.degrees == std::vector<int>{1, 1, 2});
        CHECK(degree_square_sum(t) == 6);
        CHECK(t.prime > 12);
        CHECK(t.prime % group_from_name("S3")->exponent() == 1);
    }
    SUBCASE("abelian groups have all-linear characters") {
        auto t = character_table(group_from_name("C4"));
        CHECK(t.degrees == std::vector<int>{1, 1, 1, 1});
    }
    SUBCASE("S4: degrees 1, 1, 2, 3, 3") {
        auto t = character_table(group_from_name("S4"));
        CHECK(t.degrees == std::vector<int>{1, 1, 2, 3, 3});
    }
    SUBCASE("Q8 and D4 share the degree pattern 1,1,1,1,2") {
        CHECK(character_table(group_from_name("Q8")).degrees ==
              std::vector<int>{1, 1, 1, 1, 2});
        CHECK(character_table(group_from_name("D4")).degrees ==
              std::vector<int>{1, 1, 1, 1, 2});
    }
    SUBCASE("SL(2,3): degrees 1,1,1,2,2,2,3") {
        CHECK(character_table(group_from_name("SL(2,3)")).degrees ==
              std::vector<int>{1, 1, 1, 2, 2, 2, 3});
    }
    SUBCASE("A5: degrees 1,3,3,4,5") {
        CHECK(character_table(group_from_name("A5")).degrees ==
              std::vector<int>{1, 3, 3, 4, 5});
    }
    SUBCASE("A6: degrees 1,5,5,8,8,9,10") {
        CHECK(character_table(group_from_name("A6")).degrees ==
              std::vector<int>{1, 5, 5, 8, 8, 9, 10});
    }
    SUBCASE("S6 sits exactly at the default cap") {
        CHECK(character_table(group_from_name("S6")).degrees ==
              std::vector<int>{1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16});
    }
    SUBCASE("direct products multiply degree multisets") {
        CHECK(character_table(group_from_name("S3xS3")).degrees ==
              std::vector<int>{1, 1, 1, 1, 2, 2, 2, 2, 4});
        CHECK(character_table(group_from_name("S4xC2")).degrees ==
              std::vector<int>{1, 1, 1, 1, 2, 2, 3, 3, 3, 3});
    }
    SUBCASE("sum of squared degrees equals the order on the catalog") {
        for (const auto& entry : builtin_catalog()) {
            CHECK(degree_square_sum(character_table(entry.group)) == entry.group->order());
        }
    }
    SUBCASE("cap") {
        CHECK_THROWS_AS(character_table(group_from_name("S4"), 10), CapExceeded);
    }
}

TEST_CASE("fixed_point_dim") {
    auto s3 = group_from_name("S3");
    auto t = character_table(s3);
    const int two_dim = 2;  // degrees sorted: [1, 1, 2]
    REQUIRE(t.degrees[two_dim] == 2);

    SUBCASE("two-dim character of S3 restricted to C2 fixes a line") {
        CHECK(fixed_point_dim(t, two_dim, span_of(s3, "(0 1)")) == 1);
    }
    SUBCASE("trivial subgroup fixes everything") {
        for (int i = 0; i < t.num_characters(); ++i) {
            CHECK(fixed_point_dim(t, i, trivial_subgroup(s3)) == t.degrees[i]);
        }
    }
    SUBCASE("trivial character fixes one dimension everywhere") {
        for (const auto& node : all_subgroups(s3).nodes) {
            CHECK(fixed_point_dim(t, 0, node) == 1);
        }
    }
    SUBCASE("fixed spaces shrink along subgroup containment") {
        for (const char* name : {"S4", "D6", "Q8", "C12"}) {
            auto g = group_from_name(name);
            auto table = character_table(g);
            auto lattice = all_subgroups(g);
            for (int i = 0; i < table.num_characters(); ++i) {
                for (const auto& small : lattice.nodes) {
                    for (const auto& big : lattice.nodes) {
                        if (!small.mask.is_subset_of(big.mask)) continue;
                        CHECK(fixed_point_dim(table, i, big) <=
                              fixed_point_dim(table, i, small));
                    }
                }
            }
        }
    }
    SUBCASE("hand-computed dimensions for the standard 3-dim character of S4") {
        auto s4 = group_from_name("S4");
        auto t4 = character_table(s4);
        // Sorted rows: [1,1,2,3,3]; index 3 is the standard character
        // (value +1 on transpositions), index 4 its sign twist.
        REQUIRE(t4.degrees[3] == 3);
        auto klein = span_of(s4, "(0 1)(2 3),(0 2)(1 3)");
        auto pair = span_of(s4, "(0 1),(2 3)");
        auto four_cycle = span_of(s4, "(0 1 2 3)");
        CHECK(fixed_point_dim(t4, 3, klein) == 0);       // (3-1-1-1)/4
        CHECK(fixed_point_dim(t4, 3, pair) == 1);        // (3+1+1-1)/4
        CHECK(fixed_point_dim(t4, 4, pair) == 0);        // (3-1-1-1)/4
        CHECK(fixed_point_dim(t4, 4, four_cycle) == 1);  // (3+1-1+1)/4
    }
    SUBCASE("corrupted tables are caught by the lift range") {
        auto bad = t;
        bad.values[two_dim][1] = 7;  // not a legal character value pattern
        bool raised = false;
        for (const auto& node : all_subgroups(s3).nodes) {
            try {
                fixed_point_dim(bad, two_dim, node);
            } catch (const LiftOutOfRange&) {
                raised = true;
            }
        }
        CHECK(raised);
    }
}

TEST_CASE("character kernels") {
    auto s4 = group_from_name("S4");
    auto t = character_table(s4);
    SUBCASE("kernel of the sign character is A4") {
        // Degrees sorted [1,1,2,3,3]: index 1 is the sign character.
        auto kernel = character_kernel(t, 1);
        auto a4 = span_of(s4, "(0 1 2),(1 2 3)");
        CHECK(kernel.mask == a4.mask);
    }
    SUBCASE("kernel of the trivial character is everything") {
        CHECK(character_kernel(t, 0).order() == 24);
    }
    SUBCASE("the faithful 2-dim character of S3 has trivial kernel") {
        auto s3 = group_from_name("S3");
        auto t3 = character_table(s3);
        CHECK(character_kernel(t3, 2).order() == 1);
    }
    SUBCASE("kernels are normal across the catalog") {
        for (const auto& entry : builtin_catalog()) {
            auto table = character_table(entry.group);
            for (int i = 0; i < table.num_characters(); ++i) {
                CHECK(is_normal(entry.group, character_kernel(table, i)));
            }
        }
    }
}

TEST_CASE("pointwise stabilizers") {
    auto s4 = group_from_name("S4");
    auto t = character_table(s4);
    SUBCASE("some irreducible pins down the transposition subgroup") {
        auto h = span_of(s4, "(0 1)");
        bool any = false;
        for (int i = 0; i < t.num_characters(); ++i) {
            any = any || pointwise_stabilizer_is_h(t, i, h);
        }
        CHECK(any);
    }
    SUBCASE("no irreducible pins down the double-transposition subgroup") {
        auto h = span_of(s4, "(0 1)(2 3)");
        for (int i = 0; i < t.num_characters(); ++i) {
            CHECK_FALSE(pointwise_stabilizer_is_h(t, i, h));
        }
    }
    SUBCASE("H = G is pinned trivially") {
        CHECK(pointwise_stabilizer_is_h(t, 0, full_subgroup(s4)));
    }
}

TEST_CASE("linear primitivity of intervals") {
    auto s3 = group_from_name("S3");
    CHECK(is_linearly_primitive_interval(s3, trivial_subgroup(s3)));
    auto v4 = group_from_name("C2xC2");
    CHECK_FALSE(is_linearly_primitive_interval(v4, trivial_subgroup(v4)));
    auto s4 = group_from_name("S4");
    CHECK(is_linearly_primitive_interval(s4, full_subgroup(s4)));
}

TEST_CASE("min_faithful_components") {
    CHECK(min_faithful_components(group_from_name("C2xC2")) == 2);
    CHECK(min_faithful_components(group_from_name("S3")) == 1);
    CHECK(min_faithful_components(group_from_name("C30")) == 1);
    CHECK(min_faithful_components(group_from_name("C2xC2xC2")) == 3);
    CHECK(min_faithful_components(group_from_name("C2xC4")) == 2);
    CHECK(min_faithful_components(group_from_name("Q8")) == 1);
}

TEST_CASE("kernel-based and stabilizer-based primitivity agree on the catalog") {
    for (const auto& entry : builtin_catalog()) {
        auto table = character_table(entry.group);
        bool kernel_route = min_faithful_components(table) == 1;
        bool stabilizer_route =
            is_linearly_primitive_interval(table, trivial_subgroup(entry.group));
        CHECK(kernel_route == stabilizer_route);
    }
}

TEST_CASE("core-free linearly primitive intervals force a linearly primitive group") {
    for (const auto& entry : builtin_catalog()) {
        auto g = entry.group;
        auto table = character_table(g);
        for (const auto& h : all_subgroups(g).nodes) {
            if (core(g, h).order() != 1) continue;
            if (!is_linearly_primitive_interval(table, h)) continue;
            CHECK(min_faithful_components(table) == 1);
        }
    }
}
