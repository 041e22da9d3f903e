#include "oretk/catalog.hpp"
#include "oretk/errors.hpp"
#include "oretk/subgroup_lattice.hpp"

#include <doctest.h>

#include <set>

using namespace oretk;

namespace {

Subgroup span_of(const GroupPtr& g, const std::string& gens) {
    return subgroup_generated_by(g, parse_generator_list(gens, g->degree()));
}

// Brute-force oracle: close every generating set of size <= 4. Any subgroup
// of a group of order <= 24 < 2^5 has a generating set of at most 4 elements
// (each new generator at least doubles the subgroup).
std::set<ElementMask> subgroup_oracle(const GroupPtr& g) {
    REQUIRE(g->order() <= 24);
    const int n = g->order();
    std::set<ElementMask> found;
    found.insert(trivial_subgroup(g).mask);
    std::vector<int> seed;
    for (int a = 0; a < n; ++a) {
        seed = {a};
        found.insert(subgroup_generated(g, seed).mask);
        for (int b = a + 1; b < n; ++b) {
            seed = {a, b};
            found.insert(subgroup_generated(g, seed).mask);
            for (int c = b + 1; c < n; ++c) {
                seed = {a, b, c};
                found.insert(subgroup_generated(g, seed).mask);
                for (int d = c + 1; d < n; ++d) {
                    seed = {a, b, c, d};
                    found.insert(subgroup_generated(g, seed).mask);
                }
            }
        }
    }
    return found;
}

int divisor_count(int n) {
    int count = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d == 0) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("all_subgroups counts match the brute-force oracle") {
    for (const char* name : {"S3", "A4", "D4", "Q8", "C12", "S4", "D6"}) {
        auto g = group_from_name(name);
        auto lattice = all_subgroups(g);
        auto oracle = subgroup_oracle(g);
        CHECK(lattice.nodes.size() == oracle.size());
        for (const auto& node : lattice.nodes) {
            CHECK(oracle.count(node.mask) == 1);
        }
    }
}

TEST_CASE("all_subgroups fixed counts") {
    CHECK(all_subgroups(group_from_name("S3")).nodes.size() == 6);
    CHECK(all_subgroups(group_from_name("C30")).nodes.size() == 8);
    CHECK(all_subgroups(Group::from_generators({}, 1)).nodes.size() == 1);
    CHECK(all_subgroups(group_from_name("S4")).nodes.size() == 30);
    CHECK(all_subgroups(group_from_name("D6")).nodes.size() == 16);
    CHECK(all_subgroups(group_from_name("A5")).nodes.size() == 59);
    CHECK(all_subgroups(group_from_name("S5")).nodes.size() == 156);
    CHECK_THROWS_AS(all_subgroups(group_from_name("S4"), 10), CapExceeded);
}

TEST_CASE("cyclic groups have one subgroup per divisor") {
    for (int n = 1; n <= 100; ++n) {
        auto g = group_from_name("C" + std::to_string(n));
        CHECK(static_cast<int>(all_subgroups(g).nodes.size()) == divisor_count(n));
    }
}

TEST_CASE("interval node sets") {
    auto s3 = group_from_name("S3");
    SUBCASE("[C2, S3] contains exactly the subgroups the oracle filters") {
        auto h = span_of(s3, "(0 1)");
        auto iv = interval(s3, h);
        std::set<ElementMask> expected;
        for (const auto& node : all_subgroups(s3).nodes) {
            if (h.mask.is_subset_of(node.mask)) expected.insert(node.mask);
        }
        CHECK(iv.nodes.size() == expected.size());
        for (const auto& node : iv.nodes) CHECK(expected.count(node.mask) == 1);
        CHECK(iv.nodes.size() == 2);  // C2 and S3 only
    }
    SUBCASE("[G, G] is a point") {
        CHECK(interval(s3, full_subgroup(s3)).nodes.size() == 1);
    }
    SUBCASE("[e, G] is the whole subgroup lattice") {
        CHECK(interval(s3, trivial_subgroup(s3)).nodes.size() ==
              all_subgroups(s3).nodes.size());
    }
}

TEST_CASE("interval meet is intersection, join is generation") {
    for (const char* name : {"S4", "Q8", "D6"}) {
        auto g = group_from_name(name);
        auto iv = interval(g, trivial_subgroup(g));
        REQUIRE(iv.nodes.size() <= 50);
        const int n = static_cast<int>(iv.nodes.size());
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                ElementMask meet_mask = iv.nodes[a].mask & iv.nodes[b].mask;
                CHECK(iv.nodes[iv.lattice.meet(a, b)].mask == meet_mask);
                auto union_indices = Subgroup{g, iv.nodes[a].mask | iv.nodes[b].mask}
                                         .element_indices();
                ElementMask join_mask = subgroup_generated(g, union_indices).mask;
                CHECK(iv.nodes[iv.lattice.join(a, b)].mask == join_mask);
            }
        }
    }
}

TEST_CASE("interval_equivalent") {
    auto s4 = group_from_name("S4");
    SUBCASE("the two classic order-4-vs-order-2 intervals differ") {
        auto i1 = interval(s4, span_of(s4, "(0 1 2 3)"));
        auto i2 = interval(s4, span_of(s4, "(0 1)(2 3)"));
        CHECK_FALSE(interval_equivalent(i1, i2));
    }
    SUBCASE("an interval is equivalent to itself") {
        auto iv = interval(s4, span_of(s4, "(0 1 2 3)"));
        CHECK(interval_equivalent(iv, iv));
    }
    SUBCASE("[e, C4] differs from [e, V4]") {
        auto c4 = group_from_name("C4");
        auto v4 = group_from_name("C2xC2");
        CHECK_FALSE(interval_equivalent(interval(c4, trivial_subgroup(c4)),
                                        interval(v4, trivial_subgroup(v4))));
    }
    SUBCASE("conjugate subgroups give equivalent intervals") {
        auto s3 = group_from_name("S3");
        auto i1 = interval(s3, span_of(s3, "(0 1)"));
        auto i2 = interval(s3, span_of(s3, "(1 2)"));
        CHECK(interval_equivalent(i1, i2));
    }
    SUBCASE("core-quotient equivalence across different parents") {
        // [K, S4] with K the Klein normal subgroup has core K, so it reduces
        // to [e, S4/K] = [e, S3].
        auto s3 = group_from_name("S3");
        auto klein = span_of(s4, "(0 1)(2 3),(0 2)(1 3)");
        auto i1 = interval(s4, klein);
        auto i2 = interval(s3, trivial_subgroup(s3));
        CHECK(interval_equivalent(i1, i2));
    }
}
