#include "oretk/catalog.hpp"
#include "oretk/errors.hpp"
#include "oretk/orelab.hpp"

#include <doctest.h>

using namespace oretk;

namespace {

Subgroup span_of(const GroupPtr& g, const std::string& gens) {
    return subgroup_generated_by(g, parse_generator_list(gens, g->degree()));
}

IntervalOfGroups make_interval(const GroupPtr& g, const Subgroup& h) { return interval(g, h); }

}  // namespace

TEST_CASE("is_h_cyclic") {
    auto s3 = group_from_name("S3");
    SUBCASE("[C2, S3] has a witness generating S3") {
        auto h = span_of(s3, "(0 1)");
        auto witness = is_h_cyclic(s3, h);
        REQUIRE(witness.has_value());
        auto seed = h.element_indices();
        seed.push_back(*witness);
        CHECK(subgroup_generated(s3, seed).order() == 6);
    }
    SUBCASE("[e, V4] has no witness") {
        auto v4 = group_from_name("C2xC2");
        CHECK_FALSE(is_h_cyclic(v4, trivial_subgroup(v4)).has_value());
    }
    SUBCASE("[G, G] is witnessed by the identity") {
        CHECK(is_h_cyclic(s3, full_subgroup(s3)) == s3->identity_index());
    }
    SUBCASE("double-coset scan agrees with the full scan on small groups") {
        for (const char* name : {"S3", "S4", "A4", "D4", "Q8", "C12"}) {
            auto g = group_from_name(name);
            for (const auto& h : all_subgroups(g).nodes) {
                CHECK(is_h_cyclic(g, h).has_value() ==
                      is_h_cyclic_full_scan(g, h).has_value());
            }
        }
    }
}

TEST_CASE("ore_witness_distributive") {
    SUBCASE("[e, C30] yields an element of order 30 without exhaustive search") {
        auto c30 = group_from_name("C30");
        Permutation witness = ore_witness_distributive(make_interval(c30, trivial_subgroup(c30)));
        CHECK(witness.order() == 30);
    }
    SUBCASE("[C2, S3] is a chain, witnessed via maximality") {
        auto s3 = group_from_name("S3");
        auto h = span_of(s3, "(0 1)");
        Permutation witness = ore_witness_distributive(make_interval(s3, h));
        auto gens = parse_generator_list("(0 1)", 3);
        gens.push_back(witness);
        CHECK(Group::from_generators(gens, 3)->order() == 6);
    }
    SUBCASE("[G, G] returns the identity") {
        auto s3 = group_from_name("S3");
        CHECK(ore_witness_distributive(make_interval(s3, full_subgroup(s3))).is_identity());
    }
    SUBCASE("non-distributive intervals are rejected") {
        auto v4 = group_from_name("C2xC2");
        CHECK_THROWS_AS(ore_witness_distributive(make_interval(v4, trivial_subgroup(v4))),
                        NotDistributive);
    }
    SUBCASE("every distributive interval of the catalog yields a verified witness") {
        for (const char* name : {"S4", "A4", "D4", "Q8", "C24", "C30"}) {
            auto g = group_from_name(name);
            for (const auto& h : all_subgroups(g).nodes) {
                auto iv = make_interval(g, h);
                if (!is_distributive(iv.lattice)) continue;
                Permutation witness = ore_witness_distributive(iv);
                auto seed = h.element_indices();
                seed.push_back(g->index_of(witness));
                CHECK(subgroup_generated(g, seed).order() == g->order());
                CHECK(is_h_cyclic(g, h).has_value());
            }
        }
    }
}

TEST_CASE("is_dedekind_interval") {
    SUBCASE("abelian groups are Dedekind everywhere") {
        auto c12 = group_from_name("C12");
        CHECK(is_dedekind_interval(make_interval(c12, trivial_subgroup(c12))));
    }
    SUBCASE("[e, S3] is not Dedekind") {
        auto s3 = group_from_name("S3");
        CHECK_FALSE(is_dedekind_interval(make_interval(s3, trivial_subgroup(s3))));
    }
    SUBCASE("a maximal interval is Dedekind") {
        auto s4 = group_from_name("S4");
        CHECK(is_dedekind_interval(make_interval(s4, span_of(s4, "(0 1 2),(1 2 3)"))));
    }
    SUBCASE("Q8 is Dedekind but not distributive") {
        auto q8 = group_from_name("Q8");
        auto iv = make_interval(q8, trivial_subgroup(q8));
        CHECK(is_dedekind_interval(iv));
        CHECK_FALSE(is_distributive(iv.lattice));
    }
}

TEST_CASE("is_cyclic_interval") {
    auto c30 = group_from_name("C30");
    CHECK(is_cyclic_interval(make_interval(c30, trivial_subgroup(c30))));
    auto s3 = group_from_name("S3");
    CHECK_FALSE(is_cyclic_interval(make_interval(s3, trivial_subgroup(s3))));
    auto s4 = group_from_name("S4");
    CHECK(is_cyclic_interval(make_interval(s4, span_of(s4, "(0 1 2),(1 2 3)"))));
}

TEST_CASE("coatom_index_sum") {
    SUBCASE("[e, C30] sums to 31/30 on both sides") {
        auto c30 = group_from_name("C30");
        auto iv = make_interval(c30, trivial_subgroup(c30));
        CHECK(coatom_index_sum(iv, CoatomSide::Up) == Rational(31, 30));
        CHECK(coatom_index_sum(iv, CoatomSide::Down) == Rational(31, 30));
    }
    SUBCASE("a maximal interval sums to one over the index") {
        auto s4 = group_from_name("S4");
        auto iv = make_interval(s4, span_of(s4, "(0 1 2),(1 2 3)"));
        CHECK(coatom_index_sum(iv, CoatomSide::Up) == Rational(1, 2));
    }
    SUBCASE("[e, C4] has the unique coatom C2") {
        auto c4 = group_from_name("C4");
        auto iv = make_interval(c4, trivial_subgroup(c4));
        CHECK(coatom_index_sum(iv, CoatomSide::Up) == Rational(1, 2));
    }
}

TEST_CASE("dual_ore_check") {
    SUBCASE("cyclic case holds via a faithful linear character") {
        auto c5 = group_from_name("C5");
        auto iv = make_interval(c5, trivial_subgroup(c5));
        CHECK(dual_ore_check(iv, character_table(c5)).holds);
    }
    SUBCASE("degenerate interval holds") {
        auto s3 = group_from_name("S3");
        auto iv = make_interval(s3, full_subgroup(s3));
        CHECK(dual_ore_check(iv, character_table(s3)).holds);
    }
    SUBCASE("rejects non-distributive input") {
        auto v4 = group_from_name("C2xC2");
        CHECK_THROWS_AS(dual_ore_check(make_interval(v4, trivial_subgroup(v4)),
                                       character_table(v4)),
                        NotDistributive);
    }
}

TEST_CASE("distributive_chain_length") {
    CHECK(distributive_chain_length(all_subgroups(group_from_name("C30")),
                                    ChainMode::Distributive) == 1);
    CHECK(distributive_chain_length(all_subgroups(group_from_name("C2xC2")),
                                    ChainMode::Distributive) == 2);
    CHECK(distributive_chain_length(all_subgroups(Group::from_generators({}, 1)),
                                    ChainMode::Distributive) == 0);
    CHECK(distributive_chain_length(all_subgroups(group_from_name("C2xC2")),
                                    ChainMode::BottomBoolean) == 2);
    CHECK(distributive_chain_length(all_subgroups(group_from_name("S3")),
                                    ChainMode::Distributive) == 2);
    // Bottom-boolean steps are at least as permissive as distributive ones.
    for (const char* name : {"S4", "Q8", "D4", "A4"}) {
        auto lattice = all_subgroups(group_from_name(name));
        CHECK(distributive_chain_length(lattice, ChainMode::BottomBoolean) <=
              distributive_chain_length(lattice, ChainMode::Distributive));
    }
}

TEST_CASE("check_upper_bound") {
    SUBCASE("S3") {
        auto g = group_from_name("S3");
        auto bound = check_upper_bound(all_subgroups(g), character_table(g));
        CHECK(bound.faithful_components == 1);
        CHECK(bound.chain_length >= 1);
        CHECK(bound.ok);
    }
    SUBCASE("Klein group: two components, two steps") {
        auto g = group_from_name("C2xC2");
        auto bound = check_upper_bound(all_subgroups(g), character_table(g));
        CHECK(bound.faithful_components == 2);
        CHECK(bound.chain_length == 2);
        CHECK(bound.ok);
    }
    SUBCASE("cyclic groups: one component, one step") {
        for (const char* name : {"C6", "C8", "C30"}) {
            auto g = group_from_name(name);
            auto bound = check_upper_bound(all_subgroups(g), character_table(g));
            CHECK(bound.faithful_components == 1);
            CHECK(bound.chain_length == 1);
            CHECK(bound.ok);
        }
    }
}

TEST_CASE("classify_interval") {
    SUBCASE("[S2, S4]: the transposition fixture") {
        auto s4 = group_from_name("S4");
        auto report = classify_interval(s4, span_of(s4, "(0 1)"));
        CHECK(report.linearly_primitive);
        CHECK(report.group_linearly_primitive);
        CHECK_FALSE(report.distributive);
        CHECK(report.h_cyclic);
        REQUIRE(report.witness.has_value());
        CHECK(report.num_nodes == 6);
        CHECK(report.coatom_sum_up == Rational(5, 6));
        CHECK(report.coatom_sum_down == Rational(7, 6));
        CHECK(report.height == 3);
    }
    SUBCASE("[<(0 1)(2 3)>, S4] is not linearly primitive") {
        auto s4 = group_from_name("S4");
        auto report = classify_interval(s4, span_of(s4, "(0 1)(2 3)"));
        CHECK_FALSE(report.linearly_primitive);
        CHECK(report.group_linearly_primitive);
    }
    SUBCASE("[G, G] is degenerate and all-true") {
        auto s3 = group_from_name("S3");
        auto report = classify_interval(s3, full_subgroup(s3));
        CHECK(report.distributive);
        CHECK(report.boolean_lattice);
        CHECK(report.dedekind);
        CHECK(report.cyclic);
        CHECK(report.h_cyclic);
        CHECK(report.linearly_primitive);
        REQUIRE(report.witness.has_value());
        CHECK(report.witness->is_identity());
        CHECK(report.height == 0);
    }
    SUBCASE("[e, S3]: linearly primitive but not cyclic") {
        auto s3 = group_from_name("S3");
        auto report = classify_interval(s3, trivial_subgroup(s3));
        CHECK(report.linearly_primitive);
        CHECK_FALSE(report.cyclic);
        CHECK_FALSE(report.dedekind);
        CHECK_FALSE(report.h_cyclic);  // S3 is not cyclic
        CHECK_FALSE(report.witness.has_value());
    }
    SUBCASE("JSON rendering is stable") {
        auto s3 = group_from_name("S3");
        auto report = classify_interval(s3, trivial_subgroup(s3));
        CHECK(report.coatom_sum_up == Rational(3, 2));    // 1/2 + 3 * (1/3)
        CHECK(report.coatom_sum_down == Rational(11, 6)); // 3 * (1/2) + 1/3
        CHECK(interval_report_to_json(report) == interval_report_to_json(report));
        CHECK(interval_report_to_json(report).find("\"coatom_sum_up\":\"3/2\"") !=
              std::string::npos);
    }
}

TEST_CASE("classification of A5 intervals") {
    auto a5 = group_from_name("A5");
    SUBCASE("[e, A5]: 59 subgroups, 21 maximal, index sum 3") {
        auto report = classify_interval(a5, trivial_subgroup(a5));
        CHECK(report.num_nodes == 59);
        CHECK(report.num_coatoms == 21);  // 5 x A4, 10 x S3, 6 x D5
        CHECK(report.coatom_sum_up == Rational(3));  // 5/5 + 10/10 + 6/6
        CHECK(report.height == 4);
        CHECK_FALSE(report.distributive);
        CHECK_FALSE(report.dedekind);
        CHECK_FALSE(report.h_cyclic);  // A5 is not cyclic
        CHECK(report.linearly_primitive);
        CHECK(report.group_linearly_primitive);
    }
    SUBCASE("[C5, A5] is the chain C5 < D5 < A5") {
        auto h = span_of(a5, "(0 1 2 3 4)");
        auto report = classify_interval(a5, h);
        CHECK(report.num_nodes == 3);
        CHECK(report.distributive);
        CHECK(report.cyclic);
        CHECK(report.h_cyclic);
        CHECK(report.coatom_sum_up == Rational(1, 6));   // [A5 : D5] = 6
        CHECK(report.coatom_sum_down == Rational(1, 2)); // [D5 : C5] = 2
    }
}

TEST_CASE("classification of S5 intervals") {
    auto s5 = group_from_name("S5");
    SUBCASE("[e, S5]: 156 subgroups, 22 maximal, index sum 7/2") {
        auto report = classify_interval(s5, trivial_subgroup(s5));
        CHECK(report.num_nodes == 156);
        CHECK(report.num_coatoms == 22);  // A5, 5 x S4, 6 x F20, 10 x S2xS3
        CHECK(report.coatom_sum_up == Rational(7, 2));  // 1/2 + 5/5 + 6/6 + 10/10
        CHECK(report.height == 5);
        CHECK_FALSE(report.h_cyclic);
        CHECK(report.linearly_primitive);
    }
    SUBCASE("[S2, S5] meets the index-sum bound exactly") {
        auto report = classify_interval(s5, span_of(s5, "(0 1)"));
        CHECK(report.num_nodes == 19);
        CHECK(report.coatom_sum_up == Rational(1));
        CHECK(report.h_cyclic);  // forced by the sum <= 1 criterion
    }
}

TEST_CASE("statw-converse fixture: sub- and dual-side flags of [S2, S4]") {
    // The interval is recorded as non-distributive while every one-sided
    // sub-interval stays singly generated on both sides; the frozen values
    // below are regression pins of the computed flags.
    auto s4 = group_from_name("S4");
    auto h = span_of(s4, "(0 1)");
    auto iv = interval(s4, h);
    REQUIRE_FALSE(is_distributive(iv.lattice));

    auto table = character_table(s4);
    for (const auto& k : iv.nodes) {
        // Upper piece [K, G].
        CHECK(is_h_cyclic(s4, k).has_value());
        CHECK(is_linearly_primitive_interval(table, k));
        // Lower piece [H, K]: classify inside the subgroup K.
        auto k_group = Group::from_generators(
            [&] {
                std::vector<Permutation> gens;
                for (int idx : k.element_indices()) gens.push_back(s4->element(idx));
                return gens;
            }(),
            s4->degree());
        REQUIRE(k_group->order() == k.order());
        auto h_in_k = subgroup_generated_by(k_group, {s4->element(s4->index_of(
                                                          parse_permutation("(0 1)", 4)))});
        CHECK(is_h_cyclic(k_group, h_in_k).has_value());
        CHECK(is_linearly_primitive_interval(character_table(k_group), h_in_k));
    }
}
