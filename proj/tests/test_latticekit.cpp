#include "oretk/errors.hpp"
#include "oretk/lattice.hpp"

#include "lattice_samples.hpp"

#include <doctest.h>

using namespace oretk;
using namespace oretk::samples;

TEST_CASE("lattice construction validates structure") {
    // A poset that is not a lattice: two maximal elements.
    CHECK_THROWS_AS(FiniteLattice::from_leq(3, [](int a, int b) { return a == b || a == 0; }),
                    InvalidLattice);
    // Not antisymmetric.
    CHECK_THROWS_AS(FiniteLattice::from_leq(2, [](int, int) { return true; }), InvalidLattice);
    // Meet/join tables are compatible with the order.
    auto b3 = boolean_lattice(3);
    for (int a = 0; a < b3.size(); ++a) {
        CHECK(b3.meet(a, a) == a);
        CHECK(b3.join(a, a) == a);
        for (int b = 0; b < b3.size(); ++b) {
            CHECK((b3.leq(a, b) == (b3.meet(a, b) == a)));
            CHECK((b3.leq(a, b) == (b3.join(a, b) == b)));
            CHECK(b3.meet(a, b) == b3.meet(b, a));
            CHECK(b3.join(a, b) == b3.join(b, a));
            for (int c = 0; c < b3.size(); ++c) {
                CHECK(b3.meet(a, b3.meet(b, c)) == b3.meet(b3.meet(a, b), c));
                CHECK(b3.join(a, b3.join(b, c)) == b3.join(b3.join(a, b), c));
            }
        }
    }
}

TEST_CASE("is_distributive") {
    CHECK(is_distributive(divisor_lattice(30)));
    CHECK_FALSE(is_distributive(diamond_m3()));
    CHECK_FALSE(is_distributive(pentagon_n5()));
    CHECK(is_distributive(chain(1)));
    CHECK(is_distributive(chain(4)));
}

TEST_CASE("is_boolean") {
    CHECK(is_boolean(divisor_lattice(30)));  // three prime factors: B_3
    CHECK_FALSE(is_boolean(chain(3)));       // middle node has no complement
    CHECK(is_boolean(chain(2)));             // B_1
    CHECK(is_boolean(chain(1)));             // B_0
    CHECK(is_boolean(boolean_lattice(4)));
    CHECK_FALSE(is_boolean(divisor_lattice(12)));
    CHECK_FALSE(is_boolean(diamond_m3()));
}

TEST_CASE("atoms and coatoms") {
    auto b3 = boolean_lattice(3);
    CHECK(b3.atoms().size() == 3);
    CHECK(b3.coatoms().size() == 3);
    CHECK(chain(4).atoms().size() == 1);
    // Divisor lattice of 30: coatoms are 15, 10, 6.
    auto d30 = divisor_lattice(30);
    std::vector<int> divisors = {1, 2, 3, 5, 6, 10, 15, 30};
    std::vector<int> coatom_values;
    for (int c : d30.coatoms()) coatom_values.push_back(divisors[c]);
    std::sort(coatom_values.begin(), coatom_values.end());
    CHECK(coatom_values == std::vector<int>{6, 10, 15});
}

TEST_CASE("top_interval") {
    SUBCASE("top interval of a distributive lattice is boolean") {
        for (int n : {12, 30, 60, 72, 100}) {
            CHECK(is_boolean(top_interval(divisor_lattice(n))));
        }
        CHECK(is_boolean(top_interval(chain(5))));
    }
    SUBCASE("top interval of B_n is B_n") {
        auto b3 = boolean_lattice(3);
        CHECK(top_interval(b3).size() == b3.size());
    }
    SUBCASE("top interval of a chain is B_1") {
        CHECK(top_interval(chain(4)).size() == 2);
    }
    SUBCASE("single point") {
        CHECK(top_interval(chain(1)).size() == 1);
    }
}

TEST_CASE("height") {
    CHECK(height(boolean_lattice(3)) == 3);
    CHECK(height(boolean_lattice(1)) == 1);
    CHECK(height(chain(1)) == 0);
    CHECK(height(divisor_lattice(30)) == 3);
    CHECK(height(divisor_lattice(12)) == 3);  // 1 | 2 | 4 | 12
}

TEST_CASE("top and bottom boolean") {
    CHECK(is_top_boolean(divisor_lattice(12)));
    CHECK(is_bottom_boolean(divisor_lattice(12)));
    CHECK(is_top_boolean(boolean_lattice(2)));
    // M3: the meet of the coatoms is the bottom, so the top interval is all
    // of M3, which is not boolean.
    CHECK_FALSE(is_top_boolean(diamond_m3()));
    CHECK_FALSE(is_bottom_boolean(diamond_m3()));
    // N5 has two coatoms meeting at the bottom.
    CHECK_FALSE(is_top_boolean(pentagon_n5()));
}

TEST_CASE("complements") {
    auto b3 = boolean_lattice(3);
    for (int x = 0; x < b3.size(); ++x) {
        auto comp = complements(b3, x);
        REQUIRE(comp.size() == 1);
        CHECK(comp.front() == (~x & 7));
    }
    CHECK(complements(chain(3), 0) == std::vector<int>{2});
    CHECK(complements(chain(3), 1).empty());
    // In any distributive lattice complements are unique when they exist.
    for (int n : {12, 30, 60, 90}) {
        auto l = divisor_lattice(n);
        for (int x = 0; x < l.size(); ++x) {
            CHECK(complements(l, x).size() <= 1);
        }
    }
}

TEST_CASE("boolean implies node count is a power of the height") {
    for (int k : {0, 1, 2, 3, 4}) {
        auto b = boolean_lattice(k);
        REQUIRE(is_boolean(b));
        CHECK(b.size() == (1 << height(b)));
    }
}

TEST_CASE("distributivity is stable under reversal, sublattices, products, concatenation") {
    std::vector<FiniteLattice> family;
    family.push_back(divisor_lattice(30));
    family.push_back(divisor_lattice(12));
    family.push_back(chain(4));
    family.push_back(boolean_lattice(2));

    for (const auto& l : family) {
        REQUIRE(is_distributive(l));
        CHECK(is_distributive(dual(l)));
        for (int a = 0; a < l.size(); ++a) {
            for (int b = 0; b < l.size(); ++b) {
                if (!l.leq(a, b)) continue;
                CHECK(is_distributive(interval_sublattice(l, a, b).lattice));
            }
        }
    }
    for (const auto& a : family) {
        for (const auto& b : family) {
            CHECK(is_distributive(direct_product(a, b)));
            auto stacked = concatenate(a, b);
            CHECK(is_distributive(stacked));
            CHECK(stacked.size() == a.size() + b.size() - 1);
            CHECK(height(stacked) == height(a) + height(b));
        }
    }
    // Non-distributive inputs stay non-distributive under these operations.
    CHECK_FALSE(is_distributive(dual(diamond_m3())));
    CHECK_FALSE(is_distributive(direct_product(diamond_m3(), chain(2))));
    CHECK_FALSE(is_distributive(concatenate(chain(2), pentagon_n5())));
}
