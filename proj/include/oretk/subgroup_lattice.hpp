#pragma once

#include "oretk/group.hpp"
#include "oretk/lattice.hpp"

namespace oretk {

/// All subgroups of a group, canonically ordered by (order, element list),
/// together with the containment lattice.
struct SubgroupLattice {
    GroupPtr group;
    std::vector<Subgroup> nodes;
    FiniteLattice lattice;

    int index_of(const ElementMask& mask) const;
};

/// Enumerates every subgroup by closing the cyclic subgroups under join.
/// Throws CapExceeded when |G| passes `subgroup_cap`.
SubgroupLattice all_subgroups(const GroupPtr& g, int subgroup_cap = kDefaultSubgroupCap);

/// The interval [H, G]: all subgroups K with H <= K <= G.
struct IntervalOfGroups {
    GroupPtr group;
    Subgroup bottom_subgroup;
    std::vector<Subgroup> nodes;
    FiniteLattice lattice;
    int bottom = 0;
    int top = 0;

    int index_of(const ElementMask& mask) const;
};

IntervalOfGroups interval(const GroupPtr& g, const Subgroup& h,
                          int subgroup_cap = kDefaultSubgroupCap);

/// Same, reusing a precomputed subgroup lattice.
IntervalOfGroups interval_in(const SubgroupLattice& all, const Subgroup& h);

/// Interval equivalence: an isomorphism of the core-quotients matching the
/// bottom subgroups. May throw CapExceeded (delegates to are_isomorphic).
bool interval_equivalent(const IntervalOfGroups& i1, const IntervalOfGroups& i2,
                         int iso_cap = kDefaultIsoCap);

}  // namespace oretk
