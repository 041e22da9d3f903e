#include "oretk/subgroup_lattice.hpp"

#include "oretk/errors.hpp"

#include <algorithm>
#include <set>

namespace oretk {

namespace {

// Canonical node order: by order, then by ascending element list.
bool mask_less(const ElementMask& a, const ElementMask& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    auto i = a.find_first();
    auto j = b.find_first();
    while (i != ElementMask::npos && j != ElementMask::npos) {
        if (i != j) return i < j;
        i = a.find_next(i);
        j = b.find_next(j);
    }
    return false;
}

ElementMask join_masks(const GroupPtr& g, const ElementMask& a, const ElementMask& b) {
    if (b.is_subset_of(a)) return a;
    ElementMask closure = a;
    std::vector<int> frontier;
    for (auto i = closure.find_first(); i != ElementMask::npos; i = closure.find_next(i)) {
        frontier.push_back(static_cast<int>(i));
    }
    std::vector<int> gens;
    for (auto i = b.find_first(); i != ElementMask::npos; i = b.find_next(i)) {
        gens.push_back(static_cast<int>(i));
        if (!closure.test(i)) {
            closure.set(i);
            frontier.push_back(static_cast<int>(i));
        }
    }
    for (auto i = a.find_first(); i != ElementMask::npos; i = a.find_next(i)) {
        gens.push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (int s : gens) {
            int next = g->multiply(frontier[i], s);
            if (!closure.test(next)) {
                closure.set(next);
                frontier.push_back(next);
            }
        }
    }
    return closure;
}

}  // namespace

int SubgroupLattice::index_of(const ElementMask& mask) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].mask == mask) return static_cast<int>(i);
    }
    return -1;
}

int IntervalOfGroups::index_of(const ElementMask& mask) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].mask == mask) return static_cast<int>(i);
    }
    return -1;
}

SubgroupLattice all_subgroups(const GroupPtr& g, int subgroup_cap) {
    if (g->order() > subgroup_cap) {
        throw CapExceeded("group order " + std::to_string(g->order()) +
                          " passes the subgroup-enumeration cap " + std::to_string(subgroup_cap));
    }
    const int n = g->order();

    // Cyclic subgroups, one per element (deduplicated).
    std::set<ElementMask> seen;
    std::vector<ElementMask> cyclic;
    for (int x = 0; x < n; ++x) {
        ElementMask m = g->empty_mask();
        int y = g->identity_index();
        m.set(y);
        y = x;
        while (!m.test(y)) {
            m.set(y);
            y = g->multiply(y, x);
        }
        if (seen.insert(m).second) cyclic.push_back(m);
    }

    // Close under join with cyclic subgroups; every subgroup is such a join.
    std::vector<ElementMask> worklist(cyclic.begin(), cyclic.end());
    for (std::size_t i = 0; i < worklist.size(); ++i) {
        for (const auto& c : cyclic) {
            ElementMask j = join_masks(g, worklist[i], c);
            if (seen.insert(j).second) worklist.push_back(std::move(j));
        }
    }

    std::vector<ElementMask> masks(seen.begin(), seen.end());
    std::sort(masks.begin(), masks.end(), mask_less);

    SubgroupLattice out;
    out.group = g;
    out.nodes.reserve(masks.size());
    for (auto& m : masks) out.nodes.push_back(Subgroup{g, std::move(m)});
    out.lattice = FiniteLattice::from_leq(
        static_cast<int>(out.nodes.size()),
        [&](int a, int b) { return out.nodes[a].mask.is_subset_of(out.nodes[b].mask); });
    return out;
}

IntervalOfGroups interval_in(const SubgroupLattice& all, const Subgroup& h) {
    std::vector<int> selected;
    for (std::size_t i = 0; i < all.nodes.size(); ++i) {
        if (h.mask.is_subset_of(all.nodes[i].mask)) selected.push_back(static_cast<int>(i));
    }
    IntervalOfGroups out;
    out.group = all.group;
    out.bottom_subgroup = h;
    for (int idx : selected) out.nodes.push_back(all.nodes[idx]);
    out.lattice = FiniteLattice::from_leq(
        static_cast<int>(out.nodes.size()),
        [&](int a, int b) { return out.nodes[a].mask.is_subset_of(out.nodes[b].mask); });
    out.bottom = out.index_of(h.mask);
    out.top = out.index_of(all.group->full_mask());
    if (out.bottom < 0 || out.top < 0) {
        throw ElementNotInGroup("interval bottom is not a subgroup of the parent");
    }
    return out;
}

IntervalOfGroups interval(const GroupPtr& g, const Subgroup& h, int subgroup_cap) {
    if (h.parent != g) throw GroupMismatch("subgroup belongs to a different group");
    return interval_in(all_subgroups(g, subgroup_cap), h);
}

bool interval_equivalent(const IntervalOfGroups& i1, const IntervalOfGroups& i2, int iso_cap) {
    const GroupPtr& b = i1.group;
    const GroupPtr& d = i2.group;
    Subgroup a = i1.bottom_subgroup;
    Subgroup c = i2.bottom_subgroup;

    Subgroup core1 = core(b, a);
    Subgroup core2 = core(d, c);
    if (b->order() / core1.order() != d->order() / core2.order()) return false;
    if (a.order() / core1.order() != c.order() / core2.order()) return false;

    QuotientResult q1 = quotient(b, core1);
    QuotientResult q2 = quotient(d, core2);

    ElementMask image1 = q1.group->empty_mask();
    for (auto i = a.mask.find_first(); i != ElementMask::npos; i = a.mask.find_next(i)) {
        image1.set(q1.hom[i]);
    }
    ElementMask image2 = q2.group->empty_mask();
    for (auto i = c.mask.find_first(); i != ElementMask::npos; i = c.mask.find_next(i)) {
        image2.set(q2.hom[i]);
    }

    IsoConstraint constraint{std::move(image1), std::move(image2)};
    return are_isomorphic(q1.group, q2.group, iso_cap, &constraint).has_value();
}

}  // namespace oretk
