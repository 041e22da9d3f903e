#pragma once

#include "oretk/chartable.hpp"
#include "oretk/rational.hpp"
#include "oretk/subgroup_lattice.hpp"

#include <optional>
#include <string>

namespace oretk {

/// Which side of the interval the coatom index sum is taken on: Up sums
/// 1/[G:M] over coatoms of [H,G], Down sums 1/[M:H] over its atoms.
enum class CoatomSide { Up, Down };

enum class ChainMode { Distributive, BottomBoolean };

/// Classification flags of one interval [H, G].
struct IntervalReport {
    std::string interval_id;
    bool distributive = false;
    bool boolean_lattice = false;
    bool top_boolean = false;
    bool bottom_boolean = false;
    bool dedekind = false;
    bool cyclic = false;
    bool h_cyclic = false;
    bool linearly_primitive = false;        // the interval, via fixed points
    bool group_linearly_primitive = false;  // the ambient group itself
    std::optional<Permutation> witness;     // verified H-cyclicity witness
    Rational coatom_sum_up;
    Rational coatom_sum_down;
    int height = 0;
    int num_nodes = 0;
    int num_coatoms = 0;
    int subgroup_order = 0;
    int group_order = 0;
};

/// Scans one representative per H-double-coset for g with <H, g> = G.
/// Returns the witness element index, or nullopt.
std::optional<int> is_h_cyclic(const GroupPtr& g, const Subgroup& h);

/// Same scan but over every element (the reference implementation the
/// double-coset restriction is tested against).
std::optional<int> is_h_cyclic_full_scan(const GroupPtr& g, const Subgroup& h);

/// Constructive witness for a distributive interval: reduce to the (boolean)
/// top interval, recurse on a coatom and its complement, multiply the two
/// sub-witnesses. No exhaustive search; the result is re-verified.
/// Throws NotDistributive or WitnessVerificationFailed.
Permutation ore_witness_distributive(const IntervalOfGroups& iv);

/// Every K in [H,G] satisfies HgK = KgH for all g in G.
bool is_dedekind_interval(const IntervalOfGroups& iv);

/// Dedekind and distributive.
bool is_cyclic_interval(const IntervalOfGroups& iv);

Rational coatom_index_sum(const IntervalOfGroups& iv, CoatomSide side);

struct DualOreVerdict {
    bool holds = false;
    std::string context;  // filled for counterexamples
};

/// Checks that a distributive interval is linearly primitive; a false
/// verdict is a reportable counterexample, not an error.
DualOreVerdict dual_ore_check(const IntervalOfGroups& iv, const CharacterTable& table);

/// Shortest chain {e} = H_0 < ... < H_l = G whose step intervals satisfy
/// the mode predicate. Throws NoChain if no such chain exists.
int distributive_chain_length(const SubgroupLattice& all, ChainMode mode);

struct BoundCheck {
    int faithful_components = 0;  // m
    int chain_length = 0;         // l
    bool ok = false;              // m <= l
};

BoundCheck check_upper_bound(const SubgroupLattice& all, const CharacterTable& table);

/// Populates every flag of the report; internally asserts the theorem-backed
/// implications (a distributive interval must produce a verified witness).
IntervalReport classify_interval(const IntervalOfGroups& iv, const CharacterTable& table);

/// Convenience overload computing the lattice and table itself.
IntervalReport classify_interval(const GroupPtr& g, const Subgroup& h,
                                 int subgroup_cap = kDefaultSubgroupCap,
                                 int chartable_cap = kDefaultCharTableCap);

/// JSON rendering of a report (ordered keys, byte-stable).
std::string interval_report_to_json(const IntervalReport& report, bool pretty = false);

}  // namespace oretk
