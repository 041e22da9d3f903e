#pragma once

#include "oretk/group.hpp"

#include <cstdint>
#include <vector>

namespace oretk {

/// Irreducible character values as residues modulo a prime p with
/// p = 1 mod exponent(G) and p > 2|G|. Rows are characters (sorted by
/// degree, then by value row), columns are conjugacy classes in the
/// group's canonical class order.
struct CharacterTable {
    GroupPtr group;
    std::uint64_t prime = 0;
    std::vector<int> class_reps;      // minimal element index per class
    std::vector<int> class_sizes;
    std::vector<int> inverse_class;   // class index of the inverses
    std::vector<std::vector<std::uint64_t>> values;  // [character][class]
    std::vector<int> degrees;

    int num_classes() const { return static_cast<int>(class_reps.size()); }
    int num_characters() const { return static_cast<int>(values.size()); }
};

/// Burnside–Dixon: class-matrix eigenvectors over F_p, split by seeded
/// random linear combinations with a deterministic per-matrix fallback;
/// restarts with the next prime on degeneracy.
CharacterTable character_table(const GroupPtr& g, int cap = kDefaultCharTableCap);

/// dim V_i^K as an exact integer in [0, degree], lifted from the residue
/// |K|^-1 sum_{k in K} chi_i(k). Throws LiftOutOfRange if the lift falls
/// outside [0, degree] (table corruption).
int fixed_point_dim(const CharacterTable& t, int character, const Subgroup& k);

/// {g : dim V_i^<g> = degree(chi_i)}; verified normal.
Subgroup character_kernel(const CharacterTable& t, int character);

/// True iff the pointwise stabilizer of V_i^H is exactly H: every g outside
/// H must strictly shrink the fixed space of <H, g>.
bool pointwise_stabilizer_is_h(const CharacterTable& t, int character, const Subgroup& h);

/// Some irreducible has pointwise stabilizer exactly H.
bool is_linearly_primitive_interval(const CharacterTable& t, const Subgroup& h);
bool is_linearly_primitive_interval(const GroupPtr& g, const Subgroup& h,
                                    int cap = kDefaultCharTableCap);

/// Smallest r such that r character kernels intersect trivially.
int min_faithful_components(const CharacterTable& t);
int min_faithful_components(const GroupPtr& g, int cap = kDefaultCharTableCap);

}  // namespace oretk
