#pragma once

#include "oretk/permutation.hpp"

#include <boost/dynamic_bitset.hpp>

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace oretk {

inline constexpr int kDefaultOrderCap = 10080;
inline constexpr int kDefaultSubgroupCap = 720;
inline constexpr int kDefaultIsoCap = 720;
inline constexpr int kDefaultCharTableCap = 720;

/// Caps shared by the heavy operations; overridable from the CLI environment.
struct Caps {
    int order_cap = kDefaultOrderCap;
    int subgroup_cap = kDefaultSubgroupCap;
    int iso_cap = kDefaultIsoCap;
};

using ElementMask = boost::dynamic_bitset<>;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite permutation group with its full element set enumerated.
///
/// Elements are stored sorted (lexicographically by image array), so the
/// identity always has index 0. All state is immutable after construction
/// except the conjugacy-class cache, which is filled once under a lock.
class Group {
public:
    /// Breadth-first closure of the generators. Throws CapExceeded if the
    /// closure passes `order_cap`, DegreeMismatch on inconsistent degrees.
    static GroupPtr from_generators(std::vector<Permutation> generators, int degree,
                                    int order_cap = kDefaultOrderCap);

    int degree() const { return degree_; }
    int order() const { return static_cast<int>(elements_.size()); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<int>& generator_indices() const { return generator_indices_; }

    /// Index into elements(), or -1 if absent.
    int index_of(const Permutation& p) const;
    const Permutation& element(int index) const { return elements_[index]; }

    int identity_index() const { return identity_index_; }
    int multiply(int a, int b) const;
    int inverse(int a) const { return inverse_[a]; }
    int conjugate(int g, int x) const;  // g x g^-1
    int element_order(int a) const { return element_order_[a]; }
    int exponent() const;  // lcm of element orders

    /// Conjugacy classes as sorted index lists, ordered by minimal element;
    /// the identity class comes first. Computed lazily, thread-safe.
    const std::vector<std::vector<int>>& conjugacy_classes() const;
    /// Element index -> class index.
    const std::vector<int>& class_of() const;

    ElementMask empty_mask() const { return ElementMask(elements_.size()); }
    ElementMask full_mask() const;

private:
    Group() = default;
    void ensure_classes() const;

    int degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<int> generator_indices_;
    std::vector<Permutation> elements_;
    std::vector<int> inverse_;
    std::vector<int> element_order_;
    std::vector<uint16_t> mult_table_;  // empty when order is above the table limit
    int identity_index_ = 0;

    mutable std::mutex class_mutex_;
    mutable std::vector<std::vector<int>> classes_;
    mutable std::vector<int> class_of_;
};

/// A subgroup given by its element set inside a fixed parent group.
struct Subgroup {
    GroupPtr parent;
    ElementMask mask;

    int order() const { return static_cast<int>(mask.count()); }
    bool contains(int index) const { return mask.test(index); }
    std::vector<int> element_indices() const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent == b.parent && a.mask == b.mask;
    }
};

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);

/// Smallest subgroup containing the seed elements (given by indices).
Subgroup subgroup_generated(const GroupPtr& g, std::span<const int> seed);

/// Overload taking explicit permutations; throws ElementNotInGroup.
Subgroup subgroup_generated_by(const GroupPtr& g, const std::vector<Permutation>& seed);

/// Validates closure under product/inverse and presence of the identity.
bool is_subgroup_mask(const GroupPtr& g, const ElementMask& mask);

/// Builds a Subgroup from an element mask, validating closure.
Subgroup subgroup_from_mask(const GroupPtr& g, ElementMask mask);

/// Largest normal subgroup of g contained in h.
Subgroup core(const GroupPtr& g, const Subgroup& h);

bool is_normal(const GroupPtr& g, const Subgroup& k);

/// Result of quotient(): the coset group plus the projection homomorphism.
struct QuotientResult {
    GroupPtr group;
    std::vector<int> hom;  // parent element index -> quotient element index
};

/// Permutation group induced by left multiplication on the cosets of n.
/// Throws NotNormal when n is not normal in g.
QuotientResult quotient(const GroupPtr& g, const Subgroup& n);

/// Optional constraint for isomorphism search: require image(first) == second.
struct IsoConstraint {
    ElementMask from;  // subgroup of g1
    ElementMask to;    // subgroup of g2
};

/// Full element-index map g1 -> g2 extending a generator-image map, or
/// nullopt. The returned map is verified to be a bijective homomorphism.
/// Throws CapExceeded when either order passes `iso_cap`.
std::optional<std::vector<int>> are_isomorphic(const GroupPtr& g1, const GroupPtr& g2,
                                               int iso_cap = kDefaultIsoCap,
                                               const IsoConstraint* constraint = nullptr);

/// Minimal-length generating sequence, greedy by descending element order.
std::vector<int> generating_sequence(const GroupPtr& g);

/// Greedy generating sequence for a subgroup, in ascending element order.
std::vector<int> generating_sequence_of(const Subgroup& h);

/// "e" for the trivial subgroup, else comma-joined cycle notation of a
/// greedy generating sequence.
std::string subgroup_label(const Subgroup& h);

}  // namespace oretk
