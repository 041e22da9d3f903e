#pragma once

#include <boost/dynamic_bitset.hpp>

#include <functional>
#include <vector>

namespace oretk {

using NodeMask = boost::dynamic_bitset<>;

/// A finite lattice with explicit meet/join tables.
///
/// Construction derives the tables from the order relation and validates
/// that the relation is a partial order in which every pair has a unique
/// infimum and supremum; throws InvalidLattice otherwise.
class FiniteLattice {
public:
    static FiniteLattice from_leq(int n, const std::function<bool(int, int)>& leq);

    int size() const { return n_; }
    bool leq(int a, int b) const { return up_[a].test(b); }
    int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * n_ + b]; }
    int join(int a, int b) const { return join_[static_cast<std::size_t>(a) * n_ + b]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }

    const NodeMask& up_set(int a) const { return up_[a]; }
    const NodeMask& down_set(int a) const { return down_[a]; }

    /// b covers a: a < b with nothing strictly between.
    bool covers(int b, int a) const;

    std::vector<int> atoms() const;
    std::vector<int> coatoms() const;

private:
    int n_ = 0;
    std::vector<NodeMask> up_, down_;
    std::vector<int> meet_, join_;
    int bottom_ = 0, top_ = 0;
};

/// Sublattice on {x : a <= x <= b} plus the original indices of its nodes.
struct SublatticeView {
    FiniteLattice lattice;
    std::vector<int> original;  // new index -> index in the parent lattice
};

SublatticeView interval_sublattice(const FiniteLattice& l, int a, int b);

bool is_distributive(const FiniteLattice& l);

/// Boolean test, computed by two routes that must agree: (a) distributive
/// with every element complemented, (b) node count is 2^#atoms and atom
/// supports are unique joins.
bool is_boolean(const FiniteLattice& l);

/// Interval from the meet of all coatoms up to the top.
FiniteLattice top_interval(const FiniteLattice& l);

/// Greatest length of a strict chain.
int height(const FiniteLattice& l);

bool is_top_boolean(const FiniteLattice& l);
bool is_bottom_boolean(const FiniteLattice& l);

std::vector<int> complements(const FiniteLattice& l, int x);

FiniteLattice dual(const FiniteLattice& l);
FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b);

/// Stacks b on top of a, identifying top(a) with bottom(b).
FiniteLattice concatenate(const FiniteLattice& a, const FiniteLattice& b);

}  // namespace oretk
