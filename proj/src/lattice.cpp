#include "oretk/lattice.hpp"

#include "oretk/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace oretk {

FiniteLattice FiniteLattice::from_leq(int n, const std::function<bool(int, int)>& leq) {
    if (n <= 0) throw InvalidLattice("lattice must have at least one node");
    FiniteLattice l;
    l.n_ = n;
    l.up_.assign(n, NodeMask(n));
    l.down_.assign(n, NodeMask(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (leq(a, b)) {
                l.up_[a].set(b);
                l.down_[b].set(a);
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        if (!l.up_[a].test(a)) throw InvalidLattice("order not reflexive");
        for (int b = 0; b < n; ++b) {
            if (a != b && l.up_[a].test(b) && l.up_[b].test(a)) {
                throw InvalidLattice("order not antisymmetric");
            }
            if (l.up_[a].test(b) && !l.up_[b].is_subset_of(l.up_[a])) {
                throw InvalidLattice("order not transitive");
            }
        }
    }

    l.bottom_ = l.top_ = -1;
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(l.up_[a].count()) == n) l.bottom_ = a;
        if (static_cast<int>(l.down_[a].count()) == n) l.top_ = a;
    }
    if (l.bottom_ < 0 || l.top_ < 0) {
        throw InvalidLattice("lattice needs a global bottom and top");
    }

    l.meet_.assign(static_cast<std::size_t>(n) * n, -1);
    l.join_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            NodeMask lower = l.down_[a] & l.down_[b];
            int m = -1;
            for (auto c = lower.find_first(); c != NodeMask::npos; c = lower.find_next(c)) {
                if (lower.is_subset_of(l.down_[c])) {
                    if (m != -1) throw InvalidLattice("meet not unique");
                    m = static_cast<int>(c);
                }
            }
            if (m == -1) throw InvalidLattice("pair without a meet");
            NodeMask upper = l.up_[a] & l.up_[b];
            int j = -1;
            for (auto c = upper.find_first(); c != NodeMask::npos; c = upper.find_next(c)) {
                if (upper.is_subset_of(l.up_[c])) {
                    if (j != -1) throw InvalidLattice("join not unique");
                    j = static_cast<int>(c);
                }
            }
            if (j == -1) throw InvalidLattice("pair without a join");
            l.meet_[static_cast<std::size_t>(a) * n + b] = m;
            l.meet_[static_cast<std::size_t>(b) * n + a] = m;
            l.join_[static_cast<std::size_t>(a) * n + b] = j;
            l.join_[static_cast<std::size_t>(b) * n + a] = j;
        }
    }
    return l;
}

bool FiniteLattice::covers(int b, int a) const {
    if (a == b || !leq(a, b)) return false;
    NodeMask between = up_[a] & down_[b];
    return between.count() == 2;  // only a and b
}

std::vector<int> FiniteLattice::atoms() const {
    std::vector<int> out;
    for (int x = 0; x < n_; ++x) {
        if (covers(x, bottom_)) out.push_back(x);
    }
    return out;
}

std::vector<int> FiniteLattice::coatoms() const {
    std::vector<int> out;
    for (int x = 0; x < n_; ++x) {
        if (covers(top_, x)) out.push_back(x);
    }
    return out;
}

SublatticeView interval_sublattice(const FiniteLattice& l, int a, int b) {
    if (!l.leq(a, b)) throw InvalidLattice("interval endpoints not comparable");
    std::vector<int> nodes;
    NodeMask range = l.up_set(a) & l.down_set(b);
    for (auto x = range.find_first(); x != NodeMask::npos; x = range.find_next(x)) {
        nodes.push_back(static_cast<int>(x));
    }
    FiniteLattice sub = FiniteLattice::from_leq(
        static_cast<int>(nodes.size()),
        [&](int i, int j) { return l.leq(nodes[i], nodes[j]); });
    return SublatticeView{std::move(sub), std::move(nodes)};
}

bool is_distributive(const FiniteLattice& l) {
    const int n = l.size();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_boolean(const FiniteLattice& l) {
    // Route (a): distributive and every element complemented.
    bool route_a = is_distributive(l);
    if (route_a) {
        for (int x = 0; x < l.size() && route_a; ++x) {
            route_a = !complements(l, x).empty();
        }
    }

    // Route (b): 2^#atoms nodes, each the join of a unique atom subset.
    auto atoms = l.atoms();
    bool route_b = atoms.size() < 30 && l.size() == (1 << atoms.size());
    if (route_b) {
        std::vector<NodeMask> atom_sets(l.size(), NodeMask(atoms.size()));
        for (int x = 0; x < l.size(); ++x) {
            int join_of_atoms = l.bottom();
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                if (l.leq(atoms[i], x)) {
                    atom_sets[x].set(i);
                    join_of_atoms = l.join(join_of_atoms, atoms[i]);
                }
            }
            if (join_of_atoms != x) {
                route_b = false;
                break;
            }
        }
        if (route_b) {
            for (int x = 0; x < l.size() && route_b; ++x) {
                for (int y = x + 1; y < l.size(); ++y) {
                    if (atom_sets[x] == atom_sets[y]) {
                        route_b = false;
                        break;
                    }
                }
            }
        }
    }

    if (route_a != route_b) {
        throw std::logic_error("boolean-lattice detection routes disagree");
    }
    return route_a;
}

FiniteLattice top_interval(const FiniteLattice& l) {
    auto coats = l.coatoms();
    int t = l.top();
    for (int c : coats) t = l.meet(t, c);
    return interval_sublattice(l, t, l.top()).lattice;
}

int height(const FiniteLattice& l) {
    const int n = l.size();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return l.down_set(a).count() < l.down_set(b).count();
    });
    std::vector<int> h(n, 0);
    for (int x : order) {
        for (int y = 0; y < n; ++y) {
            if (y != x && l.leq(y, x)) h[x] = std::max(h[x], h[y] + 1);
        }
    }
    return h[l.top()];
}

bool is_top_boolean(const FiniteLattice& l) { return is_boolean(top_interval(l)); }

bool is_bottom_boolean(const FiniteLattice& l) { return is_boolean(top_interval(dual(l))); }

std::vector<int> complements(const FiniteLattice& l, int x) {
    std::vector<int> out;
    for (int y = 0; y < l.size(); ++y) {
        if (l.meet(x, y) == l.bottom() && l.join(x, y) == l.top()) out.push_back(y);
    }
    return out;
}

FiniteLattice dual(const FiniteLattice& l) {
    return FiniteLattice::from_leq(l.size(), [&](int a, int b) { return l.leq(b, a); });
}

FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b) {
    const int nb = b.size();
    return FiniteLattice::from_leq(a.size() * nb, [&](int x, int y) {
        return a.leq(x / nb, y / nb) && b.leq(x % nb, y % nb);
    });
}

FiniteLattice concatenate(const FiniteLattice& a, const FiniteLattice& b) {
    // Nodes of a, then nodes of b except its bottom; top(a) plays bottom(b).
    const int na = a.size();
    const int n = na + b.size() - 1;
    auto to_b = [&](int x) {
        // Maps a combined index to an index in b, if it lies in the b part.
        int shifted = x - na;
        return shifted >= b.bottom() ? shifted + 1 : shifted;
    };
    return FiniteLattice::from_leq(n, [&](int x, int y) {
        bool xa = x < na, ya = y < na;
        if (xa && ya) return a.leq(x, y);
        if (xa) return true;    // a part sits below the whole b part
        if (ya) return false;   // b part (minus its bottom) sits strictly above
        return b.leq(to_b(x), to_b(y));
    });
}

}  // namespace oretk
