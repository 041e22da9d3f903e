#include "oretk/group.hpp"

#include "oretk/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace oretk {

namespace {
constexpr int kMultTableMaxOrder = 2048;
}

GroupPtr Group::from_generators(std::vector<Permutation> generators, int degree, int order_cap) {
    for (const auto& g : generators) {
        if (g.degree() != degree) {
            throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                                 " does not match group degree " + std::to_string(degree));
        }
    }

    std::set<Permutation> closure;
    std::deque<Permutation> frontier;
    Permutation id = Permutation::identity(degree);
    closure.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        Permutation current = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) {
            Permutation next = current * g;
            if (closure.insert(next).second) {
                if (static_cast<int>(closure.size()) > order_cap) {
                    throw CapExceeded("group closure passed the order cap " +
                                      std::to_string(order_cap));
                }
                frontier.push_back(std::move(next));
            }
        }
    }

    auto group = std::shared_ptr<Group>(new Group());
    group->degree_ = degree;
    group->generators_ = std::move(generators);
    group->elements_.assign(closure.begin(), closure.end());  // sorted by std::set

    const int n = group->order();
    group->identity_index_ = group->index_of(id);

    if (n <= kMultTableMaxOrder) {
        group->mult_table_.resize(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                int idx = group->index_of(group->elements_[a] * group->elements_[b]);
                group->mult_table_[static_cast<std::size_t>(a) * n + b] =
                    static_cast<uint16_t>(idx);
            }
        }
    }

    group->inverse_.resize(n);
    group->element_order_.resize(n);
    for (int a = 0; a < n; ++a) {
        group->inverse_[a] = group->index_of(group->elements_[a].inverse());
        group->element_order_[a] = group->elements_[a].order();
    }
    group->generator_indices_.reserve(group->generators_.size());
    for (const auto& g : group->generators_) {
        group->generator_indices_.push_back(group->index_of(g));
    }
    return group;
}

int Group::index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || !(*it == p)) return -1;
    return static_cast<int>(it - elements_.begin());
}

int Group::multiply(int a, int b) const {
    if (!mult_table_.empty()) {
        return mult_table_[static_cast<std::size_t>(a) * elements_.size() + b];
    }
    return index_of(elements_[a] * elements_[b]);
}

int Group::conjugate(int g, int x) const { return multiply(multiply(g, x), inverse_[g]); }

int Group::exponent() const {
    long long e = 1;
    for (int o : element_order_) e = std::lcm(e, static_cast<long long>(o));
    return static_cast<int>(e);
}

void Group::ensure_classes() const {
    std::lock_guard<std::mutex> lock(class_mutex_);
    if (!classes_.empty()) return;
    const int n = order();
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < n; ++x) {
        if (cls[x] != -1) continue;
        int id = static_cast<int>(classes.size());
        std::vector<int> orbit = {x};
        cls[x] = id;
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            for (int g : generator_indices_) {
                int y = conjugate(g, orbit[i]);
                if (cls[y] == -1) {
                    cls[y] = id;
                    orbit.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    class_of_ = std::move(cls);
    classes_ = std::move(classes);
}

const std::vector<std::vector<int>>& Group::conjugacy_classes() const {
    ensure_classes();
    return classes_;
}

const std::vector<int>& Group::class_of() const {
    ensure_classes();
    return class_of_;
}

ElementMask Group::full_mask() const {
    ElementMask m(elements_.size());
    m.set();
    return m;
}

std::vector<int> Subgroup::element_indices() const {
    std::vector<int> out;
    out.reserve(mask.count());
    for (auto i = mask.find_first(); i != ElementMask::npos; i = mask.find_next(i)) {
        out.push_back(static_cast<int>(i));
    }
    return out;
}

Subgroup trivial_subgroup(const GroupPtr& g) {
    ElementMask m = g->empty_mask();
    m.set(g->identity_index());
    return Subgroup{g, std::move(m)};
}

Subgroup full_subgroup(const GroupPtr& g) { return Subgroup{g, g->full_mask()}; }

Subgroup subgroup_generated(const GroupPtr& g, std::span<const int> seed) {
    ElementMask m = g->empty_mask();
    std::vector<int> frontier;
    int e = g->identity_index();
    m.set(e);
    frontier.push_back(e);
    std::vector<int> gens(seed.begin(), seed.end());
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (int s : gens) {
            int next = g->multiply(frontier[i], s);
            if (!m.test(next)) {
                m.set(next);
                frontier.push_back(next);
            }
        }
    }
    return Subgroup{g, std::move(m)};
}

Subgroup subgroup_generated_by(const GroupPtr& g, const std::vector<Permutation>& seed) {
    std::vector<int> indices;
    indices.reserve(seed.size());
    for (const auto& p : seed) {
        int idx = g->index_of(p);
        if (idx < 0) {
            throw ElementNotInGroup("seed element " + p.to_cycle_string() +
                                    " is not in the group");
        }
        indices.push_back(idx);
    }
    return subgroup_generated(g, indices);
}

bool is_subgroup_mask(const GroupPtr& g, const ElementMask& mask) {
    if (!mask.test(g->identity_index())) return false;
    std::vector<int> idx;
    for (auto i = mask.find_first(); i != ElementMask::npos; i = mask.find_next(i)) {
        idx.push_back(static_cast<int>(i));
    }
    for (int a : idx) {
        if (!mask.test(g->inverse(a))) return false;
        for (int b : idx) {
            if (!mask.test(g->multiply(a, b))) return false;
        }
    }
    return true;
}

Subgroup subgroup_from_mask(const GroupPtr& g, ElementMask mask) {
    if (!is_subgroup_mask(g, mask)) {
        throw ElementNotInGroup("element set is not closed; not a subgroup");
    }
    return Subgroup{g, std::move(mask)};
}

Subgroup core(const GroupPtr& g, const Subgroup& h) {
    // The core is the union of the conjugacy classes fully contained in h.
    ElementMask m = g->empty_mask();
    for (const auto& cls : g->conjugacy_classes()) {
        bool inside = std::all_of(cls.begin(), cls.end(), [&](int x) { return h.mask.test(x); });
        if (inside) {
            for (int x : cls) m.set(x);
        }
    }
    return Subgroup{g, std::move(m)};
}

bool is_normal(const GroupPtr& g, const Subgroup& k) {
    for (int gen : g->generator_indices()) {
        for (auto i = k.mask.find_first(); i != ElementMask::npos; i = k.mask.find_next(i)) {
            if (!k.mask.test(g->conjugate(gen, static_cast<int>(i)))) return false;
        }
    }
    return true;
}

QuotientResult quotient(const GroupPtr& g, const Subgroup& n) {
    if (!is_normal(g, n)) throw NotNormal("subgroup is not normal; quotient undefined");
    const int order = g->order();
    std::vector<int> coset_id(order, -1);
    std::vector<int> coset_rep;
    auto members = n.element_indices();
    for (int x = 0; x < order; ++x) {
        if (coset_id[x] != -1) continue;
        int id = static_cast<int>(coset_rep.size());
        coset_rep.push_back(x);
        for (int m : members) coset_id[g->multiply(x, m)] = id;
    }
    const int num_cosets = static_cast<int>(coset_rep.size());

    auto action = [&](int elem) {
        std::vector<int> im(num_cosets);
        for (int c = 0; c < num_cosets; ++c) {
            im[c] = coset_id[g->multiply(elem, coset_rep[c])];
        }
        return Permutation(std::move(im));
    };

    std::vector<Permutation> quot_gens;
    quot_gens.reserve(g->generator_indices().size());
    for (int gen : g->generator_indices()) quot_gens.push_back(action(gen));
    GroupPtr q = Group::from_generators(std::move(quot_gens), num_cosets, order);
    if (q->order() * n.order() != order) {
        throw Error("internal: quotient order mismatch");  // unreachable for normal n
    }

    std::vector<int> hom(order);
    for (int x = 0; x < order; ++x) hom[x] = q->index_of(action(x));
    QuotientResult result;
    result.group = std::move(q);
    result.hom = std::move(hom);
    return result;
}

std::vector<int> generating_sequence(const GroupPtr& g) {
    const int n = g->order();
    std::vector<int> order_sorted(n);
    std::iota(order_sorted.begin(), order_sorted.end(), 0);
    std::sort(order_sorted.begin(), order_sorted.end(), [&](int a, int b) {
        if (g->element_order(a) != g->element_order(b)) {
            return g->element_order(a) > g->element_order(b);
        }
        return a < b;
    });

    std::vector<int> gens;
    Subgroup current = trivial_subgroup(g);
    while (current.order() < n) {
        for (int cand : order_sorted) {
            if (!current.mask.test(cand)) {
                gens.push_back(cand);
                break;
            }
        }
        current = subgroup_generated(g, gens);
    }
    return gens;
}

std::vector<int> generating_sequence_of(const Subgroup& h) {
    const GroupPtr& g = h.parent;
    Subgroup probe = trivial_subgroup(g);
    std::vector<int> gens;
    for (int x : h.element_indices()) {
        if (probe.mask.test(x)) continue;
        gens.push_back(x);
        probe = subgroup_generated(g, gens);
        if (probe.mask == h.mask) break;
    }
    return gens;
}

std::string subgroup_label(const Subgroup& h) {
    if (h.order() == 1) return "e";
    std::string out;
    auto gens = generating_sequence_of(h);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ",";
        out += h.parent->element(gens[i]).to_cycle_string();
    }
    return out;
}

namespace {

/// Backtracking isomorphism search over generator images.
class IsoSearch {
public:
    IsoSearch(const GroupPtr& g1, const GroupPtr& g2, const IsoConstraint* constraint)
        : g1_(g1), g2_(g2), constraint_(constraint) {
        gens_ = generating_sequence(g1);
        n_ = g1->order();
        map_.assign(n_, -1);
        used_.assign(n_, false);
        map_[g1->identity_index()] = g2->identity_index();
        used_[g2->identity_index()] = true;
        known_ = {g1->identity_index()};
        // Candidate pools per generator: matching element order and class size.
        const auto& cls1 = g1->class_of();
        const auto& cls2 = g2->class_of();
        const auto& classes1 = g1->conjugacy_classes();
        const auto& classes2 = g2->conjugacy_classes();
        for (int gen : gens_) {
            std::vector<int> pool;
            for (int y = 0; y < n_; ++y) {
                if (g2->element_order(y) == g1->element_order(gen) &&
                    classes2[cls2[y]].size() == classes1[cls1[gen]].size()) {
                    pool.push_back(y);
                }
            }
            pools_.push_back(std::move(pool));
        }
    }

    std::optional<std::vector<int>> run() {
        if (extend(0)) return map_;
        return std::nullopt;
    }

private:
    bool respects_constraint(int x, int y) const {
        if (!constraint_) return true;
        return constraint_->from.test(x) == constraint_->to.test(y);
    }

    // Close the partial map over products with the currently assigned
    // generators; every (element, generator) pair is checked, so a
    // conflict-free closure is a homomorphism on the generated subgroup.
    bool extend(std::size_t depth) {
        if (depth == gens_.size()) {
            return static_cast<int>(known_.size()) == n_;
        }
        int gen = gens_[depth];
        for (int image : pools_[depth]) {
            if (used_[image]) continue;
            if (!respects_constraint(gen, image)) continue;

            std::vector<int> touched;   // g1 indices newly mapped
            bool ok = assign(gen, image, touched);
            if (ok && close(depth + 1, touched)) {
                if (extend(depth + 1)) return true;
            }
            for (auto it = touched.rbegin(); it != touched.rend(); ++it) {
                used_[map_[*it]] = false;
                map_[*it] = -1;
                known_.pop_back();
            }
        }
        return false;
    }

    bool assign(int x, int y, std::vector<int>& touched) {
        map_[x] = y;
        used_[y] = true;
        known_.push_back(x);
        touched.push_back(x);
        return true;
    }

    bool close(std::size_t num_gens, std::vector<int>& touched) {
        // Breadth-first closure over all known elements times assigned gens.
        std::size_t head = 0;
        std::vector<int> work(known_.begin(), known_.end());
        while (head < work.size()) {
            int x = work[head++];
            for (std::size_t k = 0; k < num_gens; ++k) {
                int gen = gens_[k];
                int xg = g1_->multiply(x, gen);
                int img = g2_->multiply(map_[x], map_[gen]);
                if (map_[xg] == -1) {
                    if (used_[img]) return false;  // not injective
                    if (!respects_constraint(xg, img)) return false;
                    assign(xg, img, touched);
                    work.push_back(xg);
                } else if (map_[xg] != img) {
                    return false;  // relation mismatch
                }
            }
        }
        return true;
    }

    GroupPtr g1_, g2_;
    const IsoConstraint* constraint_;
    std::vector<int> gens_;
    std::vector<std::vector<int>> pools_;
    int n_ = 0;
    std::vector<int> map_;
    std::vector<bool> used_;
    std::vector<int> known_;
};

bool verify_isomorphism(const GroupPtr& g1, const GroupPtr& g2, const std::vector<int>& map) {
    const int n = g1->order();
    std::vector<bool> hit(n, false);
    for (int x = 0; x < n; ++x) {
        if (map[x] < 0 || map[x] >= n || hit[map[x]]) return false;
        hit[map[x]] = true;
    }
    if (n <= 300) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (map[g1->multiply(a, b)] != g2->multiply(map[a], map[b])) return false;
            }
        }
    } else {
        for (int gen : g1->generator_indices()) {
            for (int a = 0; a < n; ++a) {
                if (map[g1->multiply(a, gen)] != g2->multiply(map[a], map[gen])) return false;
            }
        }
    }
    return true;
}

std::multiset<int> order_multiset(const GroupPtr& g) {
    std::multiset<int> out;
    for (int i = 0; i < g->order(); ++i) out.insert(g->element_order(i));
    return out;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const GroupPtr& g1, const GroupPtr& g2,
                                               int iso_cap, const IsoConstraint* constraint) {
    if (g1->order() > iso_cap || g2->order() > iso_cap) {
        throw CapExceeded("group order passes the isomorphism cap " + std::to_string(iso_cap));
    }
    if (g1->order() != g2->order()) return std::nullopt;
    if (order_multiset(g1) != order_multiset(g2)) return std::nullopt;
    if (constraint && constraint->from.count() != constraint->to.count()) return std::nullopt;

    IsoSearch search(g1, g2, constraint);
    auto result = search.run();
    if (result && !verify_isomorphism(g1, g2, *result)) {
        throw Error("internal: isomorphism candidate failed verification");
    }
    return result;
}

}  // namespace oretk
