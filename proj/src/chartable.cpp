#include "oretk/chartable.hpp"

#include "oretk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace oretk {

namespace {

using u64 = std::uint64_t;

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return (a * b) % p; }  // p < 2^31, no overflow
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
};

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;  // row-major

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Row-reduces `m` in place; returns pivot columns.
std::vector<int> rref(Mat& m, const Fp& fp) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        u64 scale = fp.inv(m[r][c]);
        for (int j = c; j < cols; ++j) m[r][j] = fp.mul(m[r][j], scale);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            u64 factor = m[i][c];
            for (int j = c; j < cols; ++j) {
                m[i][j] = fp.sub(m[i][j], fp.mul(factor, m[r][j]));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Kernel basis of an n x n matrix.
std::vector<Vec> kernel_basis(Mat m, const Fp& fp) {
    const int n = static_cast<int>(m.size());
    auto pivots = rref(m, fp);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            // Row r has leading 1 at pivots[r]: x_pivot = -sum over free cols.
            v[pivots[r]] = fp.sub(0, m[r][free]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves B * x = y where the columns of B are the (independent) basis
// vectors; y is guaranteed to lie in their span.
Vec coords_in_basis(const std::vector<Vec>& basis, const Vec& y, const Fp& fp) {
    const int r = static_cast<int>(y.size());
    const int m = static_cast<int>(basis.size());
    Mat aug(r, Vec(m + 1, 0));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < m; ++j) aug[i][j] = basis[j][i];
        aug[i][m] = y[i];
    }
    auto pivots = rref(aug, fp);
    Vec x(m, 0);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == m) throw std::logic_error("vector outside invariant subspace");
        x[pivots[k]] = aug[k][m];
    }
    return x;
}

// Polynomials over F_p, lowest degree first.
using Poly = std::vector<u64>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_rem(Poly a, const Poly& b, const Fp& fp) {
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        u64 factor = fp.mul(a.back(), fp.inv(b.back()));
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = fp.sub(a[shift + i], fp.mul(factor, b[i]));
        }
        poly_trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, const Fp& fp) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, fp);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 scale = fp.inv(a.back());
        for (auto& c : a) c = fp.mul(c, scale);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, const Fp& fp) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = fp.add(out[i + j], fp.mul(a[i], b[j]));
        }
    }
    return out;
}

Poly poly_div_exact(const Poly& a, const Poly& b, const Fp& fp) {
    Poly rem = a;
    poly_trim(rem);
    Poly quot(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
    while (rem.size() >= b.size() && !rem.empty()) {
        u64 factor = fp.mul(rem.back(), fp.inv(b.back()));
        std::size_t shift = rem.size() - b.size();
        quot[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) {
            rem[shift + i] = fp.sub(rem[shift + i], fp.mul(factor, b[i]));
        }
        poly_trim(rem);
    }
    return quot;
}

u64 poly_eval(const Poly& a, u64 x, const Fp& fp) {
    u64 r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = fp.add(fp.mul(r, x), *it);
    return r;
}

int matrix_rank(Mat m, const Fp& fp) {
    rref(m, fp);
    int rank = 0;
    for (const auto& row : m) {
        if (std::any_of(row.begin(), row.end(), [](u64 x) { return x != 0; })) ++rank;
    }
    return rank;
}

// Minimal polynomial of the matrix action, as the lcm of the minimal
// polynomials of the standard basis vectors (Krylov sequences).
Poly minimal_polynomial(const Mat& m, const Fp& fp) {
    const int n = static_cast<int>(m.size());
    Poly minpoly = {1};
    for (int start = 0; start < n; ++start) {
        Vec current(n, 0);
        current[start] = 1;
        std::vector<Vec> krylov;
        while (true) {
            Mat test = krylov;
            test.push_back(current);
            if (matrix_rank(test, fp) < static_cast<int>(test.size())) break;
            krylov.push_back(current);
            Vec next(n, 0);
            for (int i = 0; i < n; ++i) {
                u64 acc = 0;
                for (int j = 0; j < n; ++j) acc = fp.add(acc, fp.mul(m[i][j], current[j]));
                next[i] = acc;
            }
            current = std::move(next);
        }
        // current = sum c_i krylov[i]; the vector's minimal polynomial is
        // x^k - sum c_i x^i.
        Vec coeff = coords_in_basis(krylov, current, fp);
        Poly vec_poly(krylov.size() + 1, 0);
        for (std::size_t i = 0; i < krylov.size(); ++i) vec_poly[i] = fp.sub(0, coeff[i]);
        vec_poly[krylov.size()] = 1;

        Poly g = poly_gcd(minpoly, vec_poly, fp);
        minpoly = poly_mul(poly_div_exact(minpoly, g, fp), vec_poly, fp);
        if (minpoly.size() == static_cast<std::size_t>(n) + 1) break;  // cannot grow further
    }
    return minpoly;
}

std::vector<u64> poly_roots(const Poly& a, const Fp& fp) {
    std::vector<u64> roots;
    for (u64 x = 0; x < fp.p; ++x) {
        if (poly_eval(a, x, fp) == 0) roots.push_back(x);
    }
    return roots;
}

u64 integer_sqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// One prime attempt; throws logic_error on degeneracy so the caller can
/// restart with the next prime.
CharacterTable build_table(const GroupPtr& g, u64 p) {
    Fp fp{p};
    const auto& classes = g->conjugacy_classes();
    const auto& cls_of = g->class_of();
    const int r = static_cast<int>(classes.size());
    const int n = g->order();

    std::vector<int> reps(r), sizes(r), inv_class(r);
    for (int i = 0; i < r; ++i) {
        reps[i] = classes[i].front();
        sizes[i] = static_cast<int>(classes[i].size());
        inv_class[i] = cls_of[g->inverse(reps[i])];
    }

    // Structure constants of the class sums: for fixed i, B_i[k][j] counts
    // pairs (x in C_i, y in C_j) with x*y = rep_k. Built on demand.
    auto class_matrix = [&](const Vec& weights) {
        // Weighted sum over i of weights[i] * B_i, computed in |G|*r steps.
        Mat m(r, Vec(r, 0));
        for (int i = 0; i < r; ++i) {
            if (weights[i] == 0) continue;
            for (int x : classes[i]) {
                int xin = g->inverse(x);
                for (int k = 0; k < r; ++k) {
                    int y = g->multiply(xin, reps[k]);
                    m[k][cls_of[y]] = fp.add(m[k][cls_of[y]], weights[i]);
                }
            }
        }
        return m;
    };

    // Split the coordinate space into common eigenlines of the class algebra.
    std::vector<std::vector<Vec>> subspaces;
    {
        std::vector<Vec> whole;
        for (int i = 0; i < r; ++i) {
            Vec e(r, 0);
            e[i] = 1;
            whole.push_back(std::move(e));
        }
        subspaces.push_back(std::move(whole));
    }

    auto split_by = [&](const Mat& m) {
        std::vector<std::vector<Vec>> next;
        for (auto& space : subspaces) {
            const int dim = static_cast<int>(space.size());
            if (dim == 1) {
                next.push_back(std::move(space));
                continue;
            }
            // Restrict m to the (invariant) subspace.
            Mat restricted(dim, Vec(dim, 0));
            for (int j = 0; j < dim; ++j) {
                Vec image(r, 0);
                for (int row = 0; row < r; ++row) {
                    u64 acc = 0;
                    for (int col = 0; col < r; ++col) {
                        acc = fp.add(acc, fp.mul(m[row][col], space[j][col]));
                    }
                    image[row] = acc;
                }
                Vec coords = coords_in_basis(space, image, fp);
                for (int i = 0; i < dim; ++i) restricted[i][j] = coords[i];
            }
            Poly minpoly = minimal_polynomial(restricted, fp);
            auto roots = poly_roots(minpoly, fp);
            if (roots.size() <= 1) {
                next.push_back(std::move(space));
                continue;
            }
            for (u64 lambda : roots) {
                Mat shifted = restricted;
                for (int i = 0; i < dim; ++i) shifted[i][i] = fp.sub(shifted[i][i], lambda);
                auto kern = kernel_basis(std::move(shifted), fp);
                if (kern.empty()) continue;
                std::vector<Vec> child;
                for (const auto& coords : kern) {
                    Vec vec(r, 0);
                    for (int i = 0; i < dim; ++i) {
                        for (int col = 0; col < r; ++col) {
                            vec[col] = fp.add(vec[col], fp.mul(coords[i], space[i][col]));
                        }
                    }
                    child.push_back(std::move(vec));
                }
                next.push_back(std::move(child));
            }
        }
        subspaces = std::move(next);
    };

    auto fully_split = [&] {
        return std::all_of(subspaces.begin(), subspaces.end(),
                           [](const auto& s) { return s.size() == 1; });
    };

    std::mt19937_64 rng(0x09E1A5ULL);  // fixed seed: reproducible tables
    for (int round = 0; round < 8 && !fully_split(); ++round) {
        Vec weights(r);
        for (auto& w : weights) w = rng() % p;
        split_by(class_matrix(weights));
    }
    for (int i = 1; i < r && !fully_split(); ++i) {
        Vec weights(r, 0);
        weights[i] = 1;
        split_by(class_matrix(weights));
    }
    if (!fully_split() || static_cast<int>(subspaces.size()) != r) {
        throw std::logic_error("degenerate eigenspace splitting");
    }

    // Each eigenline holds u with u_k proportional to chi(rep_k^-1)/deg.
    CharacterTable table;
    table.group = g;
    table.prime = p;
    table.class_reps = reps;
    table.class_sizes = sizes;
    table.inverse_class = inv_class;

    std::vector<std::pair<int, std::vector<u64>>> rows;
    for (const auto& space : subspaces) {
        const Vec& u = space.front();
        if (u[0] == 0) throw std::logic_error("eigenvector vanishes on the identity class");
        u64 scale = fp.inv(u[0]);
        Vec w(r);
        for (int k = 0; k < r; ++k) w[k] = fp.mul(u[k], scale);  // chi(rep_k^-1)/deg

        u64 denom = 0;
        for (int k = 0; k < r; ++k) {
            denom = fp.add(denom, fp.mul(static_cast<u64>(sizes[k]), fp.mul(w[k], w[inv_class[k]])));
        }
        if (denom == 0) throw std::logic_error("degree norm vanished");
        u64 deg_sq = fp.mul(static_cast<u64>(n % p), fp.inv(denom));
        if (deg_sq > static_cast<u64>(n)) throw std::logic_error("degree square lift out of range");
        u64 deg = integer_sqrt(deg_sq);
        if (deg * deg != deg_sq || deg == 0) throw std::logic_error("degree is not integral");

        std::vector<u64> values(r);
        for (int k = 0; k < r; ++k) values[k] = fp.mul(deg % p, w[inv_class[k]]);
        rows.emplace_back(static_cast<int>(deg), std::move(values));
    }
    std::sort(rows.begin(), rows.end());
    for (auto& [deg, vals] : rows) {
        table.degrees.push_back(deg);
        table.values.push_back(std::move(vals));
    }

    // Consistency: orthogonality both ways and the degree sum.
    long long deg_sum = 0;
    for (int d : table.degrees) deg_sum += static_cast<long long>(d) * d;
    if (deg_sum != n) throw std::logic_error("sum of squared degrees mismatch");
    for (int d : table.degrees) {
        if (n % d != 0) throw std::logic_error("character degree does not divide the order");
    }
    for (int s = 0; s < r; ++s) {
        for (int t = 0; t < r; ++t) {
            u64 acc = 0;
            for (int k = 0; k < r; ++k) {
                acc = fp.add(acc, fp.mul(static_cast<u64>(sizes[k]),
                                         fp.mul(table.values[s][k],
                                                table.values[t][inv_class[k]])));
            }
            u64 expected = (s == t) ? static_cast<u64>(n % p) : 0;
            if (acc != expected) throw std::logic_error("row orthogonality failed");
        }
    }
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            u64 acc = 0;
            for (int t = 0; t < r; ++t) {
                acc = fp.add(acc, fp.mul(table.values[t][i], table.values[t][inv_class[j]]));
            }
            u64 expected = (i == j) ? static_cast<u64>((n / sizes[i]) % p) : 0;
            if (acc != expected) throw std::logic_error("column orthogonality failed");
        }
    }
    return table;
}

}  // namespace

CharacterTable character_table(const GroupPtr& g, int cap) {
    if (g->order() > cap) {
        throw CapExceeded("group order " + std::to_string(g->order()) +
                          " passes the character-table cap " + std::to_string(cap));
    }
    const u64 exponent = static_cast<u64>(g->exponent());
    const u64 lower = 2 * static_cast<u64>(g->order());
    constexpr u64 kPrimeCeiling = 100000000;  // far beyond any desk-scale need

    int attempts = 0;
    for (u64 p = exponent + 1; p < kPrimeCeiling; p += exponent) {
        if (p <= lower || !is_prime(p)) continue;
        try {
            return build_table(g, p);
        } catch (const std::logic_error&) {
            if (++attempts >= 25) break;  // degenerate splitting: give up
        }
    }
    throw NoSuitablePrime("no usable prime found for the character table");
}

int fixed_point_dim(const CharacterTable& t, int character, const Subgroup& k) {
    if (k.parent != t.group) throw GroupMismatch("subgroup belongs to a different group");
    Fp fp{t.prime};
    const auto& cls_of = t.group->class_of();
    u64 acc = 0;
    for (auto i = k.mask.find_first(); i != ElementMask::npos; i = k.mask.find_next(i)) {
        acc = fp.add(acc, t.values[character][cls_of[static_cast<int>(i)]]);
    }
    u64 residue = fp.mul(acc, fp.inv(static_cast<u64>(k.order()) % t.prime));
    if (residue > static_cast<u64>(t.degrees[character])) {
        throw LiftOutOfRange("fixed-point dimension lift outside [0, degree]");
    }
    return static_cast<int>(residue);
}

Subgroup character_kernel(const CharacterTable& t, int character) {
    const GroupPtr& g = t.group;
    ElementMask m = g->empty_mask();
    const int deg = t.degrees[character];
    for (int x = 0; x < g->order(); ++x) {
        std::vector<int> seed = {x};
        Subgroup cyc = subgroup_generated(g, seed);
        if (fixed_point_dim(t, character, cyc) == deg) m.set(x);
    }
    Subgroup result{g, std::move(m)};
    if (!is_subgroup_mask(g, result.mask) || !is_normal(g, result)) {
        throw std::logic_error("character kernel is not a normal subgroup");
    }
    return result;
}

bool pointwise_stabilizer_is_h(const CharacterTable& t, int character, const Subgroup& h) {
    const GroupPtr& g = t.group;
    const int dim_h = fixed_point_dim(t, character, h);
    auto base = h.element_indices();
    for (int x = 0; x < g->order(); ++x) {
        if (h.mask.test(x)) continue;
        std::vector<int> seed = base;
        seed.push_back(x);
        Subgroup extended = subgroup_generated(g, seed);
        if (fixed_point_dim(t, character, extended) >= dim_h) return false;
    }
    return true;
}

bool is_linearly_primitive_interval(const CharacterTable& t, const Subgroup& h) {
    for (int i = 0; i < t.num_characters(); ++i) {
        if (pointwise_stabilizer_is_h(t, i, h)) return true;
    }
    return false;
}

bool is_linearly_primitive_interval(const GroupPtr& g, const Subgroup& h, int cap) {
    return is_linearly_primitive_interval(character_table(g, cap), h);
}

namespace {

bool search_kernels(const std::vector<ElementMask>& kernels, const ElementMask& acc,
                    std::size_t start, int remaining, int identity) {
    if (remaining == 0) return acc.count() == 1 && acc.test(identity);
    for (std::size_t i = start; i + remaining <= kernels.size(); ++i) {
        ElementMask next = acc & kernels[i];
        if (search_kernels(kernels, next, i + 1, remaining - 1, identity)) return true;
    }
    return false;
}

}  // namespace

int min_faithful_components(const CharacterTable& t) {
    const GroupPtr& g = t.group;
    std::vector<ElementMask> kernels;
    kernels.reserve(t.num_characters());
    for (int i = 0; i < t.num_characters(); ++i) {
        kernels.push_back(character_kernel(t, i).mask);
    }
    // r = 0 covers the trivial group: the empty intersection is G itself.
    for (int r = 0; r <= t.num_characters(); ++r) {
        if (search_kernels(kernels, g->full_mask(), 0, r, g->identity_index())) return r;
    }
    throw std::logic_error("no faithful joint kernel found");  // regular rep forbids this
}

int min_faithful_components(const GroupPtr& g, int cap) {
    return min_faithful_components(character_table(g, cap));
}

}  // namespace oretk
