#include "oretk/boxmodel.hpp"

#include "oretk/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace oretk {

namespace {

long long exact_isqrt(long long n) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(long n, long long& root) {
    root = exact_isqrt(n);
    return root * root == n;
}

void check_same_group(const TwoBox& x, const TwoBox& y) {
    if (x.group != y.group) throw GroupMismatch("two-boxes live over different groups");
}

}  // namespace

QuadScalar QuadScalar::inv(long n) const {
    Rational norm = a * a - b * b * n;
    if (norm == 0) throw ZeroOperand("quadratic scalar has no inverse (zero norm)");
    return {a / norm, -b / norm};
}

int QuadScalar::sign(long n) const {
    long long root = 0;
    if (is_square(n, root)) {
        Rational value = a + b * root;
        return value == 0 ? 0 : (value > 0 ? 1 : -1);
    }
    const bool a_neg = a < 0, a_zero = a == 0;
    const bool b_neg = b < 0, b_zero = b == 0;
    if (a_zero && b_zero) return 0;
    if (a_zero) return b_neg ? -1 : 1;
    if (b_zero) return a_neg ? -1 : 1;
    if (!a_neg && !b_neg) return 1;
    if (a_neg && b_neg) return -1;
    // Mixed signs: compare a^2 against n b^2.
    Rational lhs = a * a, rhs = b * b * n;
    if (lhs == rhs) return 0;  // impossible for non-square n, kept for safety
    if (!a_neg) return lhs > rhs ? 1 : -1;
    return rhs > lhs ? 1 : -1;
}

std::string QuadScalar::str(long n) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    if (a != 0) out << rational_to_string(a);
    if (b != 0) {
        if (a != 0 && b > 0) out << '+';
        if (b == -1) {
            out << '-';
        } else if (b != 1) {
            out << rational_to_string(b);
        }
        out << "√" << n;
    }
    return out.str();
}

QuadScalar quad_from_string(const std::string& text, long n) {
    const std::string root_sign = "√";
    auto pos = text.find(root_sign);
    if (pos == std::string::npos) {
        return QuadScalar::of(rational_from_string(text));
    }
    std::string before = text.substr(0, pos);
    std::string after = text.substr(pos + root_sign.size());
    if (after != std::to_string(n)) {
        throw ParseError("radicand mismatch in '" + text + "': expected " + std::to_string(n));
    }
    // Split `before` into the rational part and the sqrt coefficient at the
    // last top-level '+' or '-' (not a leading sign).
    std::size_t split = std::string::npos;
    for (std::size_t i = before.size(); i-- > 1;) {
        if (before[i] == '+' || before[i] == '-') {
            split = i;
            break;
        }
    }
    std::string a_part, b_part;
    if (split == std::string::npos) {
        b_part = before;
    } else {
        a_part = before.substr(0, split);
        b_part = before.substr(split);
    }
    QuadScalar out;
    out.a = a_part.empty() ? Rational(0) : rational_from_string(a_part);
    if (b_part.empty() || b_part == "+") {
        out.b = 1;
    } else if (b_part == "-") {
        out.b = -1;
    } else {
        out.b = rational_from_string(b_part);
    }
    return out;
}

TwoBox box_e1(const GroupPtr& g) {
    TwoBox x{g, std::vector<QuadScalar>(g->order())};
    x.coeff[g->identity_index()] = QuadScalar::one();
    return x;
}

TwoBox box_id(const GroupPtr& g) {
    TwoBox x{g, std::vector<QuadScalar>(g->order())};
    for (auto& c : x.coeff) c = QuadScalar::one();
    return x;
}

TwoBox point_mass(const GroupPtr& g, int element) {
    TwoBox x{g, std::vector<QuadScalar>(g->order())};
    x.coeff[element] = QuadScalar::one();
    return x;
}

TwoBox subgroup_indicator(const Subgroup& k) {
    TwoBox x{k.parent, std::vector<QuadScalar>(k.parent->order())};
    for (auto i = k.mask.find_first(); i != ElementMask::npos; i = k.mask.find_next(i)) {
        x.coeff[i] = QuadScalar::one();
    }
    return x;
}

TwoBox product(const TwoBox& x, const TwoBox& y) {
    check_same_group(x, y);
    const long n = x.radicand();
    TwoBox out{x.group, std::vector<QuadScalar>(x.coeff.size())};
    for (std::size_t i = 0; i < x.coeff.size(); ++i) {
        out.coeff[i] = x.coeff[i].mul(y.coeff[i], n);
    }
    return out;
}

TwoBox coproduct(const TwoBox& x, const TwoBox& y) {
    check_same_group(x, y);
    const GroupPtr& g = x.group;
    const long n = x.radicand();
    const int order = g->order();
    const QuadScalar delta_inv = QuadScalar::root(Rational(1, n));  // 1/sqrt(n)
    TwoBox out{g, std::vector<QuadScalar>(order)};
    for (int h = 0; h < order; ++h) {
        if (x.coeff[h].is_zero()) continue;
        for (int t = 0; t < order; ++t) {
            if (y.coeff[t].is_zero()) continue;
            const int target = g->multiply(h, t);
            out.coeff[target] = out.coeff[target] + x.coeff[h].mul(y.coeff[t], n);
        }
    }
    for (auto& c : out.coeff) c = c.mul(delta_inv, n);
    return out;
}

TwoBox contragredient(const TwoBox& x) {
    TwoBox out{x.group, std::vector<QuadScalar>(x.coeff.size())};
    for (std::size_t i = 0; i < x.coeff.size(); ++i) {
        out.coeff[x.group->inverse(static_cast<int>(i))] = x.coeff[i];
    }
    return out;
}

QuadScalar trace(const TwoBox& x) {
    QuadScalar acc;
    for (const auto& c : x.coeff) acc = acc + c;
    const Rational inv_order(1, x.group->order());
    return acc.mul(QuadScalar::of(inv_order), x.radicand());
}

TwoBox scale(const TwoBox& x, const QuadScalar& s) {
    TwoBox out{x.group, x.coeff};
    for (auto& c : out.coeff) c = c.mul(s, x.radicand());
    return out;
}

TwoBox add(const TwoBox& x, const TwoBox& y) {
    check_same_group(x, y);
    TwoBox out{x.group, x.coeff};
    for (std::size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] = out.coeff[i] + y.coeff[i];
    return out;
}

bool is_positive(const TwoBox& x) {
    const long n = x.radicand();
    return std::all_of(x.coeff.begin(), x.coeff.end(),
                       [n](const QuadScalar& c) { return c.sign(n) >= 0; });
}

ElementMask support(const TwoBox& x) {
    ElementMask m(x.coeff.size());
    for (std::size_t i = 0; i < x.coeff.size(); ++i) {
        if (!x.coeff[i].is_zero()) m.set(i);
    }
    return m;
}

bool dominated_by(const TwoBox& x, const TwoBox& y) {
    return support(x).is_subset_of(support(y));
}

TwoBox range_projection(const TwoBox& x) {
    if (!is_positive(x)) throw NotPositive("range projection needs a positive operator");
    TwoBox out{x.group, std::vector<QuadScalar>(x.coeff.size())};
    for (std::size_t i = 0; i < x.coeff.size(); ++i) {
        if (!x.coeff[i].is_zero()) out.coeff[i] = QuadScalar::one();
    }
    return out;
}

TwoBox biprojection_generated(const TwoBox& x) {
    if (!is_positive(x)) throw NotPositive("biprojection generation needs a positive operator");
    ElementMask supp = support(x);
    if (supp.none()) throw ZeroOperand("biprojection generation needs a nonzero operator");

    TwoBox power = x;          // x^{*k}
    TwoBox partial_sum = x;    // sum of convolution powers
    TwoBox proj = range_projection(partial_sum);
    while (true) {
        power = coproduct(power, x);
        partial_sum = add(partial_sum, power);
        TwoBox next = range_projection(partial_sum);
        if (next == proj) break;
        proj = std::move(next);
    }

    std::vector<int> seed;
    for (auto i = supp.find_first(); i != ElementMask::npos; i = supp.find_next(i)) {
        seed.push_back(static_cast<int>(i));
    }
    Subgroup generated = subgroup_generated(x.group, seed);
    if (support(proj) != generated.mask) {
        throw std::logic_error("generated biprojection disagrees with the generated subgroup");
    }
    return proj;
}

bool is_biprojection(const TwoBox& b) {
    const GroupPtr& g = b.group;
    const long n = b.radicand();
    TwoBox e1 = box_e1(g);
    // e1 <= b for projections: e1 * b == e1 (pointwise product).
    if (!(product(e1, b) == e1)) return false;
    if (!(product(b, b) == b)) return false;
    // b* = b: the star is pointwise complex conjugation; all scalars here
    // model real numbers, so the condition is automatic but kept explicit.
    const TwoBox& b_star = b;
    if (!(b_star == b)) return false;
    if (!(contragredient(b) == b)) return false;

    QuadScalar tr = trace(b);
    QuadScalar lambda_inv = tr.mul(QuadScalar::root(), n);  // delta * tr(b)
    if (lambda_inv.is_zero()) return false;
    QuadScalar lambda = lambda_inv.inv(n);
    return scale(coproduct(b, b), lambda) == b;
}

bool is_w_cyclic_model(const GroupPtr& g) {
    const TwoBox identity_box = box_id(g);
    bool found = false;
    for (int x = 0; x < g->order(); ++x) {
        if (biprojection_generated(point_mass(g, x)) == identity_box) {
            found = true;
            break;
        }
    }
    bool has_full_order_element = false;
    for (int x = 0; x < g->order(); ++x) {
        if (g->element_order(x) == g->order()) {
            has_full_order_element = true;
            break;
        }
    }
    if (found != has_full_order_element) {
        throw std::logic_error("w-cyclicity disagrees with the element-order criterion");
    }
    return found;
}

bool exchange_relation_check(const TwoBox& b, const TwoBox& a1, const TwoBox& a2) {
    if (!is_biprojection(b)) throw NotBiprojection("exchange relations need a biprojection");
    auto sandwich_dot = [&](const TwoBox& m) { return product(b, product(m, b)); };
    auto sandwich_co = [&](const TwoBox& m) { return coproduct(b, coproduct(m, b)); };

    TwoBox lhs1 = coproduct(sandwich_dot(a1), sandwich_dot(a2));
    TwoBox mid1 = sandwich_dot(coproduct(a1, sandwich_dot(a2)));
    TwoBox rhs1 = sandwich_dot(coproduct(sandwich_dot(a1), a2));
    if (!(lhs1 == mid1) || !(lhs1 == rhs1)) return false;

    TwoBox lhs2 = product(sandwich_co(a1), sandwich_co(a2));
    TwoBox mid2 = sandwich_co(product(a1, sandwich_co(a2)));
    TwoBox rhs2 = sandwich_co(product(sandwich_co(a1), a2));
    return lhs2 == mid2 && lhs2 == rhs2;
}

std::string twobox_to_json(const TwoBox& x) {
    nlohmann::ordered_json out;
    const long n = x.radicand();
    for (std::size_t i = 0; i < x.coeff.size(); ++i) {
        if (x.coeff[i].is_zero()) continue;
        out[x.group->element(static_cast<int>(i)).to_cycle_string()] = x.coeff[i].str(n);
    }
    return out.dump();
}

TwoBox twobox_from_json(const GroupPtr& g, const std::string& json_text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad two-box JSON: ") + e.what());
    }
    if (!parsed.is_object()) throw ParseError("two-box JSON must be an object");
    TwoBox out{g, std::vector<QuadScalar>(g->order())};
    for (auto& [key, value] : parsed.items()) {
        Permutation p = parse_permutation(key, g->degree());
        int idx = g->index_of(p);
        if (idx < 0) throw ElementNotInGroup("two-box key " + key + " is not in the group");
        out.coeff[idx] = quad_from_string(value.get<std::string>(), g->order());
    }
    return out;
}

}  // namespace oretk
