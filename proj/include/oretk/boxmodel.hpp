#pragma once

#include "oretk/group.hpp"
#include "oretk/rational.hpp"

#include <string>
#include <vector>

namespace oretk {

/// An element a + b*sqrt(n) of the quadratic extension by the (fixed) group
/// order n. Equality is componentwise; the radicand is supplied by the
/// operations, so values stay exact even when sqrt(n) appears in odd powers.
struct QuadScalar {
    Rational a;
    Rational b;

    static QuadScalar zero() { return {}; }
    static QuadScalar one() { return {1, 0}; }
    static QuadScalar of(Rational r) { return {std::move(r), 0}; }
    static QuadScalar root(Rational coeff = 1) { return {0, std::move(coeff)}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    QuadScalar operator+(const QuadScalar& o) const { return {a + o.a, b + o.b}; }
    QuadScalar operator-(const QuadScalar& o) const { return {a - o.a, b - o.b}; }
    QuadScalar operator-() const { return {-a, -b}; }
    friend bool operator==(const QuadScalar&, const QuadScalar&) = default;

    QuadScalar mul(const QuadScalar& o, long n) const {
        return {a * o.a + b * o.b * n, a * o.b + b * o.a};
    }
    /// Multiplicative inverse; throws ZeroOperand when the norm a^2 - n b^2
    /// vanishes (the value is zero, or a zero divisor for square n).
    QuadScalar inv(long n) const;

    /// Exact sign of the real number a + b*sqrt(n).
    int sign(long n) const;

    /// "a", "a+b√n", "-b√n", ...; "0" for zero.
    std::string str(long n) const;
};

/// Parses "a", "a+b√n", "a-b√n" or "b√n" with rational a, b.
QuadScalar quad_from_string(const std::string& text, long n);

/// An element of the 2-box space of (R ⊆ R⋊G), modeled as a function on G.
/// Product is pointwise, coproduct is the (δ-normalized) convolution.
struct TwoBox {
    GroupPtr group;
    std::vector<QuadScalar> coeff;  // indexed by element index

    long radicand() const { return group->order(); }
    friend bool operator==(const TwoBox& x, const TwoBox& y) {
        return x.group == y.group && x.coeff == y.coeff;
    }
};

/// Jones projection: the indicator of the identity element. tr(e1) = 1/|G|.
TwoBox box_e1(const GroupPtr& g);
/// Identity biprojection: the constant-one function. tr(id) = 1.
TwoBox box_id(const GroupPtr& g);
/// Indicator of a single group element.
TwoBox point_mass(const GroupPtr& g, int element);
/// Indicator of a subgroup.
TwoBox subgroup_indicator(const Subgroup& k);

TwoBox product(const TwoBox& x, const TwoBox& y);
/// coproduct(x, y)(g) = δ^{-1} Σ_h x(h) y(h^{-1} g), with δ = sqrt(|G|).
TwoBox coproduct(const TwoBox& x, const TwoBox& y);
TwoBox contragredient(const TwoBox& x);
QuadScalar trace(const TwoBox& x);

TwoBox scale(const TwoBox& x, const QuadScalar& s);
TwoBox add(const TwoBox& x, const TwoBox& y);

bool is_positive(const TwoBox& x);
ElementMask support(const TwoBox& x);
/// Support containment ("x ≼ y" for positive operators in this model).
bool dominated_by(const TwoBox& x, const TwoBox& y);

/// Indicator of the support; throws NotPositive.
TwoBox range_projection(const TwoBox& x);

/// Smallest biprojection above x: stabilized range projections of the
/// partial convolution-power sums. The result is checked to be the
/// indicator of the subgroup generated by supp(x).
TwoBox biprojection_generated(const TwoBox& x);

/// The five-condition characterization: e1 ≤ b = b² = b* = contragredient(b)
/// = λ b*b with λ^{-1} = δ tr(b).
bool is_biprojection(const TwoBox& b);

/// Some point mass generates the identity biprojection. Cross-checked
/// against "G has an element of order |G|".
bool is_w_cyclic_model(const GroupPtr& g);

/// Exchange relations for a biprojection b:
///   (b·a1·b) * (b·a2·b) = b·(a1 * (b·a2·b))·b = b·((b·a1·b) * a2)·b
/// and the same display with product and coproduct swapped.
bool exchange_relation_check(const TwoBox& b, const TwoBox& a1, const TwoBox& a2);

/// JSON I/O for coefficient maps {"<cycles>": "a+b√n", ...}.
std::string twobox_to_json(const TwoBox& x);
TwoBox twobox_from_json(const GroupPtr& g, const std::string& json_text);

}  // namespace oretk
