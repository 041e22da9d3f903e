#pragma once

#include <compare>
#include <string>
#include <vector>

namespace oretk {

/// A permutation of {0, ..., degree-1}, stored as a dense image array.
///
/// Composition convention: (p * q)(x) = p(q(x)), i.e. q acts first.
class Permutation {
public:
    Permutation() = default;

    /// Validates that `images` is a bijection on {0, ..., n-1}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);

    /// Builds a permutation of the given degree from a list of cycles,
    /// e.g. {{0,1},{2,3}} for (0 1)(2 3).
    static Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[point]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    int order() const;

    Permutation inverse() const;

    /// (p * q)(x) = p(q(x)).
    friend Permutation operator*(const Permutation& p, const Permutation& q);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

    /// Disjoint-cycle form with fixed points omitted, e.g. "(0 1)(2 3)".
    /// The identity prints as "e".
    std::string to_cycle_string() const;

private:
    std::vector<int> images_;
};

/// Parses one permutation in cycle notation, e.g. "(0 1)(2 3 4)" or "e".
/// If degree == 0 the degree is inferred as max moved point + 1.
Permutation parse_permutation(const std::string& text, int degree = 0);

/// Parses a comma-separated generator list, e.g. "(0 1),(0 1 2 3)".
/// An empty string yields an empty list.
std::vector<Permutation> parse_generator_list(const std::string& text, int degree = 0);

}  // namespace oretk
