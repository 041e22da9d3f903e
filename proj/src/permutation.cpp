#include "oretk/permutation.hpp"

#include "oretk/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace oretk {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    std::vector<bool> seen(n, false);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[v]) {
            throw ParseError("permutation image array is not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles, int degree) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (from < 0 || from >= degree || to < 0 || to >= degree) {
                throw ParseError("cycle point out of range for degree " + std::to_string(degree));
            }
            im[from] = to;
        }
    }
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

int Permutation::order() const {
    // lcm of cycle lengths
    std::vector<bool> seen(images_.size(), false);
    long long result = 1;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = images_[j];
            ++len;
        }
        result = std::lcm(result, static_cast<long long>(len));
    }
    return static_cast<int>(result);
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
    return Permutation(std::move(im));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) {
        throw DegreeMismatch("cannot compose permutations of degrees " +
                             std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
    }
    std::vector<int> im(p.degree());
    for (int i = 0; i < p.degree(); ++i) im[i] = p.images_[q.images_[i]];
    return Permutation(std::move(im));
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream out;
    std::vector<bool> seen(images_.size(), false);
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        any = true;
        out << '(';
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out << ' ';
            out << j;
            first = false;
            j = images_[j];
        }
        out << ')';
    }
    return any ? out.str() : "e";
}

namespace {

// Splits "(0 1)(2 3 4)" into cycles; returns max point seen.
std::vector<std::vector<int>> read_cycles(const std::string& text, int& max_point) {
    std::vector<std::vector<int>> cycles;
    max_point = -1;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
                throw ParseError("expected point index in cycle notation: " + text);
            }
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            cyc.push_back(v);
            max_point = std::max(max_point, v);
            skip_ws();
        }
        if (i >= text.size()) throw ParseError("unterminated cycle: " + text);
        ++i;  // ')'
        if (cyc.empty()) throw ParseError("empty cycle in: " + text);
        cycles.push_back(std::move(cyc));
        skip_ws();
    }
    return cycles;
}

}  // namespace

Permutation parse_permutation(const std::string& text, int degree) {
    auto b = text.find_first_not_of(" \t\r\n");
    auto e = text.find_last_not_of(" \t\r\n");
    std::string core = (b == std::string::npos) ? "" : text.substr(b, e - b + 1);
    if (core == "e" || core == "()" || core.empty()) {
        if (degree <= 0) throw ParseError("identity permutation needs an explicit degree");
        return Permutation::identity(degree);
    }
    int max_point = -1;
    auto cycles = read_cycles(core, max_point);
    int d = degree > 0 ? degree : max_point + 1;
    if (max_point >= d) {
        throw ParseError("cycle point " + std::to_string(max_point) +
                         " out of range for degree " + std::to_string(d));
    }
    return Permutation::from_cycles(cycles, d);
}

std::vector<Permutation> parse_generator_list(const std::string& text, int degree) {
    std::vector<std::string> parts;
    std::string current;
    int paren = 0;
    for (char ch : text) {
        if (ch == '(') ++paren;
        if (ch == ')') --paren;
        if (ch == ',' && paren == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) parts.push_back(current);

    std::vector<Permutation> gens;
    int max_degree = degree;
    std::vector<std::string> kept;
    for (auto& part : parts) {
        auto b = part.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        kept.push_back(part);
        if (degree == 0) {
            int mp = -1;
            auto core = part.substr(b);
            if (core != "e" && core != "()") {
                read_cycles(core, mp);
                max_degree = std::max(max_degree, mp + 1);
            }
        }
    }
    for (const auto& part : kept) gens.push_back(parse_permutation(part, max_degree));
    return gens;
}

}  // namespace oretk
