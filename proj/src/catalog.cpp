#include "oretk/catalog.hpp"

#include "oretk/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>

namespace oretk {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<Permutation> cyclic_gens(int n) {
    if (n == 1) return {};
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    return {Permutation::from_cycles({cyc}, n)};
}

std::vector<Permutation> dihedral_gens(int n) {
    // Order 2n; D1 = C2, D2 = C2xC2 on four points.
    if (n == 1) return cyclic_gens(2);
    if (n == 2) {
        return {Permutation::from_cycles({{0, 1}}, 4), Permutation::from_cycles({{2, 3}}, 4)};
    }
    std::vector<int> rot(n);
    std::iota(rot.begin(), rot.end(), 0);
    std::vector<std::vector<int>> refl;
    for (int i = 1; i < n - i; ++i) refl.push_back({i, n - i});
    return {Permutation::from_cycles({rot}, n), Permutation::from_cycles(refl, n)};
}

std::vector<Permutation> symmetric_gens(int n) {
    if (n <= 1) return {};
    if (n == 2) return cyclic_gens(2);
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    return {Permutation::from_cycles({{0, 1}}, n), Permutation::from_cycles({cyc}, n)};
}

std::vector<Permutation> alternating_gens(int n) {
    if (n <= 2) return {};
    if (n == 3) return {Permutation::from_cycles({{0, 1, 2}}, 3)};
    std::vector<int> big;
    if (n % 2 == 1) {
        big.resize(n);
        std::iota(big.begin(), big.end(), 0);
    } else {
        big.resize(n - 1);
        std::iota(big.begin(), big.end(), 1);
    }
    return {Permutation::from_cycles({{0, 1, 2}}, n), Permutation::from_cycles({big}, n)};
}

std::vector<Permutation> quaternion_gens() {
    // Left regular action on {1,-1,i,-i,j,-j,k,-k} = points 0..7.
    return {Permutation({2, 3, 1, 0, 6, 7, 5, 4}),   // left multiplication by i
            Permutation({4, 5, 7, 6, 1, 0, 2, 3})};  // left multiplication by j
}

std::vector<Permutation> sl23_gens() {
    // Action of SL(2,3) on the 8 nonzero vectors of F_3^2.
    // Vector (x,y) with (x,y) != (0,0) gets index 3x + y - 1.
    auto apply = [](int a, int b, int c, int d) {
        std::vector<int> im(8);
        for (int x = 0; x < 3; ++x) {
            for (int y = 0; y < 3; ++y) {
                if (x == 0 && y == 0) continue;
                int nx = (a * x + b * y) % 3;
                int ny = (c * x + d * y) % 3;
                im[3 * x + y - 1] = 3 * nx + ny - 1;
            }
        }
        return Permutation(std::move(im));
    };
    // S = [[0,-1],[1,0]], T = [[1,1],[0,1]] generate SL(2,3).
    return {apply(0, 2, 1, 0), apply(1, 1, 0, 1)};
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, int order_cap) {
    int da = a->degree();
    int db = b->degree();
    std::vector<Permutation> gens;
    auto embed = [&](const Permutation& p, int offset) {
        std::vector<int> im(da + db);
        std::iota(im.begin(), im.end(), 0);
        for (int i = 0; i < p.degree(); ++i) im[i + offset] = p(i) + offset;
        return Permutation(std::move(im));
    };
    for (const auto& g : a->generators()) gens.push_back(embed(g, 0));
    for (const auto& g : b->generators()) gens.push_back(embed(g, da));
    return Group::from_generators(std::move(gens), da + db, order_cap);
}

GroupPtr atom_from_name(const std::string& raw, int order_cap) {
    std::string name = trim(raw);
    if (name.empty()) throw ParseError("empty group name");
    if (name == "Q8") return Group::from_generators(quaternion_gens(), 8, order_cap);
    if (name == "SL(2,3)") return Group::from_generators(sl23_gens(), 8, order_cap);

    std::string num;
    char kind = 0;
    if (name.rfind("Z/", 0) == 0) {
        kind = 'C';
        num = name.substr(2);
    } else if (name.size() >= 2 &&
               (name[0] == 'C' || name[0] == 'D' || name[0] == 'S' || name[0] == 'A')) {
        kind = name[0];
        num = name.substr(1);
    }
    if (kind == 0 || num.empty() ||
        !std::all_of(num.begin(), num.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("unknown group name: " + name);
    }
    int n = std::stoi(num);
    if (n < 1) throw ParseError("group parameter must be positive: " + name);
    switch (kind) {
        case 'C':
            return Group::from_generators(cyclic_gens(n), std::max(n, 1), order_cap);
        case 'D':
            return Group::from_generators(dihedral_gens(n), n <= 2 ? (n == 1 ? 2 : 4) : n,
                                          order_cap);
        case 'S':
            if (n > 7) throw ParseError("Sn supported for n <= 7: " + name);
            return Group::from_generators(symmetric_gens(n), std::max(n, 1), order_cap);
        case 'A':
            if (n > 7) throw ParseError("An supported for n <= 7: " + name);
            return Group::from_generators(alternating_gens(n), std::max(n, 1), order_cap);
        default:
            throw ParseError("unknown group name: " + name);
    }
}

}  // namespace

GroupPtr group_from_name(const std::string& name, int order_cap) {
    // Split on 'x' for direct products; factor names never contain 'x'.
    std::vector<std::string> parts;
    std::string current;
    for (char ch : name) {
        if (ch == 'x') {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    parts.push_back(current);

    GroupPtr result = atom_from_name(parts[0], order_cap);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        result = direct_product(result, atom_from_name(parts[i], order_cap), order_cap);
    }
    return result;
}

std::vector<CatalogEntry> builtin_catalog(int order_cap) {
    std::vector<CatalogEntry> out;
    for (const char* name : {"S3", "S4", "A4", "D4", "Q8"}) {
        out.push_back({name, group_from_name(name, order_cap)});
    }
    for (int n = 2; n <= 30; ++n) {
        std::string name = "C" + std::to_string(n);
        out.push_back({name, group_from_name(name, order_cap)});
    }
    return out;
}

std::vector<CatalogEntry> catalog_from_file(const std::string& path, int order_cap) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open catalog file: " + path);
    std::vector<CatalogEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string::size_type pos = 0;
        while (fields.size() < 2) {
            auto semi = line.find(';', pos);
            if (semi == std::string::npos) break;
            fields.push_back(trim(line.substr(pos, semi - pos)));
            pos = semi + 1;
        }
        if (fields.size() == 2) fields.push_back(trim(line.substr(pos)));
        if (fields.size() != 3) {
            throw ParseError("catalog line " + std::to_string(lineno) +
                             ": expected `name; degree; generators`");
        }
        int degree = 0;
        try {
            degree = std::stoi(fields[1]);
        } catch (const std::exception&) {
            throw ParseError("catalog line " + std::to_string(lineno) + ": bad degree");
        }
        auto gens = parse_generator_list(fields[2], degree);
        out.push_back({fields[0], Group::from_generators(std::move(gens), degree, order_cap)});
    }
    return out;
}

std::string catalog_hash(const std::vector<CatalogEntry>& catalog) {
    uint64_t h = 1469598103934665603ULL;  // FNV-1a 64
    auto feed = [&](uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    auto feed_str = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& entry : catalog) {
        feed_str(entry.name);
        feed(static_cast<uint64_t>(entry.group->degree()));
        for (const auto& g : entry.group->generators()) {
            for (int v : g.images()) feed(static_cast<uint64_t>(v));
        }
        feed(0xfe);
    }
    std::ostringstream out;
    out << std::hex;
    for (int i = 15; i >= 0; --i) out << "0123456789abcdef"[(h >> (4 * i)) & 0xf];
    return out.str();
}

Subgroup parse_subgroup_spec(const GroupPtr& parent, const std::string& raw,
                             SubgroupSpecKind kind) {
    std::string spec = trim(raw);
    if (kind == SubgroupSpecKind::Auto) {
        if (spec == "e" || spec.empty()) {
            kind = SubgroupSpecKind::Trivial;
        } else if (spec[0] == '(') {
            kind = SubgroupSpecKind::Generators;
        } else {
            kind = SubgroupSpecKind::Name;
        }
    }
    switch (kind) {
        case SubgroupSpecKind::Trivial:
            return trivial_subgroup(parent);
        case SubgroupSpecKind::Generators: {
            auto gens = parse_generator_list(spec, parent->degree());
            return subgroup_generated_by(parent, gens);
        }
        case SubgroupSpecKind::Name: {
            GroupPtr named = group_from_name(spec);
            if (named->degree() != parent->degree()) {
                throw DegreeMismatch("subgroup '" + spec + "' has degree " +
                                     std::to_string(named->degree()) + ", parent has degree " +
                                     std::to_string(parent->degree()));
            }
            return subgroup_generated_by(parent, named->generators());
        }
        default:
            throw ParseError("unresolved subgroup spec: " + spec);
    }
}

}  // namespace oretk
