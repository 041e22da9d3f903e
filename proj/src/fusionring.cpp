#include "oretk/fusionring.hpp"

#include "oretk/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oretk {

long FusionRing::dimension() const {
    long acc = 0;
    for (long d : dims) acc += d * d;
    return acc;
}

std::vector<long> fp_dimensions(const std::vector<FusionMatrix>& matrices) {
    const int r = static_cast<int>(matrices.size());
    // Power iteration on the summed matrix; floats only seed the search.
    std::vector<double> v(r, 1.0);
    for (int iter = 0; iter < 500; ++iter) {
        // Iterates I + sum_i N_i: same Perron vector, strictly dominant
        // top eigenvalue.
        std::vector<double> next(r, 0.0);
        for (int j = 0; j < r; ++j) {
            double acc = v[j];
            for (int i = 0; i < r; ++i) {
                for (int k = 0; k < r; ++k) {
                    acc += static_cast<double>(matrices[i][j][k]) * v[k];
                }
            }
            next[j] = acc;
        }
        double norm = 0.0;
        for (double x : next) norm = std::max(norm, std::abs(x));
        if (norm == 0.0) throw NonIntegralDims("dimension iteration degenerated");
        for (double& x : next) x /= norm;
        v = std::move(next);
    }
    if (v[0] <= 0.0) throw NonIntegralDims("Perron seed has a nonpositive unit entry");
    std::vector<long> dims(r);
    for (int i = 0; i < r; ++i) {
        double scaled = v[i] / v[0];
        dims[i] = std::lround(scaled);
        if (dims[i] < 1 || std::abs(scaled - static_cast<double>(dims[i])) > 1e-6) {
            throw NonIntegralDims("Frobenius-Perron dimensions are not integers");
        }
    }
    // Exact verification of multiplicativity.
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            long rhs = 0;
            for (int k = 0; k < r; ++k) rhs += matrices[i][j][k] * dims[k];
            if (dims[i] * dims[j] != rhs) {
                throw NonIntegralDims("integer dimension vector failed exact verification");
            }
        }
    }
    return dims;
}

FusionRing fusion_ring_from_matrices(std::vector<FusionMatrix> matrices) {
    const int r = static_cast<int>(matrices.size());
    if (r == 0) throw AxiomViolation("shape", {}, "no fusion matrices given");
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(matrices[i].size()) != r) {
            throw AxiomViolation("shape", {i}, "fusion matrix " + std::to_string(i) +
                                                  " is not rank x rank");
        }
        for (int j = 0; j < r; ++j) {
            if (static_cast<int>(matrices[i][j].size()) != r) {
                throw AxiomViolation("shape", {i, j}, "fusion matrix row has wrong length");
            }
            for (int k = 0; k < r; ++k) {
                if (matrices[i][j][k] < 0) {
                    throw AxiomViolation("negative", {i, j, k},
                                         "negative structure constant");
                }
            }
        }
    }
    for (int j = 0; j < r; ++j) {
        for (int k = 0; k < r; ++k) {
            if (matrices[0][j][k] != (j == k ? 1 : 0)) {
                throw AxiomViolation("unit", {0, j, k}, "N_0 is not the identity");
            }
            if (matrices[j][0][k] != (j == k ? 1 : 0)) {
                throw AxiomViolation("unit", {j, 0, k}, "x_j * x_0 != x_j");
            }
        }
    }

    FusionRing ring;
    ring.rank = r;
    ring.dual.assign(r, -1);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            long v = matrices[i][j][0];
            if (v == 0) continue;
            if (v != 1 || ring.dual[i] != -1) {
                throw AxiomViolation("duality", {i, j},
                                     "unit multiplicity column must mark a unique dual");
            }
            ring.dual[i] = j;
        }
        if (ring.dual[i] == -1) {
            throw AxiomViolation("duality", {i}, "basis element without a dual");
        }
    }
    for (int i = 0; i < r; ++i) {
        if (ring.dual[ring.dual[i]] != i) {
            throw AxiomViolation("duality", {i}, "duality is not an involution");
        }
    }
    if (ring.dual[0] != 0) throw AxiomViolation("duality", {0}, "dual of the unit is not itself");

    // Associativity: (x_i x_j) x_l = x_i (x_j x_l).
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            for (int l = 0; l < r; ++l) {
                for (int m = 0; m < r; ++m) {
                    long lhs = 0, rhs = 0;
                    for (int t = 0; t < r; ++t) {
                        lhs += matrices[i][j][t] * matrices[t][l][m];
                        rhs += matrices[j][l][t] * matrices[i][t][m];
                    }
                    if (lhs != rhs) {
                        throw AxiomViolation("associativity", {i, j, l, m},
                                             "associativity fails");
                    }
                }
            }
        }
    }

    ring.dims = fp_dimensions(matrices);
    ring.N = std::move(matrices);
    return ring;
}

std::vector<std::vector<int>> fusion_subrings(const FusionRing& ring) {
    if (ring.rank > 20) {
        throw CapExceeded("fusion subring search capped at rank 20");
    }
    std::vector<std::vector<int>> out;
    const int r = ring.rank;
    for (unsigned long bits = 1; bits < (1UL << r); bits += 2) {  // always contains 0
        bool closed = true;
        for (int i = 0; i < r && closed; ++i) {
            if (!(bits >> i & 1)) continue;
            if (!(bits >> ring.dual[i] & 1)) {
                closed = false;
                break;
            }
            for (int j = 0; j < r && closed; ++j) {
                if (!(bits >> j & 1)) continue;
                for (int k = 0; k < r; ++k) {
                    if (!(bits >> k & 1) && ring.N[i][j][k] != 0) {
                        closed = false;
                        break;
                    }
                }
            }
        }
        if (closed) {
            std::vector<int> subset;
            for (int i = 0; i < r; ++i) {
                if (bits >> i & 1) subset.push_back(i);
            }
            out.push_back(std::move(subset));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<FusionMatrix> fusion_matrices_from_json(const std::string& json_text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad fusion-ring JSON: ") + e.what());
    }
    const nlohmann::json* arr = &parsed;
    if (parsed.is_object()) {
        if (!parsed.contains("matrices")) {
            throw ParseError("fusion-ring JSON object needs a 'matrices' field");
        }
        arr = &parsed["matrices"];
    }
    if (!arr->is_array()) throw ParseError("fusion matrices must be an array");
    std::vector<FusionMatrix> out;
    for (const auto& mat : *arr) {
        FusionMatrix m;
        for (const auto& row : mat) {
            std::vector<long> r;
            for (const auto& v : row) r.push_back(v.get<long>());
            m.push_back(std::move(r));
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<FusionMatrix> fusion_fixture_210() {
    auto m = [](std::initializer_list<std::initializer_list<long>> rows) {
        FusionMatrix out;
        for (const auto& row : rows) out.emplace_back(row);
        return out;
    };
    return {
        m({{1, 0, 0, 0, 0, 0, 0},
           {0, 1, 0, 0, 0, 0, 0},
           {0, 0, 1, 0, 0, 0, 0},
           {0, 0, 0, 1, 0, 0, 0},
           {0, 0, 0, 0, 1, 0, 0},
           {0, 0, 0, 0, 0, 1, 0},
           {0, 0, 0, 0, 0, 0, 1}}),
        m({{0, 1, 0, 0, 0, 0, 0},
           {1, 1, 0, 1, 0, 1, 1},
           {0, 0, 1, 0, 1, 1, 1},
           {0, 1, 0, 0, 1, 1, 1},
           {0, 0, 1, 1, 1, 1, 1},
           {0, 1, 1, 1, 1, 1, 1},
           {0, 1, 1, 1, 1, 1, 1}}),
        m({{0, 0, 1, 0, 0, 0, 0},
           {0, 0, 1, 0, 1, 1, 1},
           {1, 1, 1, 0, 0, 1, 1},
           {0, 0, 0, 1, 1, 1, 1},
           {0, 1, 0, 1, 1, 1, 1},
           {0, 1, 1, 1, 1, 1, 1},
           {0, 1, 1, 1, 1, 1, 1}}),
        m({{0, 0, 0, 1, 0, 0, 0},
           {0, 1, 0, 0, 1, 1, 1},
           {0, 0, 0, 1, 1, 1, 1},
           {1, 0, 1, 1, 0, 1, 1},
           {0, 1, 1, 0, 1, 1, 1},
           {0, 1, 1, 1, 1, 1, 1},
           {0, 1, 1, 1, 1, 1, 1}}),
        m({{0, 0, 0, 0, 1, 0, 0},
           {0, 0, 1, 1, 1, 1, 1},
           {0, 1, 0, 1, 1, 1, 1},
           {0, 1, 1, 0, 1, 1, 1},
           {1, 1, 1, 1, 1, 1, 1},
           {0, 1, 1, 1, 1, 2, 1},
           {0, 1, 1, 1, 1, 1, 2}}),
        m({{0, 0, 0, 0, 0, 1, 0},
           {0, 1, 1, 1, 1, 1, 1},
           {0, 1, 1, 1, 1, 1, 1},
           {0, 1, 1, 1, 1, 1, 1},
           {0, 1, 1, 1, 1, 2, 1},
           {1, 1, 1, 1, 2, 1, 2},
           {0, 1, 1, 1, 1, 2, 2}}),
        m({{0, 0, 0, 0, 0, 0, 1},
           {0, 1, 1, 1, 1, 1, 1},
           {0, 1, 1, 1, 1, 1, 1},
           {0, 1, 1, 1, 1, 1, 1},
           {0, 1, 1, 1, 1, 1, 2},
           {0, 1, 1, 1, 1, 2, 2},
           {1, 1, 1, 1, 2, 2, 1}}),
    };
}

}  // namespace oretk
