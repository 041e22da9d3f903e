#pragma once

#include <string>
#include <vector>

namespace oretk {

using FusionMatrix = std::vector<std::vector<long>>;

/// A based ring with nonnegative integer structure constants:
/// N[i][j][k] = multiplicity of basis element k in x_i * x_j.
struct FusionRing {
    int rank = 0;
    std::vector<FusionMatrix> N;
    std::vector<int> dual;   // involution with dual[0] == 0
    std::vector<long> dims;  // integer Frobenius-Perron dimensions

    long dimension() const;  // sum of squared dims
};

/// Validates shape, unit, duality and associativity; computes the duality
/// involution and the integer dimension vector. Throws AxiomViolation with
/// a structured (kind, indices) report, or NonIntegralDims.
FusionRing fusion_ring_from_matrices(std::vector<FusionMatrix> matrices);

/// The unique positive dimension vector with d_0 = 1, found from the Perron
/// eigenvector of the summed fusion matrices and verified exactly as
/// integers. Throws NonIntegralDims when exact verification fails.
std::vector<long> fp_dimensions(const std::vector<FusionMatrix>& matrices);

/// Every subset containing 0 that is closed under duality and fusion
/// (includes {0} and the full basis). Throws CapExceeded for rank > 20.
std::vector<std::vector<int>> fusion_subrings(const FusionRing& ring);

/// Reads matrices from JSON: either a bare 3d array or {"matrices": [...]}.
std::vector<FusionMatrix> fusion_matrices_from_json(const std::string& json_text);

/// The rank-7 integral fixture of dimension 210 and type (1,5,5,5,6,7,7).
std::vector<FusionMatrix> fusion_fixture_210();

}  // namespace oretk
