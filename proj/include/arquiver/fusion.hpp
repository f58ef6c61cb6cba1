#pragma once

#include <string>
#include <vector>

#include "arquiver/chartab.hpp"

namespace arq {

/// Simple-module labels, dimensions, and the multiplicity matrix of the
/// distinguished 2-dimensional module: a[i][j] = multiplicity of S_i in
/// L(1)^[1] (x) S_j.
struct FusionDatum {
    std::vector<std::string> labels;
    std::vector<long> dims;
    std::vector<std::vector<long>> a;
    std::string source;  // "character-theoretic" or "weight-combinatorial"

    int size() const { return static_cast<int>(labels.size()); }
};

/// Multiplicities a[i][j] = <chi_L * chi_j, chi_i>, exact.
/// chi_L must be the degree-2 standard character.
FusionDatum fusion_from_chartab(const CharacterTable& T, const ClassFunction& chi_L,
                                const FiniteMatrixGroup& G);

/// Weight combinatorics for the (possibly non-reduced) cyclic and dihedral
/// group schemes: cyclic gives m = 2np^{r-1} one-dimensional labels on Z/m
/// with steps +-1; dihedral gives the affine D~_{N+2} arrangement with
/// N = np^{r-1}. Rejects exceptional families.
FusionDatum fusion_from_weights(const GroupSchemeSpec& spec);

/// Checks the conservation law sum_i a[i][j] dims[i] = 2 dims[j] and the
/// symmetry a[i][j] = a[j][i]; returns human-readable violations (empty on
/// success).
std::vector<std::string> verify_fusion(const FusionDatum& d);

}  // namespace arq
