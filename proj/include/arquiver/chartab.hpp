#pragma once

#include <vector>

#include "arquiver/matgroup.hpp"

namespace arq {

/// One exact cyclotomic value per conjugacy class, in the group's class order.
using ClassFunction = std::vector<Cyclo>;

struct CharacterTable {
    std::vector<ClassFunction> irreducibles;  // rows, deterministic order
    std::vector<long> degrees;                // value at the identity class
    std::vector<long> class_sizes;
    long group_order = 0;
    long conductor = 1;  // group exponent

    int num_classes() const { return static_cast<int>(class_sizes.size()); }
};

/// Hermitian pairing (1/|G|) sum_C |C| phi(C) conj(psi(C)), exact.
Cyclo inner_product(const ClassFunction& phi, const ClassFunction& psi,
                    const FiniteMatrixGroup& G);

/// Trace of a representative matrix per class (the 2-dimensional standard
/// character of the SL(2) inclusion).
ClassFunction std_character(const FiniteMatrixGroup& G);

/// Complete exact character table by the Dixon-Schneider algorithm:
/// simultaneous eigenspace splitting of the class-multiplication matrices
/// over F_l (least prime l ≡ 1 mod exponent with l >= 2|G|), lifted to
/// Q(zeta_exponent) by the discrete-Fourier formula. Rows sorted by
/// (degree, lexicographic value sequence).
CharacterTable character_table(const FiniteMatrixGroup& G);

/// Classical closed forms for the binary cyclic and binary dihedral groups,
/// same class order and row order conventions as character_table.
/// Rejects exceptional families.
CharacterTable closed_form_table(const GroupSchemeSpec& spec,
                                 const FiniteMatrixGroup& G);

/// Multiplicity of each irreducible in the (genuine) character phi.
/// Throws std::domain_error("not a character") if any multiplicity is
/// non-integral or negative.
std::vector<long> decompose(const ClassFunction& phi, const CharacterTable& T,
                            const FiniteMatrixGroup& G);

/// Pointwise product of class functions (character of the tensor product).
ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b);

/// Row permutation comparison: true if the two tables contain the same
/// multiset of rows.
bool tables_agree_up_to_row_permutation(const CharacterTable& A,
                                        const CharacterTable& B);

}  // namespace arq
