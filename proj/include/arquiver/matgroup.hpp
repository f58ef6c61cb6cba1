#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "arquiver/cyclo.hpp"

namespace arq {

/// 2x2 matrix over a cyclotomic field; group elements all have det = 1.
struct Mat2 {
    Cyclo a, b, c, d;  // row major: [[a, b], [c, d]]

    static Mat2 identity();
    Mat2 operator*(const Mat2& o) const;
    /// Inverse of an SL(2) matrix: [[d, -b], [-c, a]].
    Mat2 sl2_inverse() const;
    Cyclo det() const;
    Cyclo trace() const;
    bool operator==(const Mat2& o) const;
    /// Canonical key with all entries embedded at conductor N.
    std::string key(long N) const;
};

enum class Family {
    BinaryCyclic,
    BinaryDihedral,
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
};

std::string family_name(Family f);
Family family_from_string(const std::string& s);
bool family_is_exceptional(Family f);

/// Parameters of a finite linearly reductive subgroup scheme of SL(2):
/// the reduced part is one of the five matrix-group families, the
/// infinitesimal data (p, r) is carried symbolically.
struct GroupSchemeSpec {
    Family family = Family::BinaryCyclic;
    long n = 1;  // cyclic/dihedral parameter, coprime to p
    long p = 5;  // odd prime characteristic
    long r = 1;  // infinitesimal height; r > 1 only for cyclic/dihedral

    /// Order of the reduced matrix group: 2n, 4n, 24, 48, 120.
    long reduced_order() const;
    /// Throws std::invalid_argument on any violated invariant
    /// (p not an odd prime, gcd(n, p) != 1, r > 1 for exceptional
    /// families, p dividing the reduced order of an exceptional family).
    void validate() const;
};

bool is_prime(long p);

/// Fully enumerated finite subgroup of SL(2) with conjugacy-class data.
/// Immutable after construction.
class FiniteMatrixGroup {
public:
    const std::vector<Mat2>& elements() const { return elements_; }
    long order() const { return static_cast<long>(elements_.size()); }
    long conductor() const { return conductor_; }
    int identity_index() const { return identity_index_; }
    int minus_identity_index() const { return minus_identity_index_; }  // -1 if absent

    int mul(int i, int j) const { return mul_table_[i * order() + j]; }
    int inv(int i) const { return inv_table_[i]; }
    int index_of(const Mat2& m) const;

    /// Conjugacy classes: identity class first, then ordered by minimal
    /// element index. class_of[i] is the class containing element i.
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    const std::vector<int>& class_of() const { return class_of_; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    /// Representative = minimal-index element of the class.
    int class_rep(int c) const { return classes_[c][0]; }
    /// Class containing the inverses of class c.
    int inverse_class(int c) const { return class_of_[inv_table_[classes_[c][0]]]; }

    long element_order(int i) const { return element_orders_[i]; }
    long exponent() const;

    /// c_{ij}^k = #{(a,b) in C_i x C_j : ab = rep(C_k)}, one entry per class.
    std::vector<long> class_mult_coeffs(int i, int j) const;

    /// Enumerate the group generated by `gens` by closure under
    /// multiplication. Throws if the closure exceeds `bound` elements.
    static FiniteMatrixGroup generate(const std::vector<Mat2>& gens, long conductor,
                                      long bound = 2400);

private:
    std::vector<Mat2> elements_;
    std::unordered_map<std::string, int> index_;
    std::vector<int> mul_table_;
    std::vector<int> inv_table_;
    std::vector<long> element_orders_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
    long conductor_ = 1;
    int identity_index_ = 0;
    int minus_identity_index_ = -1;
};

/// Reduced part of the group scheme as an explicit matrix group.
FiniteMatrixGroup build_group(const GroupSchemeSpec& spec);

/// Least k >= 1 with g^k = I; throws std::domain_error above `bound`.
long element_order(const Mat2& g, long bound = 2400);

}  // namespace arq
