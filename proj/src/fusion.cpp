#include "arquiver/fusion.hpp"

#include <sstream>
#include <stdexcept>

namespace arq {

FusionDatum fusion_from_chartab(const CharacterTable& T, const ClassFunction& chi_L,
                                const FiniteMatrixGroup& G) {
    if (!(chi_L[0] == Cyclo(2)))
        throw std::invalid_argument("fusion_from_chartab: chi_L must have degree 2");
    int n = static_cast<int>(T.irreducibles.size());
    FusionDatum d;
    d.source = "character-theoretic";
    for (int i = 0; i < n; ++i) {
        d.labels.push_back((T.degrees[i] == 1 ? "chi" : "rho") + std::to_string(i));
        d.dims.push_back(T.degrees[i]);
    }
    d.a.assign(n, std::vector<long>(n, 0));
    for (int j = 0; j < n; ++j) {
        auto mult = decompose(pointwise_product(chi_L, T.irreducibles[j]), T, G);
        for (int i = 0; i < n; ++i) d.a[i][j] = mult[i];
    }
    return d;
}

namespace {

long pow_long(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

FusionDatum fusion_from_weights(const GroupSchemeSpec& spec) {
    spec.validate();
    if (family_is_exceptional(spec.family))
        throw std::invalid_argument("fusion_from_weights: exceptional family");
    long q = pow_long(spec.p, spec.r - 1);

    FusionDatum d;
    d.source = "weight-combinatorial";
    if (spec.family == Family::BinaryCyclic) {
        long m = 2 * spec.n * q;
        for (long i = 0; i < m; ++i) {
            d.labels.push_back("chi" + std::to_string(i));
            d.dims.push_back(1);
        }
        d.a.assign(m, std::vector<long>(m, 0));
        for (long j = 0; j < m; ++j) {
            d.a[(j + 1) % m][j] += 1;
            d.a[((j - 1) % m + m) % m][j] += 1;
        }
        return d;
    }

    // dihedral: four 1-dimensional end labels plus a chain of N-1
    // 2-dimensional labels, the affine D~_{N+2} arrangement.
    long N = spec.n * q;
    auto connect = [&](int i, int j) {
        d.a[i][j] += 1;
        d.a[j][i] += 1;
    };
    if (N == 1) {
        // degenerate case: no 2-dimensional simples, the four linear
        // characters form a 4-cycle (the group is cyclic of order 4)
        for (int i = 0; i < 4; ++i) {
            d.labels.push_back("chi" + std::to_string(i));
            d.dims.push_back(1);
        }
        d.a.assign(4, std::vector<long>(4, 0));
        connect(0, 1);
        connect(1, 2);
        connect(2, 3);
        connect(3, 0);
        return d;
    }
    for (int i = 0; i < 4; ++i) {
        d.labels.push_back("chi" + std::to_string(i));
        d.dims.push_back(1);
    }
    for (long j = 1; j < N; ++j) {
        d.labels.push_back("rho" + std::to_string(j));
        d.dims.push_back(2);
    }
    int total = static_cast<int>(d.labels.size());
    d.a.assign(total, std::vector<long>(total, 0));
    int first_rho = 4, last_rho = total - 1;
    connect(0, first_rho);
    connect(1, first_rho);
    connect(2, last_rho);
    connect(3, last_rho);
    for (int j = first_rho; j < last_rho; ++j) connect(j, j + 1);
    return d;
}

std::vector<std::string> verify_fusion(const FusionDatum& d) {
    std::vector<std::string> violations;
    int n = d.size();
    if (static_cast<int>(d.dims.size()) != n ||
        static_cast<int>(d.a.size()) != n) {
        violations.push_back("inconsistent sizes");
        return violations;
    }
    for (int j = 0; j < n; ++j) {
        long weighted = 0;
        for (int i = 0; i < n; ++i) weighted += d.a[i][j] * d.dims[i];
        if (weighted != 2 * d.dims[j]) {
            std::ostringstream os;
            os << "column " << d.labels[j] << ": sum_i a[i][j]*dim_i = " << weighted
               << " != 2*" << d.dims[j];
            violations.push_back(os.str());
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d.a[i][j] != d.a[j][i]) {
                std::ostringstream os;
                os << "asymmetry at (" << d.labels[i] << "," << d.labels[j] << ")";
                violations.push_back(os.str());
            }
    return violations;
}

}  // namespace arq
