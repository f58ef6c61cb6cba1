#include "arquiver/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arq {

namespace {

// --- small dense linear algebra over F_l ---------------------------------

long mod_pow(long b, long e, long l) {
    long r = 1 % l;
    b %= l;
    while (e > 0) {
        if (e & 1) r = r * b % l;
        b = b * b % l;
        e >>= 1;
    }
    return r;
}

long mod_inv(long a, long l) { return mod_pow(((a % l) + l) % l, l - 2, l); }

using FVec = std::vector<long>;
using FMat = std::vector<FVec>;  // row major

FVec mat_vec(const FMat& A, const FVec& v, long l) {
    FVec out(A.size(), 0);
    for (size_t i = 0; i < A.size(); ++i) {
        long acc = 0;
        for (size_t j = 0; j < v.size(); ++j) acc = (acc + A[i][j] * v[j]) % l;
        out[i] = acc;
    }
    return out;
}

// Reduce to row echelon form in place; returns pivot columns.
std::vector<int> row_echelon(FMat& A, long l) {
    std::vector<int> pivots;
    size_t row = 0;
    size_t cols = A.empty() ? 0 : A[0].size();
    for (size_t col = 0; col < cols && row < A.size(); ++col) {
        size_t sel = row;
        while (sel < A.size() && A[sel][col] == 0) ++sel;
        if (sel == A.size()) continue;
        std::swap(A[sel], A[row]);
        long inv = mod_inv(A[row][col], l);
        for (size_t j = col; j < cols; ++j) A[row][j] = A[row][j] * inv % l;
        for (size_t i = 0; i < A.size(); ++i) {
            if (i == row || A[i][col] == 0) continue;
            long f = A[i][col];
            for (size_t j = col; j < cols; ++j)
                A[i][j] = ((A[i][j] - f * A[row][j]) % l + l) % l;
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

// Basis of the nullspace of A (square s x s).
std::vector<FVec> nullspace(FMat A, long l) {
    size_t s = A.size();
    auto pivots = row_echelon(A, l);
    std::vector<bool> is_pivot(s, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<FVec> basis;
    for (size_t free_col = 0; free_col < s; ++free_col) {
        if (is_pivot[free_col]) continue;
        FVec v(s, 0);
        v[free_col] = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi) {
            // row pi has pivot at pivots[pi]; v[pivot] = -A[pi][free_col]
            v[pivots[pi]] = (l - A[pi][free_col]) % l;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve B x = y for B (r x s) with full column rank; system assumed consistent.
FVec solve_full_rank(const std::vector<FVec>& B_cols, const FVec& y, long l) {
    size_t r = y.size(), s = B_cols.size();
    FMat aug(r, FVec(s + 1, 0));
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < s; ++j) aug[i][j] = B_cols[j][i];
        aug[i][s] = y[i];
    }
    auto pivots = row_echelon(aug, l);
    FVec x(s, 0);
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
        if (pivots[pi] == static_cast<int>(s))
            throw std::logic_error("solve_full_rank: inconsistent system");
        x[pivots[pi]] = aug[pi][s];
    }
    return x;
}

long least_admissible_prime(long order, long exponent, long after) {
    long l = std::max(after + 1, 2 * order);
    while (true) {
        if (l % exponent == 1 && is_prime(l) && l > after) return l;
        ++l;
    }
}

long primitive_root(long l) {
    std::vector<long> prime_factors;
    long m = l - 1;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        prime_factors.push_back(d);
        while (m % d == 0) m /= d;
    }
    if (m > 1) prime_factors.push_back(m);
    for (long g = 2; g < l; ++g) {
        bool ok = true;
        for (long q : prime_factors)
            if (mod_pow(g, (l - 1) / q, l) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

int cyclo_compare_rows(const ClassFunction& a, const ClassFunction& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        int c = Cyclo::compare(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

void sort_table_rows(CharacterTable& T) {
    std::vector<int> idx(T.irreducibles.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
        if (T.degrees[x] != T.degrees[y]) return T.degrees[x] < T.degrees[y];
        return cyclo_compare_rows(T.irreducibles[x], T.irreducibles[y]) < 0;
    });
    CharacterTable out = T;
    for (size_t i = 0; i < idx.size(); ++i) {
        out.irreducibles[i] = T.irreducibles[idx[i]];
        out.degrees[i] = T.degrees[idx[i]];
    }
    T = std::move(out);
}

bool verify_table(const CharacterTable& T, const FiniteMatrixGroup& G) {
    long sum_sq = 0;
    for (long d : T.degrees) sum_sq += d * d;
    if (sum_sq != G.order()) return false;
    int r = T.num_classes();
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            Cyclo ip = inner_product(T.irreducibles[i], T.irreducibles[j], G);
            if (!(ip == Cyclo(i == j ? 1 : 0))) return false;
        }
    return true;
}

// One Dixon-Schneider attempt over F_l; throws std::runtime_error on
// any failure to separate or lift (caller retries with the next prime).
CharacterTable dixon_attempt(const FiniteMatrixGroup& G, long l) {
    int r = G.num_classes();
    long order = G.order();
    long e = G.exponent();

    // class multiplication matrices: (M_i)[j][k] = c_{ij}^k mod l
    std::vector<FMat> M(r, FMat(r, FVec(r, 0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            auto row = G.class_mult_coeffs(i, j);
            for (int k = 0; k < r; ++k) M[i][j][k] = row[k] % l;
        }

    // simultaneous eigenspace splitting; subspaces stored as column bases
    std::vector<std::vector<FVec>> subspaces;
    {
        std::vector<FVec> full;
        for (int i = 0; i < r; ++i) {
            FVec ei(r, 0);
            ei[i] = 1;
            full.push_back(std::move(ei));
        }
        subspaces.push_back(std::move(full));
    }
    for (int i = 1; i < r; ++i) {
        std::vector<std::vector<FVec>> next;
        for (auto& B : subspaces) {
            size_t s = B.size();
            if (s == 1) { next.push_back(std::move(B)); continue; }
            // restriction A of M_i to span(B):  M_i * B = B * A
            FMat A(s, FVec(s, 0));
            for (size_t col = 0; col < s; ++col) {
                FVec x = solve_full_rank(B, mat_vec(M[i], B[col], l), l);
                for (size_t row = 0; row < s; ++row) A[row][col] = x[row];
            }
            // split by eigenvalue scan over F_l
            size_t found = 0;
            for (long lam = 0; lam < l && found < s; ++lam) {
                FMat shifted = A;
                for (size_t d = 0; d < s; ++d)
                    shifted[d][d] = ((shifted[d][d] - lam) % l + l) % l;
                auto ns = nullspace(std::move(shifted), l);
                if (ns.empty()) continue;
                std::vector<FVec> sub;
                for (auto& w : ns) {
                    FVec v(r, 0);
                    for (size_t col = 0; col < s; ++col)
                        for (int row = 0; row < r; ++row)
                            v[row] = (v[row] + w[col] * B[col][row]) % l;
                    sub.push_back(std::move(v));
                }
                found += sub.size();
                next.push_back(std::move(sub));
            }
            if (found != s)
                throw std::runtime_error("eigenspace splitting incomplete");
        }
        subspaces = std::move(next);
    }
    for (auto& S : subspaces)
        if (S.size() != 1)
            throw std::runtime_error("eigenspace splitting did not separate");

    // central character vectors, normalized at the identity class
    std::vector<FVec> omegas;
    for (auto& S : subspaces) {
        FVec v = S[0];
        if (v[0] == 0) throw std::runtime_error("degenerate eigenvector");
        long f = mod_inv(v[0], l);
        for (auto& x : v) x = x * f % l;
        omegas.push_back(std::move(v));
    }

    // degrees and character values mod l
    long root_bound = static_cast<long>(std::sqrt(static_cast<double>(order))) + 1;
    std::vector<long> degrees_ml(r, 0);
    std::vector<std::vector<long>> chi_ml(r, std::vector<long>(r, 0));
    for (int t = 0; t < r; ++t) {
        long s = 0;
        for (int i = 0; i < r; ++i) {
            long ci = static_cast<long>(G.classes()[i].size()) % l;
            long term = omegas[t][i] * omegas[t][G.inverse_class(i)] % l;
            s = (s + term * mod_inv(ci, l)) % l;
        }
        long target = order % l * mod_inv(s, l) % l;
        long d = 0;
        for (long cand = 1; cand <= root_bound; ++cand)
            if (cand * cand % l == target) { d = cand; break; }
        if (d == 0) throw std::runtime_error("degree not recovered");
        degrees_ml[t] = d;
        for (int i = 0; i < r; ++i) {
            long ci = static_cast<long>(G.classes()[i].size()) % l;
            chi_ml[t][i] = d % l * omegas[t][i] % l * mod_inv(ci, l) % l;
        }
    }

    // lift to exact cyclotomic values by the discrete Fourier formula
    long g = primitive_root(l);
    long Z = mod_pow(g, (l - 1) / e, l);  // fixed primitive e-th root in F_l

    // class power maps: class index of rep(C_j)^s
    std::vector<std::vector<int>> power_class(r);
    for (int j = 0; j < r; ++j) {
        long o = G.element_order(G.class_rep(j));
        power_class[j].resize(o);
        int acc = G.identity_index();
        for (long s = 0; s < o; ++s) {
            power_class[j][s] = G.class_of()[acc];
            acc = G.mul(acc, G.class_rep(j));
        }
    }

    CharacterTable T;
    T.group_order = order;
    T.conductor = e;
    for (const auto& c : G.classes())
        T.class_sizes.push_back(static_cast<long>(c.size()));

    for (int t = 0; t < r; ++t) {
        ClassFunction row(r);
        for (int j = 0; j < r; ++j) {
            long o = G.element_order(G.class_rep(j));
            long z = mod_pow(Z, e / o, l);
            long o_inv = mod_inv(o % l, l);
            Cyclo value;
            long total = 0;
            for (long tt = 0; tt < o; ++tt) {
                long m = 0;
                for (long s = 0; s < o; ++s) {
                    long zp = mod_pow(z, ((o - tt) * s) % o, l);  // z^{-s t}
                    m = (m + chi_ml[t][power_class[j][s]] * zp) % l;
                }
                m = m * o_inv % l;
                if (m > degrees_ml[t])
                    throw std::runtime_error("lifted multiplicity out of range");
                total += m;
                if (m > 0) value += Cyclo::zeta(o, tt).scale(Rational(m));
            }
            if (total != degrees_ml[t])
                throw std::runtime_error("lifted multiplicities do not sum to degree");
            row[j] = value.embed(e);
        }
        T.irreducibles.push_back(std::move(row));
        T.degrees.push_back(degrees_ml[t]);
    }

    sort_table_rows(T);
    if (!verify_table(T, G))
        throw std::runtime_error("orthogonality verification failed");
    return T;
}

}  // namespace

Cyclo inner_product(const ClassFunction& phi, const ClassFunction& psi,
                    const FiniteMatrixGroup& G) {
    if (phi.size() != psi.size() ||
        static_cast<int>(phi.size()) != G.num_classes())
        throw std::invalid_argument("inner_product: class count mismatch");
    Cyclo acc;
    for (int i = 0; i < G.num_classes(); ++i) {
        Cyclo term = phi[i] * psi[i].conjugate(-1);
        acc += term.scale(Rational(static_cast<long long>(G.classes()[i].size())));
    }
    return acc.scale(Rational(BigInt(1), BigInt(G.order())));
}

ClassFunction std_character(const FiniteMatrixGroup& G) {
    ClassFunction chi(G.num_classes());
    for (int c = 0; c < G.num_classes(); ++c)
        chi[c] = G.elements()[G.class_rep(c)].trace();
    return chi;
}

ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("pointwise_product: size mismatch");
    ClassFunction out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

CharacterTable character_table(const FiniteMatrixGroup& G) {
    long l = 0;
    std::string last_error;
    for (int attempt = 0; attempt < 8; ++attempt) {
        l = least_admissible_prime(G.order(), G.exponent(), l);
        try {
            return dixon_attempt(G, l);
        } catch (const std::runtime_error& err) {
            last_error = err.what();
        }
    }
    throw std::runtime_error("character_table failed on all primes tried: " +
                             last_error);
}

CharacterTable closed_form_table(const GroupSchemeSpec& spec,
                                 const FiniteMatrixGroup& G) {
    if (family_is_exceptional(spec.family))
        throw std::invalid_argument("closed_form_table: exceptional family");
    long n = spec.n;
    long m = 2 * n;  // order of the distinguished diagonal generator
    long e = G.exponent();

    Mat2 A{Cyclo::zeta(m), Cyclo(0), Cyclo(0), Cyclo::zeta(m, -1)};
    std::vector<int> apow(m);
    {
        int acc = G.identity_index();
        int ai = G.index_of(A);
        for (long k = 0; k < m; ++k) {
            apow[k] = acc;
            acc = G.mul(acc, ai);
        }
    }
    // word[i] = (k, mflag) with element i = A^k B^mflag
    std::vector<std::pair<long, int>> word(G.order(), {-1, -1});
    for (long k = 0; k < m; ++k) word[apow[k]] = {k, 0};
    if (spec.family == Family::BinaryDihedral) {
        Mat2 B{Cyclo(0), Cyclo(1), Cyclo(-1), Cyclo(0)};
        int bi = G.index_of(B);
        for (long k = 0; k < m; ++k) word[G.mul(apow[k], bi)] = {k, 1};
    }

    CharacterTable T;
    T.group_order = G.order();
    T.conductor = e;
    for (const auto& c : G.classes())
        T.class_sizes.push_back(static_cast<long>(c.size()));
    int r = G.num_classes();

    auto value_at = [&](int cls, auto&& f) { return f(word[G.class_rep(cls)]); };

    if (spec.family == Family::BinaryCyclic) {
        for (long j = 0; j < m; ++j) {
            ClassFunction row(r);
            for (int c = 0; c < r; ++c)
                row[c] = value_at(c, [&](std::pair<long, int> w) {
                    return Cyclo::zeta(m, j * w.first).embed(e);
                });
            T.irreducibles.push_back(std::move(row));
            T.degrees.push_back(1);
        }
    } else {
        // four linear characters
        if (n % 2 == 0) {
            for (long eps : {1L, -1L})
                for (long del : {1L, -1L}) {
                    ClassFunction row(r);
                    for (int c = 0; c < r; ++c)
                        row[c] = value_at(c, [&](std::pair<long, int> w) {
                            long v = (w.first % 2 ? eps : 1) * (w.second ? del : 1);
                            return Cyclo(v).embed(e);
                        });
                    T.irreducibles.push_back(std::move(row));
                    T.degrees.push_back(1);
                }
        } else {
            for (long t = 0; t < 4; ++t) {
                ClassFunction row(r);
                for (int c = 0; c < r; ++c)
                    row[c] = value_at(c, [&](std::pair<long, int> w) {
                        // chi(A) = (-1)^t, chi(B) = zeta_4^t
                        Cyclo v = Cyclo::zeta(2, t * w.first);
                        if (w.second) v *= Cyclo::zeta(4, t);
                        return v.embed(e);
                    });
                T.irreducibles.push_back(std::move(row));
                T.degrees.push_back(1);
            }
        }
        // n-1 two-dimensional characters
        for (long j = 1; j < n; ++j) {
            ClassFunction row(r);
            for (int c = 0; c < r; ++c)
                row[c] = value_at(c, [&](std::pair<long, int> w) {
                    if (w.second) return Cyclo(0).embed(e);
                    return (Cyclo::zeta(m, j * w.first) + Cyclo::zeta(m, -j * w.first))
                        .embed(e);
                });
            T.irreducibles.push_back(std::move(row));
            T.degrees.push_back(2);
        }
    }

    sort_table_rows(T);
    if (!verify_table(T, G))
        throw std::logic_error("closed_form_table: orthogonality failed");
    return T;
}

std::vector<long> decompose(const ClassFunction& phi, const CharacterTable& T,
                            const FiniteMatrixGroup& G) {
    std::vector<long> mult;
    for (const auto& chi : T.irreducibles) {
        Cyclo ip = inner_product(phi, chi, G);
        Rational v;
        try {
            v = ip.as_rational();
        } catch (const std::domain_error&) {
            throw std::domain_error("not a character");
        }
        if (!v.is_integer() || v.sign() < 0)
            throw std::domain_error("not a character");
        mult.push_back(static_cast<long>(v.num()));
    }
    return mult;
}

bool tables_agree_up_to_row_permutation(const CharacterTable& A,
                                        const CharacterTable& B) {
    if (A.num_classes() != B.num_classes() ||
        A.irreducibles.size() != B.irreducibles.size())
        return false;
    // both tables are already in canonical row order
    for (size_t i = 0; i < A.irreducibles.size(); ++i) {
        if (A.degrees[i] != B.degrees[i]) return false;
        for (int j = 0; j < A.num_classes(); ++j)
            if (!(A.irreducibles[i][j] == B.irreducibles[i][j])) return false;
    }
    return true;
}

}  // namespace arq
