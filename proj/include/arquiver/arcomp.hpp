#pragma once

#include <string>
#include <vector>

#include "arquiver/quiver.hpp"

namespace arq {

/// The class V(n,i): for n >= 0 the Weyl module V(np+i), for n <= 0 the dual
/// V(-np+i)*. Dimension depends only on (|n|, i).
struct WeylClass {
    long n = 0;
    long i = 0;
    long p = 5;
};

long weyl_dim(const WeylClass& w);

/// Omega^k(L(i)) for a non-projective simple L(i), 0 <= i <= p-2:
/// even k gives V(k, i), odd k gives V(k, p-2-i).
WeylClass heller(long k, long i, long p);

/// V(n,l) (x) S_j, or with the projective flag the projective cover
/// P(p-2-l) (x) S_j of dimension 2p * dim S_j (weyl.i stores p-2-l).
struct ModuleLabel {
    WeylClass weyl;
    int simple = 0;
    bool projective = false;

    long dim(const FusionDatum& d) const;
    std::string name(const FusionDatum& d) const;
    bool operator==(const ModuleLabel& o) const {
        return weyl.n == o.weyl.n && weyl.i == o.weyl.i && weyl.p == o.weyl.p &&
               simple == o.simple && projective == o.projective;
    }
};

ModuleLabel tau(const ModuleLabel& m);
ModuleLabel tau_inv(const ModuleLabel& m);

struct ASSeq {
    ModuleLabel left;
    std::vector<ModuleLabel> middle;  // sorted by (simple, projective)
    ModuleLabel right;
};

/// The almost split sequence ending in `right` = V(n,l) (x) S_j:
/// left = V(n+2,l) (x) S_j, middle contains a[i][j] copies of
/// V(n+1,l) (x) S_i. At n = -1 the middle additionally contains the
/// projective P(p-2-l) (x) S_j; without it the dimensions cannot balance,
/// since dim V(1,l) + dim V(-1,l) = 2p + 2 dim V(0,l).
ASSeq ass(const ModuleLabel& right, const FusionDatum& d);

struct ComponentVertex {
    long nu = 0;
    int qvertex = 0;  // index into the separated component's vertex list
    ModuleLabel label;
};

/// Finite window of the translation quiver Z[Q] for a separated-quiver
/// component Q, with module labels per psi: unprimed t at slice nu carries
/// V(2nu+1,l) (x) S_t, primed t' carries V(2nu,l) (x) S_t.
struct ComponentWindow {
    Quiver Q;
    long l = 0;
    long p = 5;
    long nu_min = -3;
    long nu_max = 3;
    std::vector<ComponentVertex> vertices;  // slice-major, qvertex-minor
    std::vector<Arrow> arrows;              // indices into vertices
    std::vector<int> tau_map;               // -1 where tau leaves the window
    std::vector<ASSeq> sequences;           // one per vertex whose tau is inside

    int index(long nu, int qvertex) const;
};

/// Realizes Z[Q] over nu in [nu_min, nu_max] where Q is the connected
/// component of the separated McKay quiver containing the primed copy of
/// seed j. Rejects l outside [0, p-2].
ComponentWindow build_component(long l, int seed_j, const FusionDatum& d, long p,
                                long nu_min = -3, long nu_max = 3);

/// Re-checks the window against Q from scratch: per-slice label bijectivity,
/// arrow multiplicities a la Z[Q], tau-equivariance of the labels, the mesh
/// property, and the dimension identity of every stored sequence.
std::vector<std::string> verify_psi(const ComponentWindow& w, const Quiver& Q,
                                    const FusionDatum& d);

/// Window of the rank-e tube Z[A_inf]/(tau^e): vertices (slot mod e,
/// quasi-length 1..L), tau = slot rotation.
struct TubeWindow {
    long e = 1;
    long L = 1;
    std::vector<Arrow> arrows;  // indices slot*L + (ql-1)

    int index(long slot, long ql) const;
    int tau(int v) const;
    int num_vertices() const { return static_cast<int>(e * L); }
};

TubeWindow build_tube(long e, long L);

}  // namespace arq
