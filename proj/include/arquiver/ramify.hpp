#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arquiver/matgroup.hpp"
#include "arquiver/rational.hpp"

namespace arq {

/// Point of P^1 with cyclotomic coordinates, normalized so the leading
/// nonzero coordinate is 1: every point is [1:w] or [0:1].
struct ProjPoint {
    Cyclo x;
    Cyclo y;

    static ProjPoint make(const Cyclo& x, const Cyclo& y);  // normalizes
    bool operator==(const ProjPoint& o) const { return x == o.x && y == o.y; }
    std::string str() const;
};

/// Action of g on [x:y] by the Moebius rule [ax+by : cx+dy], renormalized.
ProjPoint mobius_apply(const Mat2& g, const ProjPoint& pt);

/// The 1 or 2 eigenlines of a non-central finite-order element; eigenvalues
/// are roots of unity of the element's order, found by exact search.
/// Rejects central g.
std::vector<ProjPoint> mobius_fixed_points(const Mat2& g);

struct ActionContext {
    FiniteMatrixGroup group;  // the reduced part, acting through G/{+-I}
    GroupSchemeSpec spec;
};

ActionContext make_action_context(const GroupSchemeSpec& spec);

struct ExceptionalOrbit {
    ProjPoint rep;
    long orbit_size = 0;
    long reduced_stabilizer = 0;  // in G/{+-I}
    long multiplier = 1;          // p^{r-1} at the torus-fixed points
    long e = 1;                   // ramification index
};

/// Points with nontrivial stabilizer, grouped into orbits of the effective
/// group: fixed points of all non-central elements, plus [1:0] and [0:1]
/// for non-reduced cyclic/dihedral families. Orbits with e = 1 are dropped.
std::vector<ExceptionalOrbit> exceptional_orbits(const ActionContext& ctx);

/// e = reduced stabilizer order, times p^{r-1} when x is a torus-fixed point
/// of a non-reduced cyclic/dihedral family.
long ramification_index(const ActionContext& ctx, const ProjPoint& x);

struct RamificationReport {
    GroupSchemeSpec spec;
    long effective_order = 1;
    std::vector<ExceptionalOrbit> orbits;
    std::vector<long> tube_ranks;  // sorted, one per exceptional orbit
    long generic_rank = 1;
    bool bound_holds = true;  // every rank e satisfies e <= e * 1
    std::vector<std::string> assumptions;
};

/// Exact check 2 = |G_eff| * (2 - sum over orbits of (1 - 1/e)); only
/// meaningful for r = 1. Returns (holds, residual).
std::pair<bool, Rational> riemann_hurwitz_check(const RamificationReport& report);

RamificationReport tube_rank_report(const ActionContext& ctx);

}  // namespace arq
