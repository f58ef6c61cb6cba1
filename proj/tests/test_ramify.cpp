#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "arquiver/ramify.hpp"

using namespace arq;

namespace {

std::vector<long> sorted_multiset(const std::vector<ExceptionalOrbit>& orbits,
                                  long ExceptionalOrbit::*field) {
    std::vector<long> v;
    for (const auto& o : orbits) v.push_back(o.*field);
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("projective point normalization") {
    auto p = ProjPoint::make(Cyclo(2), Cyclo(6));
    CHECK(p.x == Cyclo(1));
    CHECK(p.y == Cyclo(3));
    auto q = ProjPoint::make(Cyclo::zeta(8), Cyclo::zeta(8, 3));
    CHECK(q.x == Cyclo(1));
    CHECK(q.y == Cyclo::zeta(8, 2));
    auto inf = ProjPoint::make(Cyclo(0), Cyclo(-5));
    CHECK(inf.x == Cyclo(0));
    CHECK(inf.y == Cyclo(1));
    CHECK_THROWS(ProjPoint::make(Cyclo(0), Cyclo(0)));
}

TEST_CASE("fixed points of diagonal and antidiagonal elements") {
    Mat2 diag{Cyclo::zeta(5), Cyclo(0), Cyclo(0), Cyclo::zeta(5, 4)};
    auto fp = mobius_fixed_points(diag);
    REQUIRE(fp.size() == 2);
    bool has_zero = false, has_inf = false;
    for (const auto& pt : fp) {
        if (pt == ProjPoint::make(Cyclo(1), Cyclo(0))) has_zero = true;
        if (pt == ProjPoint::make(Cyclo(0), Cyclo(1))) has_inf = true;
    }
    CHECK(has_zero);
    CHECK(has_inf);

    Mat2 anti{Cyclo(0), Cyclo(1), Cyclo(-1), Cyclo(0)};
    auto fa = mobius_fixed_points(anti);
    REQUIRE(fa.size() == 2);
    for (const auto& pt : fa) {
        CHECK(pt.x == Cyclo(1));
        CHECK((pt.y == Cyclo::zeta(4) || pt.y == -Cyclo::zeta(4)));
        CHECK(mobius_apply(anti, pt) == pt);
    }

    Mat2 minus_id{Cyclo(-1), Cyclo(0), Cyclo(0), Cyclo(-1)};
    CHECK_THROWS(mobius_fixed_points(minus_id));
}

TEST_CASE("fixed points are invariant under the element") {
    auto ctx = make_action_context({Family::BinaryOctahedral, 1, 5, 1});
    int checked = 0;
    for (const auto& g : ctx.group.elements()) {
        if (g.b.is_zero() && g.c.is_zero() && g.a == g.d) continue;
        for (const auto& pt : mobius_fixed_points(g)) {
            CHECK(mobius_apply(g, pt) == pt);
            ++checked;
        }
    }
    CHECK(checked == 2 * (48 - 2));
}

TEST_CASE("exceptional orbit data per family") {
    struct Case {
        GroupSchemeSpec spec;
        std::vector<long> e_multiset;
        std::vector<long> orbit_sizes;
    };
    std::vector<Case> cases{
        {{Family::BinaryCyclic, 3, 5, 1}, {3, 3}, {1, 1}},
        {{Family::BinaryCyclic, 6, 5, 1}, {6, 6}, {1, 1}},
        {{Family::BinaryDihedral, 3, 5, 1}, {2, 2, 3}, {2, 3, 3}},
        {{Family::BinaryTetrahedral, 1, 5, 1}, {2, 3, 3}, {4, 4, 6}},
        {{Family::BinaryOctahedral, 1, 5, 1}, {2, 3, 4}, {6, 8, 12}},
        {{Family::BinaryIcosahedral, 1, 7, 1}, {2, 3, 5}, {12, 20, 30}},
    };
    for (const auto& c : cases) {
        auto ctx = make_action_context(c.spec);
        auto orbits = exceptional_orbits(ctx);
        CHECK(sorted_multiset(orbits, &ExceptionalOrbit::e) == c.e_multiset);
        CHECK(sorted_multiset(orbits, &ExceptionalOrbit::orbit_size) ==
              c.orbit_sizes);
        long eff = ctx.group.order() / 2;
        for (const auto& o : orbits)
            CHECK(o.orbit_size * o.reduced_stabilizer == eff);
    }
}

TEST_CASE("degenerate small groups") {
    // binary cyclic n=1 is {+-I}: trivial effective action, no orbits
    auto c1 = make_action_context({Family::BinaryCyclic, 1, 5, 1});
    CHECK(exceptional_orbits(c1).empty());

    // binary dihedral n=1 is cyclic of order 4 acting through order 2
    auto d1 = make_action_context({Family::BinaryDihedral, 1, 5, 1});
    auto orbits = exceptional_orbits(d1);
    CHECK(sorted_multiset(orbits, &ExceptionalOrbit::e) == std::vector<long>{2, 2});
}

TEST_CASE("infinitesimal multiplier at torus-fixed points") {
    auto c = make_action_context({Family::BinaryCyclic, 2, 3, 2});
    auto orbits = exceptional_orbits(c);
    CHECK(sorted_multiset(orbits, &ExceptionalOrbit::e) == std::vector<long>{6, 6});
    for (const auto& o : orbits) CHECK(o.multiplier == 3);
    CHECK(ramification_index(c, ProjPoint::make(Cyclo(1), Cyclo(0))) == 6);
    CHECK(ramification_index(c, ProjPoint::make(Cyclo(1), Cyclo(1))) == 1);

    auto d = make_action_context({Family::BinaryDihedral, 1, 3, 2});
    auto dorb = exceptional_orbits(d);
    CHECK(sorted_multiset(dorb, &ExceptionalOrbit::e) == std::vector<long>{2, 2, 3});

    auto d4 = make_action_context({Family::BinaryDihedral, 4, 3, 2});
    auto d4orb = exceptional_orbits(d4);
    CHECK(sorted_multiset(d4orb, &ExceptionalOrbit::e) ==
          std::vector<long>{2, 2, 12});
}

TEST_CASE("riemann-hurwitz is exact for reduced families") {
    for (long n = 1; n <= 6; ++n)
        for (Family f : {Family::BinaryCyclic, Family::BinaryDihedral}) {
            auto ctx = make_action_context({f, n, 7, 1});
            auto rep = tube_rank_report(ctx);
            auto [ok, residual] = riemann_hurwitz_check(rep);
            CHECK(ok);
            CHECK(residual == Rational(0));
        }
    for (Family f : {Family::BinaryTetrahedral, Family::BinaryOctahedral,
                     Family::BinaryIcosahedral}) {
        auto ctx = make_action_context({f, 1, f == Family::BinaryIcosahedral ? 7 : 5, 1});
        auto [ok, residual] = riemann_hurwitz_check(tube_rank_report(ctx));
        CHECK(ok);
    }
}

TEST_CASE("tube rank report") {
    auto ctx = make_action_context({Family::BinaryIcosahedral, 1, 7, 1});
    auto rep = tube_rank_report(ctx);
    CHECK(rep.tube_ranks == std::vector<long>{2, 3, 5});
    CHECK(rep.generic_rank == 1);
    CHECK(rep.bound_holds);
    CHECK(rep.effective_order == 60);
    CHECK(!rep.assumptions.empty());

    auto nr = tube_rank_report(make_action_context({Family::BinaryCyclic, 2, 3, 2}));
    CHECK(nr.tube_ranks == std::vector<long>{6, 6});
    CHECK(nr.assumptions.size() == 3);
}
