#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "arquiver/fusion.hpp"

using namespace arq;

namespace {

FusionDatum chartab_fusion(const GroupSchemeSpec& spec) {
    auto G = build_group(spec);
    auto T = character_table(G);
    return fusion_from_chartab(T, std_character(G), G);
}

std::vector<long> sorted_row_sums(const FusionDatum& d) {
    std::vector<long> s;
    for (const auto& row : d.a) {
        long t = 0;
        for (long v : row) t += v;
        s.push_back(t);
    }
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

TEST_CASE("binary cyclic n=2 fusion is the 4-cycle") {
    auto d = chartab_fusion({Family::BinaryCyclic, 2, 5, 1});
    CHECK(d.size() == 4);
    CHECK(verify_fusion(d).empty());
    for (int i = 0; i < 4; ++i) {
        CHECK(d.a[i][i] == 0);
        long row = 0;
        for (int j = 0; j < 4; ++j) row += d.a[i][j];
        CHECK(row == 2);
    }
    // each label has exactly two distinct neighbors (a 4-cycle, not two 2-cycles
    // with doubled edges)
    for (int i = 0; i < 4; ++i) {
        int nbrs = 0;
        for (int j = 0; j < 4; ++j)
            if (d.a[i][j] > 0) ++nbrs;
        CHECK(nbrs == 2);
    }
}

TEST_CASE("quaternion fusion is the D~4 star") {
    auto d = chartab_fusion({Family::BinaryDihedral, 2, 5, 1});
    CHECK(d.size() == 5);
    CHECK(verify_fusion(d).empty());
    int center = -1;
    for (int i = 0; i < 5; ++i)
        if (d.dims[i] == 2) center = i;
    REQUIRE(center >= 0);
    for (int i = 0; i < 5; ++i) {
        if (i == center) continue;
        CHECK(d.dims[i] == 1);
        CHECK(d.a[i][center] == 1);
        CHECK(d.a[center][i] == 1);
        for (int j = 0; j < 5; ++j)
            if (j != center) CHECK(d.a[i][j] == 0);
    }
    CHECK(d.a[center][center] == 0);
}

TEST_CASE("binary icosahedral fusion") {
    auto d = chartab_fusion({Family::BinaryIcosahedral, 1, 7, 1});
    CHECK(d.size() == 9);
    CHECK(verify_fusion(d).empty());
    // the E~8 shape: row sums are vertex degrees of the affine E8 graph
    CHECK(sorted_row_sums(d) == std::vector<long>{1, 1, 1, 2, 2, 2, 2, 2, 3});
    // tensoring the 6-dimensional simple with the standard 2-dimensional one
    // gives 4 + 4' + 2 x 2' in dimensions: column sum over dims = 12
    int six = -1;
    for (int i = 0; i < 9; ++i)
        if (d.dims[i] == 6) six = i;
    REQUIRE(six >= 0);
    long total = 0;
    for (int i = 0; i < 9; ++i) total += d.a[i][six] * d.dims[i];
    CHECK(total == 12);
}

TEST_CASE("weight combinatorics matches characters for reduced groups") {
    for (long n = 1; n <= 6; ++n) {
        for (Family f : {Family::BinaryCyclic, Family::BinaryDihedral}) {
            GroupSchemeSpec spec{f, n, 7, 1};
            auto cw = fusion_from_weights(spec);
            auto cc = chartab_fusion(spec);
            CHECK(verify_fusion(cw).empty());
            CHECK(cw.size() == cc.size());
            // same dimension multiset and same row-sum multiset; a full
            // isomorphism check happens at the quiver level
            auto dw = cw.dims, dc = cc.dims;
            std::sort(dw.begin(), dw.end());
            std::sort(dc.begin(), dc.end());
            CHECK(dw == dc);
            CHECK(sorted_row_sums(cw) == sorted_row_sums(cc));
        }
    }
}

TEST_CASE("infinitesimal thickening multiplies the label count") {
    auto c = fusion_from_weights({Family::BinaryCyclic, 1, 3, 2});
    CHECK(c.size() == 6);
    CHECK(verify_fusion(c).empty());

    auto d = fusion_from_weights({Family::BinaryDihedral, 1, 3, 2});
    CHECK(d.size() == 4 + (3 - 1));
    CHECK(verify_fusion(d).empty());

    auto big = fusion_from_weights({Family::BinaryDihedral, 4, 5, 2});
    CHECK(big.size() == 4 + (20 - 1));
    CHECK(verify_fusion(big).empty());
}

TEST_CASE("degenerate dihedral N=1 is a 4-cycle") {
    auto d = fusion_from_weights({Family::BinaryDihedral, 1, 5, 1});
    CHECK(d.size() == 4);
    CHECK(d.dims == std::vector<long>(4, 1));
    CHECK(verify_fusion(d).empty());
    for (int i = 0; i < 4; ++i) {
        int nbrs = 0;
        for (int j = 0; j < 4; ++j)
            if (d.a[i][j] > 0) ++nbrs;
        CHECK(nbrs == 2);
        CHECK(d.a[i][i] == 0);
    }
}

TEST_CASE("verify_fusion flags corrupted data") {
    auto d = fusion_from_weights({Family::BinaryCyclic, 2, 5, 1});
    REQUIRE(verify_fusion(d).empty());
    auto broken = d;
    broken.a[0][1] += 1;
    CHECK(!verify_fusion(broken).empty());
    auto shrunk = d;
    shrunk.dims.pop_back();
    CHECK(!verify_fusion(shrunk).empty());
}

TEST_CASE("weights route rejects exceptional families") {
    CHECK_THROWS(fusion_from_weights({Family::BinaryIcosahedral, 1, 7, 1}));
}
