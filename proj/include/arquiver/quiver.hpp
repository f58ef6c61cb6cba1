#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arquiver/fusion.hpp"

namespace arq {

struct Arrow {
    int from = 0;
    int to = 0;
    long mult = 1;
};

/// Finite directed multigraph with labeled vertices. Arrows are kept
/// sorted by (from, to) with multiplicities merged.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int size() const { return static_cast<int>(vertices.size()); }
    void add_arrow(int from, int to, long mult = 1);
    long arrow_mult(int from, int to) const;
    int vertex_index(const std::string& name) const;  // -1 if absent
};

struct AffineType {
    char family = 'A';  // 'A', 'D' or 'E'
    long index = 0;

    std::string str() const { return std::string(1, family) + "~" + std::to_string(index); }
    bool operator==(const AffineType& o) const {
        return family == o.family && index == o.index;
    }
};

/// Vertex per simple label, a[i][j] arrows S_i -> S_j.
/// Throws if verify_fusion reports violations.
Quiver mckay_quiver(const FusionDatum& d);

/// Doubled vertex set {v, v'}; arrows i -> j' for every arrow i -> j.
Quiver separated_quiver(const Quiver& q);

/// Weakly connected components, ordered by smallest vertex label.
std::vector<Quiver> connected_components(const Quiver& q);

/// Classify the underlying undirected graph (opposite arrow pairs collapsed
/// pairwise into single edges) against the affine ADE templates. Odd
/// multiplicities or no template match yield nullopt.
std::optional<AffineType> classify_affine(const Quiver& q);

/// Undirected adjacency of the quiver with orientation forgotten: the edge
/// multiplicity between i and j is max(arrows i->j, arrows j->i), so a
/// doubled pair and a single arrow both count once per lane.
std::vector<std::vector<long>> underlying_graph(const Quiver& q);

/// Underlying undirected multigraph template for an affine type.
/// A~m: (m+1)-cycle (m = 1 is the doubled edge); D~m and E~6..8 the usual
/// tree shapes.
std::vector<std::vector<long>> affine_template(const AffineType& t);

/// Undirected multigraph isomorphism with optional vertex colors,
/// plain backtracking with degree pruning.
bool undirected_isomorphic(const std::vector<std::vector<long>>& A,
                           const std::vector<std::vector<long>>& B,
                           const std::vector<long>* colorsA = nullptr,
                           const std::vector<long>* colorsB = nullptr);

std::string export_dot(const Quiver& q);
std::string export_json(const Quiver& q);
Quiver import_json(const std::string& text);

}  // namespace arq
