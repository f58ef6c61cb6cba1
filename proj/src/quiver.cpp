#include "arquiver/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace arq {

void Quiver::add_arrow(int from, int to, long mult) {
    if (mult == 0) return;
    if (from < 0 || from >= size() || to < 0 || to >= size())
        throw std::out_of_range("add_arrow: vertex index");
    auto it = std::lower_bound(arrows.begin(), arrows.end(), std::pair<int, int>{from, to},
                               [](const Arrow& a, const std::pair<int, int>& k) {
                                   return std::pair<int, int>{a.from, a.to} < k;
                               });
    if (it != arrows.end() && it->from == from && it->to == to)
        it->mult += mult;
    else
        arrows.insert(it, Arrow{from, to, mult});
}

long Quiver::arrow_mult(int from, int to) const {
    for (const auto& a : arrows)
        if (a.from == from && a.to == to) return a.mult;
    return 0;
}

int Quiver::vertex_index(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (vertices[i] == name) return i;
    return -1;
}

Quiver mckay_quiver(const FusionDatum& d) {
    auto violations = verify_fusion(d);
    if (!violations.empty())
        throw std::invalid_argument("mckay_quiver: " + violations.front());
    Quiver q;
    q.vertices = d.labels;
    for (int i = 0; i < d.size(); ++i)
        for (int j = 0; j < d.size(); ++j)
            if (d.a[i][j] > 0) q.add_arrow(i, j, d.a[i][j]);
    return q;
}

Quiver separated_quiver(const Quiver& q) {
    Quiver s;
    int n = q.size();
    s.vertices = q.vertices;
    for (const auto& v : q.vertices) s.vertices.push_back(v + "'");
    for (const auto& a : q.arrows) s.add_arrow(a.from, a.to + n, a.mult);
    return s;
}

std::vector<Quiver> connected_components(const Quiver& q) {
    int n = q.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (const auto& a : q.arrows) {
        adj[a.from].push_back(a.to);
        adj[a.to].push_back(a.from);
    }
    int nc = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
        }
        ++nc;
    }
    // order components by their smallest vertex label
    std::vector<std::string> min_label(nc);
    for (int v = 0; v < n; ++v) {
        auto& m = min_label[comp[v]];
        if (m.empty() || q.vertices[v] < m) m = q.vertices[v];
    }
    std::vector<int> order(nc);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return min_label[a] < min_label[b]; });
    std::vector<int> rank(nc);
    for (int i = 0; i < nc; ++i) rank[order[i]] = i;

    std::vector<Quiver> out(nc);
    std::vector<int> local(n);
    for (int v = 0; v < n; ++v) {
        auto& c = out[rank[comp[v]]];
        local[v] = c.size();
        c.vertices.push_back(q.vertices[v]);
    }
    for (const auto& a : q.arrows)
        out[rank[comp[a.from]]].add_arrow(local[a.from], local[a.to], a.mult);
    return out;
}

namespace {

using AdjMat = std::vector<std::vector<long>>;

std::vector<long> degree_seq(const AdjMat& A) {
    std::vector<long> d(A.size(), 0);
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A.size(); ++j) d[i] += A[i][j] * (i == j ? 2 : 1);
    return d;
}

// ordering of A's vertices so each vertex (after the first of a component)
// is adjacent to a previously placed one; keeps the backtracking constrained
std::vector<int> placement_order(const AdjMat& A) {
    size_t n = A.size();
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    std::vector<int> attached(n, 0);
    for (size_t step = 0; step < n; ++step) {
        int best = -1;
        for (size_t v = 0; v < n; ++v) {
            if (placed[v]) continue;
            if (best < 0 || attached[v] > attached[best]) best = static_cast<int>(v);
        }
        placed[best] = true;
        order.push_back(best);
        for (size_t v = 0; v < n; ++v)
            if (!placed[v] && A[best][v] != 0) ++attached[v];
    }
    return order;
}

bool iso_search(const AdjMat& A, const AdjMat& B, const std::vector<long>& degA,
                const std::vector<long>& degB, const std::vector<long>* cA,
                const std::vector<long>* cB, const std::vector<int>& order,
                std::vector<int>& map, std::vector<bool>& used, size_t pos) {
    size_t n = A.size();
    if (pos == n) return true;
    int va = order[pos];
    for (size_t b = 0; b < n; ++b) {
        if (used[b] || degA[va] != degB[b]) continue;
        if (cA && (*cA)[va] != (*cB)[b]) continue;
        if (A[va][va] != B[b][b]) continue;
        bool ok = true;
        for (size_t k = 0; k < pos && ok; ++k)
            if (A[va][order[k]] != B[b][map[order[k]]]) ok = false;
        if (!ok) continue;
        map[va] = static_cast<int>(b);
        used[b] = true;
        if (iso_search(A, B, degA, degB, cA, cB, order, map, used, pos + 1))
            return true;
        used[b] = false;
    }
    return false;
}

}  // namespace

bool undirected_isomorphic(const AdjMat& A, const AdjMat& B, const std::vector<long>* cA,
                           const std::vector<long>* cB) {
    if (A.size() != B.size()) return false;
    auto degA = degree_seq(A), degB = degree_seq(B);
    auto sa = degA, sb = degB;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    if (cA || cB) {
        if (!cA || !cB) return false;
        auto ca = *cA, cb = *cB;
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return false;
    }
    std::vector<int> map(A.size(), -1);
    std::vector<bool> used(A.size(), false);
    return iso_search(A, B, degA, degB, cA, cB, placement_order(A), map, used, 0);
}

std::vector<std::vector<long>> underlying_graph(const Quiver& q) {
    int n = q.size();
    AdjMat E(n, std::vector<long>(n, 0));
    for (const auto& a : q.arrows) {
        long back = q.arrow_mult(a.to, a.from);
        E[a.from][a.to] = E[a.to][a.from] = std::max(a.mult, back);
    }
    return E;
}

std::vector<std::vector<long>> affine_template(const AffineType& t) {
    long m = t.index;
    if (t.family == 'A') {
        if (m < 1) throw std::invalid_argument("affine A~ index must be >= 1");
        size_t n = static_cast<size_t>(m + 1);
        AdjMat A(n, std::vector<long>(n, 0));
        if (m == 1) {
            A[0][1] = A[1][0] = 2;
            return A;
        }
        for (size_t i = 0; i < n; ++i) {
            size_t j = (i + 1) % n;
            A[i][j] += 1;
            A[j][i] += 1;
        }
        return A;
    }
    if (t.family == 'D') {
        if (m < 4) throw std::invalid_argument("affine D~ index must be >= 4");
        // path 2..m-2 with two extra leaves at each end
        size_t n = static_cast<size_t>(m + 1);
        AdjMat A(n, std::vector<long>(n, 0));
        auto link = [&](size_t i, size_t j) { A[i][j] = A[j][i] = 1; };
        link(0, 2);
        link(1, 2);
        for (size_t i = 2; i + 3 < n; ++i) link(i, i + 1);
        link(n - 3, n - 2);
        link(n - 3, n - 1);
        return A;
    }
    if (t.family == 'E' && m >= 6 && m <= 8) {
        // star with three arms from a branch vertex: arm lengths
        // E~6: (2,2,2), E~7: (3,3,1), E~8: (5,2,1)
        long arms[3] = {2, 2, 2};
        if (m == 7) arms[0] = 3, arms[1] = 3, arms[2] = 1;
        if (m == 8) arms[0] = 5, arms[1] = 2, arms[2] = 1;
        size_t n = static_cast<size_t>(m + 1);
        AdjMat A(n, std::vector<long>(n, 0));
        auto link = [&](size_t i, size_t j) { A[i][j] = A[j][i] = 1; };
        size_t next = 1;
        for (long arm = 0; arm < 3; ++arm) {
            size_t prev = 0;
            for (long s = 0; s < arms[arm]; ++s) {
                link(prev, next);
                prev = next++;
            }
        }
        return A;
    }
    throw std::invalid_argument("unknown affine type " + t.str());
}

std::optional<AffineType> classify_affine(const Quiver& q) {
    int n = q.size();
    if (n < 2) return std::nullopt;
    AdjMat U(n, std::vector<long>(n, 0));
    for (const auto& a : q.arrows) {
        if (a.from == a.to) return std::nullopt;  // loops never affine ADE
        U[a.from][a.to] += a.mult;
    }
    AdjMat E(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long total = U[i][j] + U[j][i];
            if (total % 2 != 0) return std::nullopt;
            E[i][j] = E[j][i] = total / 2;
        }

    std::vector<AffineType> candidates{{'A', n - 1}, {'D', n - 1},
                                       {'E', 6},     {'E', 7},
                                       {'E', 8}};
    for (const auto& t : candidates) {
        if (t.family == 'A' && t.index < 1) continue;
        if (t.family == 'D' && t.index < 4) continue;
        if (t.family == 'E' && t.index + 1 != n) continue;
        if (undirected_isomorphic(E, affine_template(t))) return t;
    }
    return std::nullopt;
}

std::string export_dot(const Quiver& q) {
    std::ostringstream os;
    os << "digraph {\n";
    for (const auto& v : q.vertices) os << "  \"" << v << "\";\n";
    for (const auto& a : q.arrows)
        for (long k = 0; k < a.mult; ++k)
            os << "  \"" << q.vertices[a.from] << "\" -> \"" << q.vertices[a.to]
               << "\";\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const Quiver& q) {
    nlohmann::ordered_json j;
    j["vertices"] = q.vertices;
    j["arrows"] = nlohmann::ordered_json::array();
    for (const auto& a : q.arrows)
        j["arrows"].push_back({{"from", a.from}, {"to", a.to}, {"mult", a.mult}});
    return j.dump(2) + "\n";
}

Quiver import_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Quiver q;
    q.vertices = j.at("vertices").get<std::vector<std::string>>();
    for (const auto& a : j.at("arrows"))
        q.add_arrow(a.at("from").get<int>(), a.at("to").get<int>(),
                    a.value("mult", 1L));
    return q;
}

}  // namespace arq
