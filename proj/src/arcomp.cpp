#include "arquiver/arcomp.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace arq {

long weyl_dim(const WeylClass& w) {
    if (w.p < 3 || w.i < 0 || w.i >= w.p)
        throw std::invalid_argument("weyl_dim: need odd prime p and 0 <= i < p");
    return std::abs(w.n) * w.p + w.i + 1;
}

WeylClass heller(long k, long i, long p) {
    if (i < 0 || i > p - 2)
        throw std::invalid_argument("heller: simple weight must lie in [0, p-2]");
    long rem = ((k % 2) + 2) % 2;
    return WeylClass{k, rem == 0 ? i : p - 2 - i, p};
}

long ModuleLabel::dim(const FusionDatum& d) const {
    long base = projective ? 2 * weyl.p : weyl_dim(weyl);
    return base * d.dims[simple];
}

std::string ModuleLabel::name(const FusionDatum& d) const {
    std::ostringstream os;
    if (projective)
        os << "P(" << weyl.i << ")";
    else
        os << "V(" << weyl.n << "," << weyl.i << ")";
    os << "(x)S[" << d.labels[simple] << "]";
    return os.str();
}

ModuleLabel tau(const ModuleLabel& m) {
    if (m.projective) throw std::invalid_argument("tau: projective label");
    ModuleLabel r = m;
    r.weyl.n += 2;
    return r;
}

ModuleLabel tau_inv(const ModuleLabel& m) {
    if (m.projective) throw std::invalid_argument("tau_inv: projective label");
    ModuleLabel r = m;
    r.weyl.n -= 2;
    return r;
}

ASSeq ass(const ModuleLabel& right, const FusionDatum& d) {
    if (right.projective)
        throw std::invalid_argument("ass: projective modules have no such sequence");
    int j = right.simple;
    if (j < 0 || j >= d.size()) throw std::out_of_range("ass: simple index");
    ASSeq s;
    s.right = right;
    s.left = tau(right);
    WeylClass mid{right.weyl.n + 1, right.weyl.i, right.weyl.p};
    for (int i = 0; i < d.size(); ++i)
        for (long c = 0; c < d.a[i][j]; ++c)
            s.middle.push_back(ModuleLabel{mid, i, false});
    if (right.weyl.n == -1)
        s.middle.push_back(
            ModuleLabel{WeylClass{0, right.weyl.p - 2 - right.weyl.i, right.weyl.p},
                        j, true});
    std::sort(s.middle.begin(), s.middle.end(),
              [](const ModuleLabel& a, const ModuleLabel& b) {
                  if (a.projective != b.projective) return b.projective;
                  return a.simple < b.simple;
              });
    long lhs = s.left.dim(d) + s.right.dim(d);
    long rhs = 0;
    for (const auto& m : s.middle) rhs += m.dim(d);
    if (lhs != rhs) throw std::logic_error("ass: dimension identity violated");
    return s;
}

int ComponentWindow::index(long nu, int qvertex) const {
    if (nu < nu_min || nu > nu_max || qvertex < 0 || qvertex >= Q.size()) return -1;
    return static_cast<int>((nu - nu_min) * Q.size() + qvertex);
}

namespace {

// primed vertices carry a trailing apostrophe in the separated quiver
bool is_primed(const std::string& v) { return !v.empty() && v.back() == '\''; }

std::string unprime(const std::string& v) {
    return is_primed(v) ? v.substr(0, v.size() - 1) : v;
}

int fusion_index(const FusionDatum& d, const std::string& label) {
    for (int i = 0; i < d.size(); ++i)
        if (d.labels[i] == label) return i;
    throw std::invalid_argument("unknown simple label " + label);
}

ModuleLabel psi(const std::string& qlabel, long nu, long l, long p,
                const FusionDatum& d) {
    long n = is_primed(qlabel) ? 2 * nu : 2 * nu + 1;
    return ModuleLabel{WeylClass{n, l, p}, fusion_index(d, unprime(qlabel)), false};
}

}  // namespace

ComponentWindow build_component(long l, int seed_j, const FusionDatum& d, long p,
                                long nu_min, long nu_max) {
    if (l < 0 || l > p - 2)
        throw std::invalid_argument("build_component: l must lie in [0, p-2]");
    if (seed_j < 0 || seed_j >= d.size())
        throw std::out_of_range("build_component: seed index");
    if (nu_min > nu_max)
        throw std::invalid_argument("build_component: empty window");
    auto violations = verify_fusion(d);
    if (!violations.empty())
        throw std::invalid_argument("build_component: " + violations.front());

    auto sep = separated_quiver(mckay_quiver(d));
    auto comps = connected_components(sep);
    std::string seed_name = d.labels[seed_j] + "'";
    ComponentWindow w;
    bool found = false;
    for (auto& c : comps)
        if (c.vertex_index(seed_name) >= 0) {
            w.Q = std::move(c);
            found = true;
            break;
        }
    if (!found) throw std::logic_error("build_component: seed vertex missing");

    w.l = l;
    w.p = p;
    w.nu_min = nu_min;
    w.nu_max = nu_max;

    int m = w.Q.size();
    for (long nu = nu_min; nu <= nu_max; ++nu)
        for (int v = 0; v < m; ++v)
            w.vertices.push_back(
                ComponentVertex{nu, v, psi(w.Q.vertices[v], nu, l, p, d)});

    // Z[Q] arrows: (nu,x)->(nu,y) and (nu+1,y)->(nu,x) per arrow x->y in Q
    for (long nu = nu_min; nu <= nu_max; ++nu)
        for (const auto& a : w.Q.arrows) {
            w.arrows.push_back(
                Arrow{w.index(nu, a.from), w.index(nu, a.to), a.mult});
            if (nu + 1 <= nu_max)
                w.arrows.push_back(
                    Arrow{w.index(nu + 1, a.to), w.index(nu, a.from), a.mult});
        }
    std::sort(w.arrows.begin(), w.arrows.end(), [](const Arrow& a, const Arrow& b) {
        return std::pair{a.from, a.to} < std::pair{b.from, b.to};
    });

    for (const auto& v : w.vertices) {
        w.tau_map.push_back(w.index(v.nu + 1, v.qvertex));
        if (w.tau_map.back() >= 0) w.sequences.push_back(ass(v.label, d));
    }
    return w;
}

std::vector<std::string> verify_psi(const ComponentWindow& w, const Quiver& Q,
                                    const FusionDatum& d) {
    std::vector<std::string> out;
    auto fail = [&](const std::string& msg) { out.push_back(msg); };
    int m = Q.size();
    if (w.Q.size() != m) {
        fail("component size mismatch");
        return out;
    }
    long slices = w.nu_max - w.nu_min + 1;
    if (static_cast<long>(w.vertices.size()) != slices * m) {
        fail("vertex count is not |Q| per slice");
        return out;
    }

    // per-slice bijectivity: labels in slice nu are exactly
    // {psi(nu, v) : v in Q}, each exactly once
    for (long nu = w.nu_min; nu <= w.nu_max; ++nu) {
        std::vector<bool> seen(m, false);
        for (int v = 0; v < m; ++v) {
            const auto& cv = w.vertices[w.index(nu, v)];
            if (cv.nu != nu || cv.qvertex != v) {
                fail("vertex indexing broken at slice " + std::to_string(nu));
                continue;
            }
            ModuleLabel expect = psi(Q.vertices[v], nu, w.l, w.p, d);
            if (!(cv.label == expect))
                fail("label mismatch at (" + std::to_string(nu) + "," +
                     Q.vertices[v] + ")");
            if (seen[v]) fail("duplicate vertex in slice " + std::to_string(nu));
            seen[v] = true;
        }
    }

    // arrow multiplicities of Z[Q]
    auto mult_of = [&](int from, int to) {
        long t = 0;
        for (const auto& a : w.arrows)
            if (a.from == from && a.to == to) t += a.mult;
        return t;
    };
    long expected_arrows = 0;
    for (long nu = w.nu_min; nu <= w.nu_max; ++nu)
        for (const auto& a : Q.arrows) {
            if (mult_of(w.index(nu, a.from), w.index(nu, a.to)) != a.mult)
                fail("missing arrow (" + std::to_string(nu) + "," +
                     Q.vertices[a.from] + ") -> (" + std::to_string(nu) + "," +
                     Q.vertices[a.to] + ")");
            ++expected_arrows;
            if (nu + 1 <= w.nu_max) {
                if (mult_of(w.index(nu + 1, a.to), w.index(nu, a.from)) != a.mult)
                    fail("missing arrow (" + std::to_string(nu + 1) + "," +
                         Q.vertices[a.to] + ") -> (" + std::to_string(nu) + "," +
                         Q.vertices[a.from] + ")");
                ++expected_arrows;
            }
        }
    long total = 0;
    for (const auto& a : w.arrows) total += (a.mult > 0 ? 1 : 0);
    if (total != expected_arrows) fail("extra arrows beyond Z[Q]");

    // mesh property on the interior: x->y iff tau(y)->x with equal mult
    for (const auto& a : w.arrows) {
        int ty = w.tau_map[a.to];
        if (ty < 0) continue;
        if (mult_of(ty, a.from) != a.mult) fail("mesh property violated");
    }

    // tau-equivariance on labels
    for (size_t v = 0; v < w.vertices.size(); ++v) {
        int tv = w.tau_map[v];
        if (tv < 0) continue;
        if (!(w.vertices[tv].label == tau(w.vertices[v].label)))
            fail("tau-equivariance violated at vertex " + std::to_string(v));
    }

    // stored sequences: dimension identity and left = tau(right)
    for (const auto& s : w.sequences) {
        if (!(s.left == tau(s.right))) fail("sequence left term is not tau(right)");
        long lhs = s.left.dim(d) + s.right.dim(d);
        long rhs = 0;
        for (const auto& mm : s.middle) rhs += mm.dim(d);
        if (lhs != rhs) fail("sequence dimension identity violated");
    }
    return out;
}

int TubeWindow::index(long slot, long ql) const {
    if (ql < 1 || ql > L) return -1;
    long s = ((slot % e) + e) % e;
    return static_cast<int>(s * L + (ql - 1));
}

int TubeWindow::tau(int v) const {
    long slot = v / L, ql = v % L + 1;
    return index(slot + 1, ql);
}

TubeWindow build_tube(long e, long L) {
    if (e < 1 || L < 1) throw std::invalid_argument("build_tube: e, L >= 1");
    TubeWindow t;
    t.e = e;
    t.L = L;
    // Z[A_inf]/(tau^e): arrows (s,l)->(s,l+1) and (s+1,l+1)->(s,l)
    for (long s = 0; s < e; ++s)
        for (long ql = 1; ql < L; ++ql) {
            t.arrows.push_back(Arrow{t.index(s, ql), t.index(s, ql + 1), 1});
            t.arrows.push_back(Arrow{t.index(s + 1, ql + 1), t.index(s, ql), 1});
        }
    std::sort(t.arrows.begin(), t.arrows.end(), [](const Arrow& a, const Arrow& b) {
        return std::pair{a.from, a.to} < std::pair{b.from, b.to};
    });
    return t;
}

}  // namespace arq
