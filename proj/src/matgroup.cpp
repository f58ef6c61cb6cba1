#include "arquiver/matgroup.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace arq {

Mat2 Mat2::identity() {
    return Mat2{Cyclo(1), Cyclo(0), Cyclo(0), Cyclo(1)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2{a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::sl2_inverse() const { return Mat2{d, -b, -c, a}; }

Cyclo Mat2::det() const { return a * d - b * c; }

Cyclo Mat2::trace() const { return a + d; }

bool Mat2::operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
}

std::string Mat2::key(long N) const {
    std::ostringstream os;
    os << a.embed(N).key() << "|" << b.embed(N).key() << "|" << c.embed(N).key()
       << "|" << d.embed(N).key();
    return os.str();
}

std::string family_name(Family f) {
    switch (f) {
        case Family::BinaryCyclic: return "binary-cyclic";
        case Family::BinaryDihedral: return "binary-dihedral";
        case Family::BinaryTetrahedral: return "binary-tetrahedral";
        case Family::BinaryOctahedral: return "binary-octahedral";
        case Family::BinaryIcosahedral: return "binary-icosahedral";
    }
    throw std::logic_error("unknown family");
}

Family family_from_string(const std::string& s) {
    auto norm = s;
    if (norm.rfind("binary-", 0) == 0) norm = norm.substr(7);
    if (norm == "cyclic") return Family::BinaryCyclic;
    if (norm == "dihedral") return Family::BinaryDihedral;
    if (norm == "tetrahedral") return Family::BinaryTetrahedral;
    if (norm == "octahedral") return Family::BinaryOctahedral;
    if (norm == "icosahedral") return Family::BinaryIcosahedral;
    throw std::invalid_argument("unknown family: " + s);
}

bool family_is_exceptional(Family f) {
    return f == Family::BinaryTetrahedral || f == Family::BinaryOctahedral ||
           f == Family::BinaryIcosahedral;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long GroupSchemeSpec::reduced_order() const {
    switch (family) {
        case Family::BinaryCyclic: return 2 * n;
        case Family::BinaryDihedral: return 4 * n;
        case Family::BinaryTetrahedral: return 24;
        case Family::BinaryOctahedral: return 48;
        case Family::BinaryIcosahedral: return 120;
    }
    throw std::logic_error("unknown family");
}

void GroupSchemeSpec::validate() const {
    if (p <= 2 || !is_prime(p))
        throw std::invalid_argument("p must be an odd prime");
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (family_is_exceptional(family)) {
        if (r != 1)
            throw std::invalid_argument("exceptional families require r = 1");
        if (reduced_order() % p == 0)
            throw std::invalid_argument(
                "p divides the group order: not linearly reductive");
    } else {
        if (n < 1) throw std::invalid_argument("n must be >= 1");
        if (gcd_ll(n, p) != 1)
            throw std::invalid_argument("n must be coprime to p");
    }
}

long element_order(const Mat2& g, long bound) {
    Mat2 id = Mat2::identity();
    Mat2 acc = g;
    for (long k = 1; k <= bound; ++k) {
        if (acc == id) return k;
        acc = acc * g;
    }
    throw std::domain_error("element_order: bound exceeded");
}

int FiniteMatrixGroup::index_of(const Mat2& m) const {
    auto it = index_.find(m.key(conductor_));
    if (it == index_.end()) throw std::invalid_argument("element not in group");
    return it->second;
}

long FiniteMatrixGroup::exponent() const {
    long e = 1;
    for (long o : element_orders_) e = lcm_ll(e, o);
    return e;
}

std::vector<long> FiniteMatrixGroup::class_mult_coeffs(int i, int j) const {
    std::vector<long> c(classes_.size(), 0);
    for (size_t k = 0; k < classes_.size(); ++k) {
        int gk = classes_[k][0];
        long count = 0;
        for (int a : classes_[i]) {
            int b = mul(inv_table_[a], gk);
            if (class_of_[b] == static_cast<int>(j)) ++count;
        }
        c[k] = count;
    }
    return c;
}

FiniteMatrixGroup FiniteMatrixGroup::generate(const std::vector<Mat2>& gens,
                                              long conductor, long bound) {
    FiniteMatrixGroup G;
    G.conductor_ = conductor;

    Mat2 id = Mat2::identity();
    G.elements_.push_back(id);
    G.index_[id.key(conductor)] = 0;
    std::deque<int> queue = {0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (const Mat2& g : gens) {
            Mat2 prod = G.elements_[cur] * g;
            std::string k = prod.key(conductor);
            if (G.index_.count(k)) continue;
            if (static_cast<long>(G.elements_.size()) >= bound)
                throw std::domain_error("group closure exceeds bound");
            G.index_[k] = static_cast<int>(G.elements_.size());
            G.elements_.push_back(prod);
            queue.push_back(static_cast<int>(G.elements_.size()) - 1);
        }
    }

    int n = static_cast<int>(G.elements_.size());
    for (const Mat2& m : G.elements_)
        if (!(m.det() == Cyclo(1)))
            throw std::logic_error("generated element with det != 1");

    G.mul_table_.assign(static_cast<size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto it = G.index_.find((G.elements_[i] * G.elements_[j]).key(conductor));
            if (it == G.index_.end())
                throw std::logic_error("group not closed under multiplication");
            G.mul_table_[static_cast<size_t>(i) * n + j] = it->second;
        }

    G.inv_table_.assign(n, -1);
    for (int i = 0; i < n; ++i)
        G.inv_table_[i] = G.index_.at(G.elements_[i].sl2_inverse().key(conductor));

    G.element_orders_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        long o = 1;
        int acc = i;
        while (acc != 0) {
            acc = G.mul(acc, i);
            ++o;
        }
        G.element_orders_[i] = o;
    }

    // Conjugacy classes, ordered by minimal element index (identity first).
    G.class_of_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (G.class_of_[i] != -1) continue;
        int cid = static_cast<int>(G.classes_.size());
        std::vector<int> cls;
        for (int h = 0; h < n; ++h) {
            int conj = G.mul(G.mul(h, i), G.inv_table_[h]);
            if (G.class_of_[conj] == -1) {
                G.class_of_[conj] = cid;
                cls.push_back(conj);
            }
        }
        std::sort(cls.begin(), cls.end());
        G.classes_.push_back(std::move(cls));
    }

    Mat2 minus_id{Cyclo(-1), Cyclo(0), Cyclo(0), Cyclo(-1)};
    auto it = G.index_.find(minus_id.key(conductor));
    G.minus_identity_index_ = it == G.index_.end() ? -1 : it->second;
    return G;
}

namespace {

// Quaternion a + bi + cj + dk as an SU(2) matrix over Q(zeta_4):
// [[a+bi, c+di], [-c+di, a-bi]].
Mat2 quat(const Cyclo& a, const Cyclo& b, const Cyclo& c, const Cyclo& d) {
    Cyclo i = Cyclo::zeta(4);
    return Mat2{a + b * i, c + d * i, -c + d * i, a - b * i};
}

}  // namespace

FiniteMatrixGroup build_group(const GroupSchemeSpec& spec) {
    spec.validate();
    long n = spec.n;
    switch (spec.family) {
        case Family::BinaryCyclic: {
            Mat2 A{Cyclo::zeta(2 * n), Cyclo(0), Cyclo(0), Cyclo::zeta(2 * n, -1)};
            return FiniteMatrixGroup::generate({A}, 2 * n);
        }
        case Family::BinaryDihedral: {
            Mat2 A{Cyclo::zeta(2 * n), Cyclo(0), Cyclo(0), Cyclo::zeta(2 * n, -1)};
            Mat2 B{Cyclo(0), Cyclo(1), Cyclo(-1), Cyclo(0)};
            return FiniteMatrixGroup::generate({A, B}, lcm_ll(2 * n, 4));
        }
        case Family::BinaryTetrahedral: {
            Rational h(1, 2);
            Mat2 qi = quat(Cyclo(0), Cyclo(1), Cyclo(0), Cyclo(0));
            Mat2 qj = quat(Cyclo(0), Cyclo(0), Cyclo(1), Cyclo(0));
            Mat2 w = quat(Cyclo(h), Cyclo(h), Cyclo(h), Cyclo(h));
            return FiniteMatrixGroup::generate({qi, qj, w}, 4);
        }
        case Family::BinaryOctahedral: {
            Rational h(1, 2);
            Mat2 qi = quat(Cyclo(0), Cyclo(1), Cyclo(0), Cyclo(0));
            Mat2 qj = quat(Cyclo(0), Cyclo(0), Cyclo(1), Cyclo(0));
            Mat2 w = quat(Cyclo(h), Cyclo(h), Cyclo(h), Cyclo(h));
            Mat2 s{Cyclo::zeta(8), Cyclo(0), Cyclo(0), Cyclo::zeta(8, -1)};
            return FiniteMatrixGroup::generate({qi, qj, w, s}, 8);
        }
        case Family::BinaryIcosahedral: {
            Rational h(1, 2);
            Mat2 qi = quat(Cyclo(0), Cyclo(1), Cyclo(0), Cyclo(0));
            Mat2 qj = quat(Cyclo(0), Cyclo(0), Cyclo(1), Cyclo(0));
            Mat2 w = quat(Cyclo(h), Cyclo(h), Cyclo(h), Cyclo(h));
            // Golden ratio in Q(zeta_5): phi = 1 + z + z^4, 1/phi = z + z^4.
            Cyclo z = Cyclo::zeta(5), z4 = Cyclo::zeta(5, 4);
            Cyclo phi = Cyclo(1) + z + z4;
            Cyclo phi_inv = z + z4;
            Mat2 q = quat(Cyclo(0), Cyclo(h), (phi_inv).scale(h), (phi).scale(h));
            return FiniteMatrixGroup::generate({qi, qj, w, q}, 20);
        }
    }
    throw std::logic_error("unknown family");
}

}  // namespace arq
