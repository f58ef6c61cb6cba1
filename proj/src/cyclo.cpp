#include "arquiver/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace arq {

long gcd_ll(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long t = a % b; a = b; b = t; }
    return a;
}

long lcm_ll(long a, long b) { return a / gcd_ll(a, b) * b; }

namespace {

// Divide polynomial a by monic polynomial b over Z, in place quotient return.
// Both constant-term-first. Remainder must be zero (used for Phi_N).
std::vector<BigInt> exact_div(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    long db = static_cast<long>(b.size()) - 1;
    long da = static_cast<long>(a.size()) - 1;
    std::vector<BigInt> q(da - db + 1, 0);
    for (long i = da; i >= db; --i) {
        BigInt c = a[i];
        if (c == 0) continue;
        q[i - db] = c;
        for (long j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (const auto& c : a)
        if (c != 0) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

}  // namespace

const std::vector<BigInt>& Cyclo::cyclotomic_polynomial(long N) {
    static std::map<long, std::vector<BigInt>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    // x^N - 1 divided by Phi_d for all proper divisors d of N.
    std::vector<BigInt> poly(N + 1, 0);
    poly[0] = -1;
    poly[N] = 1;
    for (long d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        // Recursive fill of cache; recompute via recursion without lock issues:
        // divisors are strictly smaller, already cached by the loop order of
        // outer calls or computed on demand below.
        auto sub = cache.find(d);
        if (sub == cache.end()) {
            // Compute Phi_d inline using the same method (d < N, recursion
            // depth is the divisor chain length).
            std::vector<BigInt> pd(d + 1, 0);
            pd[0] = -1;
            pd[d] = 1;
            for (long e = 1; e < d; ++e) {
                if (d % e != 0) continue;
                auto se = cache.find(e);
                if (se == cache.end()) throw std::logic_error("divisor order");
                pd = exact_div(std::move(pd), se->second);
            }
            sub = cache.emplace(d, std::move(pd)).first;
        }
        poly = exact_div(std::move(poly), sub->second);
    }
    return cache.emplace(N, std::move(poly)).first->second;
}

long Cyclo::phi_degree(long N) {
    return static_cast<long>(cyclotomic_polynomial(N).size()) - 1;
}

Cyclo::Cyclo() : conductor_(1), coeffs_(1, Rational(0)) {}

Cyclo::Cyclo(const Rational& r) : conductor_(1), coeffs_(1, r) {}

Cyclo::Cyclo(long long n) : conductor_(1), coeffs_(1, Rational(n)) {}

Cyclo Cyclo::zeta(long N, long e) {
    if (N < 1) throw std::invalid_argument("zeta: conductor must be positive");
    e %= N;
    if (e < 0) e += N;
    std::vector<Rational> raw(e + 1, Rational(0));
    raw[e] = Rational(1);
    return from_poly(N, std::move(raw));
}

Cyclo Cyclo::from_poly(long N, std::vector<Rational> raw) {
    if (N < 1) throw std::invalid_argument("from_poly: conductor must be positive");
    const auto& phi = cyclotomic_polynomial(N);
    long deg = static_cast<long>(phi.size()) - 1;

    // Fold exponents modulo N (zeta_N^N = 1), then reduce modulo Phi_N.
    std::vector<Rational> folded(std::min<long>(static_cast<long>(raw.size()), N),
                                 Rational(0));
    folded.resize(N, Rational(0));
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].is_zero()) continue;
        folded[i % N] += raw[i];
    }
    // Polynomial remainder modulo the monic Phi_N.
    for (long i = N - 1; i >= deg; --i) {
        if (folded[i].is_zero()) continue;
        Rational c = folded[i];
        folded[i] = Rational(0);
        for (long j = 0; j < deg; ++j)
            folded[i - deg + j] -= c * Rational(phi[j]);
    }
    folded.resize(deg);
    return Cyclo(N, std::move(folded));
}

bool Cyclo::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational Cyclo::as_rational() const {
    if (!is_rational()) throw std::domain_error("not rational");
    return coeffs_[0];
}

Cyclo Cyclo::embed(long M) const {
    if (M % conductor_ != 0)
        throw std::invalid_argument("embed: target conductor must be a multiple");
    if (M == conductor_) return *this;
    long step = M / conductor_;
    std::vector<Rational> raw(static_cast<size_t>(phi_degree(conductor_) - 1) * step + 1,
                              Rational(0));
    raw.resize(M, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) raw[i * step] += coeffs_[i];
    return from_poly(M, std::move(raw));
}

Cyclo Cyclo::conjugate(long k) const {
    long N = conductor_;
    long km = k % N;
    if (km < 0) km += N;
    if (gcd_ll(km == 0 ? N : km, N) != 1)
        throw std::invalid_argument("conjugate: exponent not coprime to conductor");
    std::vector<Rational> raw(N, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        raw[(i * km) % N] += coeffs_[i];
    }
    return from_poly(N, std::move(raw));
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    long M = lcm_ll(conductor_, o.conductor_);
    Cyclo a = embed(M), b = o.embed(M);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    long M = lcm_ll(conductor_, o.conductor_);
    Cyclo a = embed(M), b = o.embed(M);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
}

Cyclo Cyclo::operator-() const {
    Cyclo a = *this;
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    long M = lcm_ll(conductor_, o.conductor_);
    Cyclo a = embed(M), b = o.embed(M);
    std::vector<Rational> conv(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return from_poly(M, std::move(conv));
}

Cyclo Cyclo::scale(const Rational& r) const {
    Cyclo a = *this;
    for (auto& c : a.coeffs_) c *= r;
    return a;
}

bool Cyclo::operator==(const Cyclo& o) const { return (*this - o).is_zero(); }

int Cyclo::compare(const Cyclo& a, const Cyclo& b) {
    long M = lcm_ll(a.conductor_, b.conductor_);
    Cyclo ea = a.embed(M), eb = b.embed(M);
    for (size_t i = 0; i < ea.coeffs_.size(); ++i) {
        if (ea.coeffs_[i] < eb.coeffs_[i]) return -1;
        if (eb.coeffs_[i] < ea.coeffs_[i]) return 1;
    }
    return 0;
}

namespace {

// Polynomials over Q, constant term first, used for the inverse.
using QPoly = std::vector<Rational>;

long pdeg(const QPoly& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

QPoly pmul(const QPoly& a, const QPoly& b) {
    if (pdeg(a) < 0 || pdeg(b) < 0) return {Rational(0)};
    QPoly c(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

QPoly psub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

// Division with remainder, returns {quotient, remainder}.
std::pair<QPoly, QPoly> pdivmod(QPoly a, const QPoly& b) {
    long db = pdeg(b);
    if (db < 0) throw std::domain_error("pdivmod: division by zero polynomial");
    QPoly q(std::max<long>(pdeg(a) - db + 1, 1), Rational(0));
    while (pdeg(a) >= db) {
        long da = pdeg(a);
        Rational c = a[da] / b[db];
        q[da - db] = c;
        for (long j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
    }
    return {q, a};
}

}  // namespace

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_rational()) return Cyclo(Rational(1) / coeffs_[0]).embed(conductor_);

    // Extended Euclid: r0 = Phi_N, r1 = this; maintain s.t. t_i * this = r_i
    // (mod Phi_N). Terminates with constant r, inverse = t / r.
    const auto& phi_int = cyclotomic_polynomial(conductor_);
    QPoly r0(phi_int.size());
    for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
    QPoly r1 = coeffs_;
    QPoly t0 = {Rational(0)}, t1 = {Rational(1)};
    while (pdeg(r1) > 0) {
        auto [q, r] = pdivmod(r0, r1);
        QPoly tn = psub(t0, pmul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(tn);
        if (pdeg(r1) < 0) throw std::logic_error("inverse: gcd degenerated");
    }
    Rational c = r1[pdeg(r1)];
    for (auto& x : t1) x /= c;
    return from_poly(conductor_, std::move(t1));
}

std::string Cyclo::key() const {
    std::ostringstream os;
    os << conductor_ << ":[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i].str();
    }
    os << "]";
    return os.str();
}

std::string Cyclo::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        if (i == 0) {
            os << coeffs_[i].str();
        } else {
            if (coeffs_[i] != Rational(1)) os << coeffs_[i].str() << "*";
            os << "z" << conductor_ << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace arq
