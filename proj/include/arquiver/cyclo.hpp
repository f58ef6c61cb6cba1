#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arquiver/rational.hpp"

namespace arq {

/// Element of the cyclotomic field Q(zeta_N), stored as the reduced
/// representative in the power basis of Q[x]/(Phi_N(x)) with x = zeta_N.
///
/// Mixed-conductor arithmetic embeds both operands into Q(zeta_lcm) first;
/// results are not de-embedded back to their minimal conductor.
class Cyclo {
public:
    /// Zero at conductor 1.
    Cyclo();
    /// Rational constant at conductor 1.
    Cyclo(const Rational& r);
    Cyclo(long long n);

    /// zeta_N^e.
    static Cyclo zeta(long N, long e = 1);

    /// Canonical reduction of a raw polynomial in zeta_N (coefficient of
    /// zeta_N^i at position i, any length) modulo Phi_N.
    static Cyclo from_poly(long N, std::vector<Rational> raw);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Exact rational value; throws std::domain_error("not rational") otherwise.
    Rational as_rational() const;

    /// Same field element represented at conductor M (requires N | M).
    Cyclo embed(long M) const;

    /// Galois action zeta_N -> zeta_N^k, gcd(k, N) = 1. k = -1 is complex
    /// conjugation.
    Cyclo conjugate(long k) const;

    /// Multiplicative inverse (extended Euclid against Phi_N).
    Cyclo inverse() const;

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    Cyclo scale(const Rational& r) const;

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    /// Total order at a common conductor (coefficientwise lexicographic).
    /// Used only to make serializations and table orderings deterministic.
    static int compare(const Cyclo& a, const Cyclo& b);

    /// Canonical string key, "N:[c0,c1,...]".
    std::string key() const;
    /// Human-readable form, e.g. "1/2 + z^3" with z = zeta_N.
    std::string str() const;

    /// Coefficients of the N-th cyclotomic polynomial Phi_N (monic, degree
    /// phi(N)), constant term first.
    static const std::vector<BigInt>& cyclotomic_polynomial(long N);
    static long phi_degree(long N);

private:
    Cyclo(long conductor, std::vector<Rational> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {}

    long conductor_;
    std::vector<Rational> coeffs_;
};

long gcd_ll(long a, long b);
long lcm_ll(long a, long b);

}  // namespace arq
