#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigforge/rational.hpp"

namespace sigforge {

// An element of Q(zeta_m), zeta_m = exp(2*pi*i/m), stored as a rational
// polynomial in zeta_m reduced modulo the m-th cyclotomic polynomial.
// The coefficient vector always has length phi(m), so the representation
// of a given (element, conductor) pair is unique and equality, zero tests
// and sign determination are exact.
//
// Values are immutable after construction; every operation returns a new
// value, so concurrent use needs no coordination.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclotomic(const Rational& q) : conductor_(1), coeffs_(1, q) {}
    explicit Cyclotomic(long n) : conductor_(1), coeffs_(1, Rational(n)) {}

    // zeta_m^power, canonical; power reduced mod m.
    static Cyclotomic root_of_unity(long m, long power = 1);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Throws unless is_rational().
    Rational rational_value() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Rational& q) const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Complex conjugate: the automorphism zeta -> zeta^(m-1).
    Cyclotomic conj() const;

    // The automorphism zeta -> zeta^t; requires gcd(t, m) = 1.
    Cyclotomic galois(long t) const;

    // Restricted inverse: succeeds iff a * conj(a) is a nonzero rational
    // (covers rationals, roots of unity and rational multiples thereof).
    Cyclotomic inverse() const;

    // Integer powers; negative exponents go through inverse().
    Cyclotomic pow(long e) const;

    bool is_real() const { return *this == conj(); }

    // Exact sign of a real element under zeta_m -> exp(2*pi*i/m):
    // exact zero test first, then certified interval evaluation at doubling
    // precision. Throws std::domain_error on non-real input.
    int sign() const;

    // Re-express with conductor `to`, a multiple of conductor().
    Cyclotomic lifted_to(long to) const;

    // Re-express with conductor `d`, a divisor of conductor(); empty if the
    // element does not lie in Q(zeta_d).
    std::optional<Cyclotomic> reduced_to(long d) const;

    // "cyclo(m; c_0, c_1, ..., c_{phi(m)-1})"
    std::string to_string() const;
    static Cyclotomic parse(const std::string& s);

private:
    Cyclotomic(long conductor, std::vector<Rational> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs))
    {
    }

    long conductor_;
    std::vector<Rational> coeffs_;
};

inline Cyclotomic operator*(const Rational& q, const Cyclotomic& c) { return c * q; }

long euler_phi(long m);

// Coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<Integer> cyclotomic_polynomial(long m);

// Initial interval precision for Cyclotomic::sign (bits); reads
// SIGFORGE_PRECISION_BITS once, defaults to 64.
long sign_start_precision();

}  // namespace sigforge
