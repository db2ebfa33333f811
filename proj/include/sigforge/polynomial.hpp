#pragma once

#include <optional>
#include <vector>

#include "sigforge/rational.hpp"

namespace sigforge {

// Dense univariate polynomials over Q, constant term first, used by the
// Alexander-root machinery. Zero is the empty vector.
namespace poly {

using Poly = std::vector<Rational>;

Poly trim(Poly p);
long degree(const Poly& p);  // -1 for zero
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);
Rational eval(const Poly& p, const Rational& x);
Poly derivative(const Poly& p);

// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Quotient when the division is exact, otherwise empty.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Monic gcd.
Poly gcd(const Poly& a, const Poly& b);

// Number of distinct real roots in the open interval (lo, hi) by Sturm's
// theorem; p need not be square-free (its square-free part is used).
long count_roots_in(const Poly& p, const Rational& lo, const Rational& hi);

// A palindromic polynomial of even degree 2h in t equals t^h * Q(t + 1/t);
// returns Q (degree h). Throws if p is not palindromic of even degree.
Poly symmetric_descent(const Poly& p);

// Minimal polynomial of 2*cos(2*pi/c) for c >= 3 (degree phi(c)/2).
Poly two_cos_minimal_polynomial(long c);

}  // namespace poly

}  // namespace sigforge
