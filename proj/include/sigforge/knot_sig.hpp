#pragma once

#include <string>
#include <vector>

#include "sigforge/hermitian.hpp"
#include "sigforge/polynomial.hpp"

namespace sigforge {

// Integer Seifert pairing of a knot: even dimension, det(V - V^T) = 1,
// both checked on construction.
class SeifertMatrix {
public:
    SeifertMatrix() : dim_(0) {}
    explicit SeifertMatrix(std::vector<std::vector<long>> rows);

    long dim() const { return dim_; }
    long at(long i, long j) const { return entries_[i * dim_ + j]; }
    std::vector<std::vector<long>> rows() const;

    // Seifert matrix of the mirror image: -V^T.
    SeifertMatrix mirror() const;

    bool operator==(const SeifertMatrix&) const = default;

private:
    long dim_;
    std::vector<long> entries_;
};

// Block sum; Levine-Tristram signatures and rho0 are additive over it.
SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);

// Shipped table: "unknot", "trefoil_right", "trefoil_left", "figure8".
SeifertMatrix builtin_knot(const std::string& name);
std::vector<std::string> builtin_knot_names();

// det(V - t V^T), constant term first, padded to length dim + 1 so that the
// palindromic symmetry t^dim Delta(1/t) = Delta(t) is visible on the vector.
poly::Poly alexander_polynomial(const SeifertMatrix& v);

// Where Delta vanishes on the unit circle. Roots at cyclotomic points are
// reported as exact turn fractions k/c (all Galois conjugates); anything else
// is reported with its square-free factor in u = t + 1/t and an isolating
// rational interval inside (-2, 2).
struct UnitRoots {
    struct Turn {
        long k;
        long c;  // angle 2*pi*k/c, 0 < k < c, gcd(k, c) = 1
        bool operator==(const Turn&) const = default;
    };
    struct NonCyclotomic {
        poly::Poly factor;  // square-free, irreducible over the detected cyclotomics
        Rational lo, hi;    // isolating interval for u = 2*cos(theta)
    };
    std::vector<Turn> turns;  // sorted by k/c
    std::vector<NonCyclotomic> non_cyclotomic;
};
UnitRoots alexander_unit_roots(const SeifertMatrix& v);

// Signature of (1-omega) V + (1-conj(omega)) V^T; omega must be a root of
// unity different from 1.
long lt_signature(const SeifertMatrix& v, const Cyclotomic& omega);

// Average of lt_signature over the circle (normalized measure), computed
// exactly by sampling once per arc between consecutive Alexander unit roots.
// Throws if a non-cyclotomic unit root makes the arc lengths irrational.
Rational rho0(const SeifertMatrix& v);

// Smallest-conductor root of unity strictly inside the arc (lo, hi), both
// ends given as turn fractions in [0, 1].
Cyclotomic arc_sample(const Rational& lo, const Rational& hi);

}  // namespace sigforge
