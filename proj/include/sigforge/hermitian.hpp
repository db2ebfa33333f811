#pragma once

#include <string>
#include <vector>

#include "sigforge/cyclotomic.hpp"

namespace sigforge {

// Dense square matrix over the cyclotomic numbers. Used both as the raw
// carrier for determinant work and as the storage behind HermitianMatrix.
class CycloMatrix {
public:
    CycloMatrix() : dim_(0) {}
    explicit CycloMatrix(long dim) : dim_(dim), entries_(dim * dim) {}

    long dim() const { return dim_; }
    const Cyclotomic& at(long i, long j) const { return entries_[i * dim_ + j]; }
    Cyclotomic& at(long i, long j) { return entries_[i * dim_ + j]; }

    CycloMatrix conj_transpose() const;
    bool operator==(const CycloMatrix&) const = default;

private:
    long dim_;
    std::vector<Cyclotomic> entries_;
};

// Square matrix with entries[i][j] = conj(entries[j][i]); validated on
// construction, so every diagonal entry is real.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(CycloMatrix m);

    long dim() const { return m_.dim(); }
    const Cyclotomic& at(long i, long j) const { return m_.at(i, j); }
    const CycloMatrix& matrix() const { return m_; }

    bool operator==(const HermitianMatrix&) const = default;

private:
    CycloMatrix m_;
};

struct SignatureCounts {
    long n_plus = 0;
    long n_minus = 0;
    long n_zero = 0;
    long signature() const { return n_plus - n_minus; }
    bool operator==(const SignatureCounts&) const = default;
};

// Exact inertia by congruence diagonalization: real diagonal pivots with
// certified signs; an all-zero diagonal is repaired by adding a multiple of
// one row/column pair to another (a hyperbolic 2x2 block then contributes
// one +1 and one -1 through the two resulting pivots).
SignatureCounts signature(const HermitianMatrix& h);

// Exact determinant by elimination; Hermitianity not required.
Cyclotomic determinant(const CycloMatrix& m);

CycloMatrix block_sum(const CycloMatrix& a, const CycloMatrix& b);
HermitianMatrix block_sum(const HermitianMatrix& a, const HermitianMatrix& b);

// Inverse of an arbitrary nonzero element, via the product of its Galois
// conjugates over the rational norm. Internal to the elimination routines;
// not part of the cyclo surface.
Cyclotomic invert_nonzero(const Cyclotomic& a);

}  // namespace sigforge
