#pragma once

#include <vector>

#include "sigforge/hermitian.hpp"

namespace sigforge {

// Parameters naming the mapping class f_{(m,n,N)} = (D_alpha D_beta(m,n))^{N+1}
// together with the rank-one representation sending every surface generator
// to omega. The m = 0 member (r = 1 in the r-parametrized subfamily) is
// admitted: it is what the k = 1 column of the rho_k table evaluates.
struct TwistFamilySpec {
    long m = 1;
    long n = 0;
    long N = 0;
    Cyclotomic omega;

    TwistFamilySpec(long m_, long n_, long N_, Cyclotomic omega_);
};

// omega_k = zeta_{4^k}, the root the family of invariants rho_k is built on.
Cyclotomic omega_k(long k);

// N x N tridiagonal matrix with 2 on the diagonal and -1 on the super- and
// sub-diagonals; positive definite of signature N.
HermitianMatrix matrix_A(long N);

// N x N bidiagonal matrix with -1 on the diagonal and 1 on the sub-diagonal.
CycloMatrix matrix_B(long N);

// G_{(m,n)}(omega) = (omega^{n-1} - 1)(omega^{-(m+1)} - 1).
Cyclotomic g_factor(long m, long n, const Cyclotomic& omega);

// The 2N x 2N block matrix [[A, conj(G) B^T], [G B, A]].
HermitianMatrix matrix_C(const TwistFamilySpec& spec);

// rho_omega(f_{(m,n,N)}) = signature(C_{(m,n,N)}(omega)) - 2(N+1).
long rho_twist(const TwistFamilySpec& spec);

// rho_omega(D^M) for a Dehn twist about a bounding curve: the M-fold twist
// bounds a 4-manifold whose twisted intersection form is A_{M-1} and whose
// untwisted signature is M, so rho = signature(A_{M-1}) - M = -1 for M >= 1.
// rho(id) = 0, and negative powers flip the sign (orientation reversal).
long rho_dehn_power(long M, const Cyclotomic& omega);

// sigma(h^a, h^b) = rho(h^a) + rho(h^b) - rho(h^{a+b}) on the cyclic family
// h = D_alpha D_beta(m,n), with rho(h^M) = rho_twist at N = M - 1.
long cocycle_defect(long a, long b, long m, long n, const Cyclotomic& omega);

struct DefectScan {
    long max_abs_defect = 0;
    long bound = 0;  // 2 * beta_1 for the rank-one representation
    long arg_a = 0, arg_b = 0;
    std::vector<long> rho_table;  // rho(h^M) for M = 1..max_power
};

// Scans |cocycle_defect(a, b)| over 1 <= a, b <= max_power, reusing one
// rho(h^M) table; bound_genus sets the beta_1 = 2g comparison value.
DefectScan defect_scan(long max_power, long m, long n, const Cyclotomic& omega,
                       long bound_genus = 2);

struct IndependenceWitness {
    long j = 0;
    long N0 = 0;
    Rational value;  // the achieved combination value at (j, N0)
};

// Finds the smallest N0 such that |sum_i coeffs[i] * rho_{ks[i]}| evaluated on
// f_{(4^j-1, 4^j+1, 2*N0)}, j = ks[0] - 1, exceeds `bound`; every rho value is
// recomputed through the matrix pipeline.
IndependenceWitness independence_certificate(const std::vector<long>& ks,
                                             const std::vector<Rational>& coeffs,
                                             const Rational& bound);

}  // namespace sigforge
