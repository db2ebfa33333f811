#include "sigforge/twist_family.hpp"

#include <stdexcept>

namespace sigforge {

TwistFamilySpec::TwistFamilySpec(long m_, long n_, long N_, Cyclotomic omega_)
    : m(m_), n(n_), N(N_), omega(std::move(omega_))
{
    if (m < 0) throw std::invalid_argument("TwistFamilySpec: m must be >= 0");
    if (n < 0) throw std::invalid_argument("TwistFamilySpec: n must be >= 0");
    if (N < 0) throw std::invalid_argument("TwistFamilySpec: N must be >= 0");
    if (omega == Cyclotomic(1)) throw std::domain_error("TwistFamilySpec: omega = 1 rejected");
}

Cyclotomic omega_k(long k)
{
    if (k < 1) throw std::invalid_argument("omega_k: k must be >= 1");
    long conductor = 1;
    for (long i = 0; i < k; ++i) conductor *= 4;
    return Cyclotomic::root_of_unity(conductor);
}

HermitianMatrix matrix_A(long N)
{
    if (N < 0) throw std::invalid_argument("matrix_A: N must be >= 0");
    CycloMatrix a(N);
    for (long i = 0; i < N; ++i) {
        a.at(i, i) = Cyclotomic(2);
        if (i + 1 < N) {
            a.at(i, i + 1) = Cyclotomic(-1);
            a.at(i + 1, i) = Cyclotomic(-1);
        }
    }
    return HermitianMatrix(a);
}

CycloMatrix matrix_B(long N)
{
    if (N < 0) throw std::invalid_argument("matrix_B: N must be >= 0");
    CycloMatrix b(N);
    for (long i = 0; i < N; ++i) {
        b.at(i, i) = Cyclotomic(-1);
        if (i + 1 < N) b.at(i + 1, i) = Cyclotomic(1);
    }
    return b;
}

Cyclotomic g_factor(long m, long n, const Cyclotomic& omega)
{
    Cyclotomic one(1);
    return (omega.pow(n - 1) - one) * (omega.pow(-(m + 1)) - one);
}

HermitianMatrix matrix_C(const TwistFamilySpec& spec)
{
    const long N = spec.N;
    Cyclotomic g = g_factor(spec.m, spec.n, spec.omega);
    Cyclotomic gbar = g.conj();
    CycloMatrix a = matrix_A(N).matrix();
    CycloMatrix b = matrix_B(N);
    CycloMatrix c(2 * N);
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j) {
            c.at(i, j) = a.at(i, j);
            c.at(N + i, N + j) = a.at(i, j);
            c.at(i, N + j) = gbar * b.at(j, i);  // conj(G) B^T
            c.at(N + i, j) = g * b.at(i, j);     // G B
        }
    return HermitianMatrix(c);
}

long rho_twist(const TwistFamilySpec& spec)
{
    return signature(matrix_C(spec)).signature() - 2 * (spec.N + 1);
}

long rho_dehn_power(long M, const Cyclotomic& omega)
{
    if (omega == Cyclotomic(1)) throw std::domain_error("rho_dehn_power: omega = 1 rejected");
    if (M == 0) return 0;
    if (M < 0) return -rho_dehn_power(-M, omega);
    return signature(matrix_A(M - 1)).signature() - M;
}

namespace {

long rho_power(long M, long m, long n, const Cyclotomic& omega)
{
    if (M == 0) return 0;
    return rho_twist(TwistFamilySpec(m, n, M - 1, omega));
}

}  // namespace

long cocycle_defect(long a, long b, long m, long n, const Cyclotomic& omega)
{
    if (a < 0 || b < 0) throw std::invalid_argument("cocycle_defect: powers must be >= 0");
    if (omega == Cyclotomic(1)) throw std::domain_error("cocycle_defect: omega = 1 rejected");
    if (a == 0 || b == 0) return 0;
    return rho_power(a, m, n, omega) + rho_power(b, m, n, omega) - rho_power(a + b, m, n, omega);
}

DefectScan defect_scan(long max_power, long m, long n, const Cyclotomic& omega, long bound_genus)
{
    if (max_power < 1) throw std::invalid_argument("defect_scan: max_power must be >= 1");
    if (omega == Cyclotomic(1)) throw std::domain_error("defect_scan: omega = 1 rejected");
    DefectScan scan;
    scan.bound = 2 * (2 * bound_genus);  // 2 * beta_1(Sigma_{g,1})
    scan.rho_table.resize(2 * max_power + 1);
    for (long M = 1; M <= 2 * max_power; ++M) scan.rho_table[M] = rho_power(M, m, n, omega);
    for (long a = 1; a <= max_power; ++a)
        for (long b = 1; b <= max_power; ++b) {
            long d = scan.rho_table[a] + scan.rho_table[b] - scan.rho_table[a + b];
            if (std::abs(d) > scan.max_abs_defect) {
                scan.max_abs_defect = std::abs(d);
                scan.arg_a = a;
                scan.arg_b = b;
            }
        }
    scan.rho_table.erase(scan.rho_table.begin());  // drop the unused M = 0 slot
    return scan;
}

IndependenceWitness independence_certificate(const std::vector<long>& ks,
                                             const std::vector<Rational>& coeffs,
                                             const Rational& bound)
{
    if (ks.empty() || ks.size() != coeffs.size())
        throw std::invalid_argument("independence_certificate: ks/coeffs must be nonempty and equal length");
    for (size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] < 1) throw std::invalid_argument("independence_certificate: ks must be positive");
        if (i + 1 < ks.size() && ks[i] >= ks[i + 1])
            throw std::invalid_argument("independence_certificate: ks must be strictly increasing");
        if (coeffs[i] == 0)
            throw std::invalid_argument("independence_certificate: zero coefficient rejected");
    }
    if (bound <= 0) throw std::invalid_argument("independence_certificate: bound must be positive");

    IndependenceWitness witness;
    witness.j = ks[0] - 1;
    long family_m = 1;
    for (long i = 0; i < witness.j; ++i) family_m *= 4;
    family_m -= 1;  // 4^j - 1
    const long family_n = family_m + 2;

    for (long N0 = 0;; ++N0) {
        Rational value(0);
        for (size_t i = 0; i < ks.size(); ++i) {
            long rho = rho_twist(TwistFamilySpec(family_m, family_n, 2 * N0, omega_k(ks[i])));
            value += coeffs[i] * Rational(rho);
        }
        if (abs(value) > bound) {
            witness.N0 = N0;
            witness.value = value;
            return witness;
        }
    }
}

}  // namespace sigforge
