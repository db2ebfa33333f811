#include "sigforge/hermitian.hpp"

#include <stdexcept>

namespace sigforge {

CycloMatrix CycloMatrix::conj_transpose() const
{
    CycloMatrix r(dim_);
    for (long i = 0; i < dim_; ++i)
        for (long j = 0; j < dim_; ++j) r.at(i, j) = at(j, i).conj();
    return r;
}

HermitianMatrix::HermitianMatrix(CycloMatrix m) : m_(std::move(m))
{
    for (long i = 0; i < m_.dim(); ++i)
        for (long j = i; j < m_.dim(); ++j)
            if (m_.at(i, j) != m_.at(j, i).conj())
                throw std::invalid_argument("HermitianMatrix: entries[i][j] != conj(entries[j][i])");
}

Cyclotomic invert_nonzero(const Cyclotomic& a)
{
    if (a.is_zero()) throw std::domain_error("invert_nonzero: zero element");
    if (a.is_rational()) return Cyclotomic(Rational(1) / a.rational_value());
    long m = a.conductor();
    Cyclotomic prod(1);
    for (long t = 2; t < m; ++t)
        if (gcd_long(t, m) == 1) prod = prod * a.galois(t);
    Cyclotomic norm = a * prod;
    if (!norm.is_rational() || norm.is_zero())
        throw std::logic_error("invert_nonzero: conjugate product is not a nonzero rational");
    return prod * (Rational(1) / norm.rational_value());
}

namespace {

long common_conductor(const CycloMatrix& m)
{
    long L = 1;
    for (long i = 0; i < m.dim(); ++i)
        for (long j = 0; j < m.dim(); ++j) L = lcm_long(L, m.at(i, j).conductor());
    return L;
}

}  // namespace

SignatureCounts signature(const HermitianMatrix& h)
{
    SignatureCounts counts;
    const long n = h.dim();
    if (n == 0) return counts;

    long L = common_conductor(h.matrix());
    std::vector<std::vector<Cyclotomic>> w(n, std::vector<Cyclotomic>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) w[i][j] = h.at(i, j).lifted_to(L);

    std::vector<long> active;
    for (long i = 0; i < n; ++i) active.push_back(i);

    while (!active.empty()) {
        long pivot = -1;
        for (long i : active)
            if (!w[i][i].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            // all-zero diagonal: locate an off-diagonal entry and repair
            long ri = -1, rj = -1;
            for (size_t a = 0; a < active.size() && ri < 0; ++a)
                for (size_t b = a + 1; b < active.size(); ++b)
                    if (!w[active[a]][active[b]].is_zero()) {
                        ri = active[a];
                        rj = active[b];
                        break;
                    }
            if (ri < 0) {
                counts.n_zero += static_cast<long>(active.size());
                return counts;
            }
            Cyclotomic entry = w[ri][rj];
            Cyclotomic lambda(1);
            if ((entry + entry.conj()).is_zero()) {
                // purely imaginary entry; twisting by zeta makes the new
                // diagonal (zeta - zeta^{-1}) * entry, nonzero since L >= 3
                lambda = Cyclotomic::root_of_unity(L);
            }
            Cyclotomic lbar = lambda.conj();
            for (long k : active) w[ri][k] = w[ri][k] + lbar * w[rj][k];
            for (long k : active) w[k][ri] = w[k][ri] + lambda * w[k][rj];
            continue;
        }

        int s = w[pivot][pivot].sign();
        if (s > 0)
            ++counts.n_plus;
        else
            ++counts.n_minus;
        Cyclotomic inv_p = invert_nonzero(w[pivot][pivot]);

        std::vector<long> rest;
        for (long i : active)
            if (i != pivot) rest.push_back(i);
        std::vector<long> touched;
        for (long j : rest)
            if (!w[j][pivot].is_zero()) touched.push_back(j);
        for (long j : touched) {
            Cyclotomic factor = w[j][pivot] * inv_p;
            for (long k : touched) w[j][k] = w[j][k] - factor * w[pivot][k];
        }
        active = std::move(rest);
    }
    return counts;
}

Cyclotomic determinant(const CycloMatrix& m)
{
    const long n = m.dim();
    if (n == 0) return Cyclotomic(1);
    CycloMatrix w = m;
    Cyclotomic det(1);
    for (long col = 0; col < n; ++col) {
        long p = -1;
        for (long r = col; r < n; ++r)
            if (!w.at(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) return Cyclotomic(0);
        if (p != col) {
            for (long c = 0; c < n; ++c) std::swap(w.at(p, c), w.at(col, c));
            det = -det;
        }
        det = det * w.at(col, col);
        Cyclotomic inv_p = invert_nonzero(w.at(col, col));
        for (long r = col + 1; r < n; ++r) {
            if (w.at(r, col).is_zero()) continue;
            Cyclotomic factor = w.at(r, col) * inv_p;
            for (long c = col; c < n; ++c) w.at(r, c) = w.at(r, c) - factor * w.at(col, c);
        }
    }
    return det;
}

CycloMatrix block_sum(const CycloMatrix& a, const CycloMatrix& b)
{
    CycloMatrix r(a.dim() + b.dim());
    for (long i = 0; i < a.dim(); ++i)
        for (long j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j);
    for (long i = 0; i < b.dim(); ++i)
        for (long j = 0; j < b.dim(); ++j) r.at(a.dim() + i, a.dim() + j) = b.at(i, j);
    return r;
}

HermitianMatrix block_sum(const HermitianMatrix& a, const HermitianMatrix& b)
{
    return HermitianMatrix(block_sum(a.matrix(), b.matrix()));
}

}  // namespace sigforge
