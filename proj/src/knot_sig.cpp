#include "sigforge/knot_sig.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigforge {

namespace {

Rational rational_det(std::vector<std::vector<Rational>> m)
{
    const long n = static_cast<long>(m.size());
    Rational det(1);
    for (long col = 0; col < n; ++col) {
        long p = -1;
        for (long r = col; r < n; ++r)
            if (m[r][col] != 0) {
                p = r;
                break;
            }
        if (p < 0) return Rational(0);
        if (p != col) {
            std::swap(m[p], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (long r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (long c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}  // namespace

SeifertMatrix::SeifertMatrix(std::vector<std::vector<long>> rows)
    : dim_(static_cast<long>(rows.size()))
{
    if (dim_ % 2 != 0) throw std::invalid_argument("SeifertMatrix: dimension must be even");
    entries_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (static_cast<long>(row.size()) != dim_)
            throw std::invalid_argument("SeifertMatrix: not square");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    std::vector<std::vector<Rational>> skew(dim_, std::vector<Rational>(dim_));
    for (long i = 0; i < dim_; ++i)
        for (long j = 0; j < dim_; ++j) skew[i][j] = Rational(at(i, j) - at(j, i));
    if (dim_ > 0 && rational_det(skew) != 1)
        throw std::invalid_argument("SeifertMatrix: det(V - V^T) != 1");
}

std::vector<std::vector<long>> SeifertMatrix::rows() const
{
    std::vector<std::vector<long>> r(dim_, std::vector<long>(dim_));
    for (long i = 0; i < dim_; ++i)
        for (long j = 0; j < dim_; ++j) r[i][j] = at(i, j);
    return r;
}

SeifertMatrix SeifertMatrix::mirror() const
{
    std::vector<std::vector<long>> r(dim_, std::vector<long>(dim_));
    for (long i = 0; i < dim_; ++i)
        for (long j = 0; j < dim_; ++j) r[i][j] = -at(j, i);
    return SeifertMatrix(std::move(r));
}

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b)
{
    long n = a.dim() + b.dim();
    std::vector<std::vector<long>> r(n, std::vector<long>(n, 0));
    for (long i = 0; i < a.dim(); ++i)
        for (long j = 0; j < a.dim(); ++j) r[i][j] = a.at(i, j);
    for (long i = 0; i < b.dim(); ++i)
        for (long j = 0; j < b.dim(); ++j) r[a.dim() + i][a.dim() + j] = b.at(i, j);
    return SeifertMatrix(std::move(r));
}

SeifertMatrix builtin_knot(const std::string& name)
{
    if (name == "unknot") return SeifertMatrix();
    if (name == "trefoil_right") return SeifertMatrix({{-1, 1}, {0, -1}});
    if (name == "trefoil_left") return SeifertMatrix({{1, 0}, {-1, 1}});
    if (name == "figure8") return SeifertMatrix({{1, 1}, {0, -1}});
    throw std::invalid_argument("builtin_knot: unknown knot '" + name + "'");
}

std::vector<std::string> builtin_knot_names()
{
    return {"unknot", "trefoil_right", "trefoil_left", "figure8"};
}

poly::Poly alexander_polynomial(const SeifertMatrix& v)
{
    const long d = v.dim();
    if (d == 0) return {Rational(1)};
    // evaluate det(V - t V^T) at d+1 points and interpolate
    std::vector<Rational> points, values;
    for (long k = 0; k <= d; ++k) {
        Rational t(k);
        std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j) m[i][j] = Rational(v.at(i, j)) - t * Rational(v.at(j, i));
        points.push_back(t);
        values.push_back(rational_det(m));
    }
    poly::Poly result;
    for (long i = 0; i <= d; ++i) {
        poly::Poly basis{Rational(1)};
        Rational denom(1);
        for (long j = 0; j <= d; ++j) {
            if (i == j) continue;
            basis = poly::mul(basis, {-points[j], Rational(1)});
            denom *= points[i] - points[j];
        }
        result = poly::add(result, poly::scale(basis, values[i] / denom));
    }
    result.resize(d + 1, Rational(0));  // keep the palindromic padding
    return result;
}

UnitRoots alexander_unit_roots(const SeifertMatrix& v)
{
    UnitRoots roots;
    if (v.dim() == 0) return roots;
    poly::Poly delta = alexander_polynomial(v);
    // Delta(1) = det(V - V^T) = 1 and Delta(-1) is odd, so t = +-1 never occurs.
    poly::Poly q = poly::symmetric_descent(delta);
    if (poly::degree(q) <= 0) return roots;

    // candidate orders: psi_c has degree phi(c)/2 <= deg q, and
    // phi(c) >= sqrt(c/2) caps the search range
    const long phi_bound = v.dim();
    std::vector<long> candidates;
    for (long c = 3; c <= 2 * phi_bound * phi_bound + 1; ++c)
        if (euler_phi(c) <= phi_bound) candidates.push_back(c);

    std::vector<long> detected;
    for (long c : candidates) {
        if (poly::degree(q) <= 0) break;
        poly::Poly psi = poly::two_cos_minimal_polynomial(c);
        if (poly::degree(psi) > poly::degree(q)) continue;
        bool divided = false;
        while (auto quot = poly::divide_exact(q, psi)) {
            q = *quot;
            divided = true;
            if (poly::degree(q) < poly::degree(psi)) break;
        }
        if (divided) detected.push_back(c);
    }
    for (long c : detected)
        for (long k = 1; k < c; ++k)
            if (gcd_long(k, c) == 1) roots.turns.push_back({k, c});
    std::sort(roots.turns.begin(), roots.turns.end(),
              [](const UnitRoots::Turn& a, const UnitRoots::Turn& b) {
                  return Rational(a.k) / Rational(a.c) < Rational(b.k) / Rational(b.c);
              });

    // anything left with roots in (-2, 2) is a non-cyclotomic unit root
    if (poly::degree(q) > 0 && poly::count_roots_in(q, Rational(-2), Rational(2)) > 0) {
        poly::Poly sf = q;
        poly::Poly g = poly::gcd(sf, poly::derivative(sf));
        if (poly::degree(g) > 0) sf = *poly::divide_exact(sf, g);
        // isolate by bisection
        std::vector<std::pair<Rational, Rational>> stack{{Rational(-2), Rational(2)}};
        while (!stack.empty()) {
            auto [lo, hi] = stack.back();
            stack.pop_back();
            long cnt = poly::count_roots_in(sf, lo, hi);
            if (cnt == 0) continue;
            if (cnt == 1) {
                roots.non_cyclotomic.push_back({sf, lo, hi});
                continue;
            }
            Rational mid = (lo + hi) / 2;
            if (poly::eval(sf, mid) == 0) roots.non_cyclotomic.push_back({sf, mid, mid});
            stack.push_back({lo, mid});
            stack.push_back({mid, hi});
        }
    }
    return roots;
}

long lt_signature(const SeifertMatrix& v, const Cyclotomic& omega)
{
    if (omega == Cyclotomic(1)) throw std::domain_error("lt_signature: omega = 1 rejected");
    if ((omega * omega.conj()) != Cyclotomic(1))
        throw std::domain_error("lt_signature: omega must lie on the unit circle");
    const long d = v.dim();
    Cyclotomic a = Cyclotomic(1) - omega;
    Cyclotomic b = Cyclotomic(1) - omega.conj();
    CycloMatrix h(d);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j)
            h.at(i, j) = a * Rational(v.at(i, j)) + b * Rational(v.at(j, i));
    return signature(HermitianMatrix(std::move(h))).signature();
}

Cyclotomic arc_sample(const Rational& lo, const Rational& hi)
{
    if (!(lo < hi)) throw std::invalid_argument("arc_sample: empty arc");
    for (long c = 1;; ++c) {
        // smallest j with j/c > lo
        Rational scaled = lo * Rational(c);
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
        long j = fl.get_si() + 1;
        if (Rational(j) / Rational(c) < hi) return Cyclotomic::root_of_unity(c, j);
    }
}

Rational rho0(const SeifertMatrix& v)
{
    UnitRoots roots = alexander_unit_roots(v);
    if (!roots.non_cyclotomic.empty())
        throw std::domain_error(
            "rho0: non-cyclotomic Alexander root on the unit circle; exact averaging unsupported");
    std::vector<Rational> cuts{Rational(0)};
    for (const auto& t : roots.turns) cuts.push_back(Rational(t.k) / Rational(t.c));
    cuts.push_back(Rational(1));
    Rational total(0);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational &lo = cuts[i], &hi = cuts[i + 1];
        if (!(lo < hi)) continue;
        long sig = lt_signature(v, arc_sample(lo, hi));
        total += Rational(sig) * (hi - lo);
    }
    return total;
}

}  // namespace sigforge
