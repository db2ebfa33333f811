#include "sigforge/polynomial.hpp"

#include <stdexcept>

#include "sigforge/cyclotomic.hpp"

namespace sigforge {
namespace poly {

Poly trim(Poly p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

long degree(const Poly& p) { return static_cast<long>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}

Poly sub(const Poly& a, const Poly& b) { return add(a, scale(b, Rational(-1))); }

Poly mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return trim(std::move(r));
}

Poly scale(const Poly& a, const Rational& c)
{
    if (c == 0) return {};
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

Rational eval(const Poly& p, const Rational& x)
{
    Rational r(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

Poly derivative(const Poly& p)
{
    if (p.size() <= 1) return {};
    Poly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rational(static_cast<long>(i));
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.empty()) throw std::invalid_argument("poly::divmod: division by zero");
    Poly rem = a;
    if (degree(a) < degree(b)) return {{}, rem};
    Poly quot(a.size() - b.size() + 1, Rational(0));
    Rational lead_inv = Rational(1) / b.back();
    for (long k = degree(rem) - degree(b); k >= 0; --k) {
        Rational c = rem[k + b.size() - 1] * lead_inv;
        quot[k] = c;
        if (c != 0)
            for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= c * b[i];
    }
    return {trim(std::move(quot)), trim(std::move(rem))};
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.empty()) return std::nullopt;
    return q;
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = trim(a), y = trim(b);
    while (!y.empty()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.empty()) x = scale(x, Rational(1) / x.back());
    return x;
}

namespace {

int sign_at(const Poly& p, const Rational& x) { return sign_of(eval(p, x)); }

long sturm_variations(const std::vector<Poly>& chain, const Rational& x)
{
    long v = 0;
    int prev = 0;
    for (const Poly& p : chain) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

long count_roots_in(const Poly& p, const Rational& lo, const Rational& hi)
{
    Poly sf = trim(p);
    if (sf.empty()) throw std::invalid_argument("count_roots_in: zero polynomial");
    Poly g = gcd(sf, derivative(sf));
    if (degree(g) > 0) sf = *divide_exact(sf, g);
    if (degree(sf) == 0) return 0;

    std::vector<Poly> chain{sf, derivative(sf)};
    while (degree(chain.back()) > 0) {
        Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.empty()) break;
        chain.push_back(scale(r, Rational(-1)));
    }
    // Sturm counts roots in (lo, hi]; subtract an endpoint root at hi.
    long count = sturm_variations(chain, lo) - sturm_variations(chain, hi);
    if (eval(sf, hi) == 0) --count;
    return count;
}

Poly symmetric_descent(const Poly& p_in)
{
    // The input vector is taken at face value (it may carry zero padding at
    // both ends; trimming would hide the symmetry).
    const Poly& p = p_in;
    long d = static_cast<long>(p.size()) - 1;
    if (d < 0) throw std::invalid_argument("symmetric_descent: zero polynomial");
    if (d % 2 != 0) throw std::invalid_argument("symmetric_descent: odd degree");
    for (long i = 0; i <= d; ++i)
        if (p[i] != p[d - i]) throw std::invalid_argument("symmetric_descent: not palindromic");
    long h = d / 2;
    // p_k(u) with t^k + t^{-k} = p_k(t + 1/t): p_0 = 2, p_1 = u, p_k = u p_{k-1} - p_{k-2}
    std::vector<Poly> pk{{Rational(2)}, {Rational(0), Rational(1)}};
    for (long k = 2; k <= h; ++k)
        pk.push_back(sub(mul({Rational(0), Rational(1)}, pk[k - 1]), pk[k - 2]));
    Poly q{p[h]};
    for (long k = 1; k <= h; ++k) q = add(q, scale(pk[k], p[h + k]));
    return q;
}

Poly two_cos_minimal_polynomial(long c)
{
    if (c < 3) throw std::invalid_argument("two_cos_minimal_polynomial: c must be >= 3");
    std::vector<Integer> phi = cyclotomic_polynomial(c);
    Poly p(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) p[i] = Rational(phi[i]);
    return symmetric_descent(p);
}

}  // namespace poly
}  // namespace sigforge
