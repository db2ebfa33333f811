#include "sigforge/cyclotomic.hpp"

#include <mpfr.h>

#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace sigforge {

long euler_phi(long m)
{
    if (m <= 0) throw std::invalid_argument("euler_phi: m must be positive");
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of monic-divisor integer polynomials, constant term first.
std::vector<Integer> poly_div_exact(const std::vector<Integer>& num,
                                    const std::vector<Integer>& den)
{
    std::vector<Integer> rem = num;
    std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
    for (long k = static_cast<long>(quot.size()) - 1; k >= 0; --k) {
        Integer c = rem[k + den.size() - 1];  // den is monic
        quot[k] = c;
        if (c != 0)
            for (size_t i = 0; i < den.size(); ++i) rem[k + i] -= c * den[i];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

struct ConductorData {
    long phi = 0;
    // powers[k] = coefficients of zeta^k in the basis 1, zeta, ..., zeta^(phi-1).
    std::vector<std::vector<Integer>> powers;
};

const ConductorData& conductor_data(long m)
{
    static std::mutex mu;
    static std::map<long, ConductorData> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    ConductorData data;
    data.phi = euler_phi(m);
    std::vector<Integer> phi_poly = cyclotomic_polynomial(m);
    const long d = data.phi;
    data.powers.resize(m);
    std::vector<Integer> cur(d, Integer(0));
    cur[0] = 1;
    for (long k = 0; k < m; ++k) {
        data.powers[k] = cur;
        // multiply by zeta: shift, then fold the spilled top term back using
        // zeta^d = -(phi_poly minus leading term)
        Integer top = cur[d - 1];
        for (long i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (long i = 0; i < d; ++i) cur[i] -= top * phi_poly[i];
    }
    return cache.emplace(m, std::move(data)).first->second;
}

// Collapse an exponent-indexed accumulator (length m) to canonical coefficients.
std::vector<Rational> reduce_accumulator(long m, const std::vector<Rational>& acc)
{
    const ConductorData& data = conductor_data(m);
    std::vector<Rational> out(data.phi, Rational(0));
    for (long k = 0; k < m; ++k) {
        if (acc[k] == 0) continue;
        const auto& row = data.powers[k];
        for (long i = 0; i < data.phi; ++i)
            if (row[i] != 0) out[i] += acc[k] * Rational(row[i]);
    }
    return out;
}

long mod_pos(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(long m)
{
    if (m <= 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    // x^m - 1 divided by all proper cyclotomic factors
    std::vector<Integer> poly(m + 1, Integer(0));
    poly[0] = -1;
    poly[m] = 1;
    for (long d = 1; d < m; ++d)
        if (m % d == 0) poly = poly_div_exact(poly, cyclotomic_polynomial(d));
    return poly;
}

Cyclotomic Cyclotomic::root_of_unity(long m, long power)
{
    if (m < 1) throw std::invalid_argument("root_of_unity: conductor must be >= 1");
    std::vector<Rational> acc(m, Rational(0));
    acc[mod_pos(power, m)] = 1;
    return Cyclotomic(m, reduce_accumulator(m, acc));
}

bool Cyclotomic::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const
{
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const
{
    if (!is_rational()) throw std::domain_error("rational_value: element is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::lifted_to(long to) const
{
    if (to == conductor_) return *this;
    if (to % conductor_ != 0)
        throw std::invalid_argument("lifted_to: target is not a multiple of the conductor");
    long step = to / conductor_;
    std::vector<Rational> acc(to, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) acc[(static_cast<long>(i) * step) % to] += coeffs_[i];
    return Cyclotomic(to, reduce_accumulator(to, acc));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const
{
    long m = lcm_long(conductor_, o.conductor_);
    Cyclotomic a = lifted_to(m), b = o.lifted_to(m);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Rational& q) const
{
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c *= q;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const
{
    long m = lcm_long(conductor_, o.conductor_);
    Cyclotomic a = lifted_to(m), b = o.lifted_to(m);
    std::vector<Rational> acc(m, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            acc[(i + j) % m] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Cyclotomic(m, reduce_accumulator(m, acc));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const
{
    long m = lcm_long(conductor_, o.conductor_);
    return lifted_to(m).coeffs_ == o.lifted_to(m).coeffs_;
}

Cyclotomic Cyclotomic::galois(long t) const
{
    if (gcd_long(t, conductor_) != 1)
        throw std::invalid_argument("galois: exponent not coprime to the conductor");
    std::vector<Rational> acc(conductor_, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) acc[mod_pos(static_cast<long>(i) * t, conductor_)] += coeffs_[i];
    return Cyclotomic(conductor_, reduce_accumulator(conductor_, acc));
}

Cyclotomic Cyclotomic::conj() const
{
    if (conductor_ == 1) return *this;
    return galois(conductor_ - 1);
}

Cyclotomic Cyclotomic::inverse() const
{
    Cyclotomic c = conj();
    Cyclotomic norm = (*this) * c;
    if (!norm.is_rational() || norm.is_zero())
        throw std::domain_error(
            "inverse: only rationals and rational multiples of roots of unity are invertible here");
    return c * (Rational(1) / norm.rational_value());
}

Cyclotomic Cyclotomic::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(Rational(1));
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::optional<Cyclotomic> Cyclotomic::reduced_to(long d) const
{
    if (conductor_ % d != 0)
        throw std::invalid_argument("reduced_to: target does not divide the conductor");
    if (d == conductor_) return *this;
    long phid = euler_phi(d);
    // Express the element in the lifted basis zeta_d^j, 0 <= j < phi(d),
    // by exact Gaussian elimination on the phi(m) x phi(d) system.
    long rows = euler_phi(conductor_);
    std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(phid + 1, Rational(0)));
    for (long j = 0; j < phid; ++j) {
        Cyclotomic bj = root_of_unity(d, j).lifted_to(conductor_);
        for (long i = 0; i < rows; ++i) aug[i][j] = bj.coeffs()[i];
    }
    for (long i = 0; i < rows; ++i) aug[i][phid] = coeffs_[i];

    long row = 0;
    std::vector<long> pivot_col(phid, -1);
    for (long col = 0; col < phid && row < rows; ++col) {
        long p = -1;
        for (long r = row; r < rows; ++r)
            if (aug[r][col] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(aug[p], aug[row]);
        Rational inv = Rational(1) / aug[row][col];
        for (long c = col; c <= phid; ++c) aug[row][c] *= inv;
        for (long r = 0; r < rows; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            Rational f = aug[r][col];
            for (long c = col; c <= phid; ++c) aug[r][c] -= f * aug[row][c];
        }
        pivot_col[col] = row;
        ++row;
    }
    // consistency: no row of the form (0 ... 0 | nonzero)
    for (long r = row; r < rows; ++r)
        if (aug[r][phid] != 0) return std::nullopt;
    std::vector<Rational> sol(phid, Rational(0));
    for (long col = 0; col < phid; ++col)
        if (pivot_col[col] >= 0) sol[col] = aug[pivot_col[col]][phid];
    return Cyclotomic(d, std::move(sol));
}

long sign_start_precision()
{
    static long bits = [] {
        const char* env = std::getenv("SIGFORGE_PRECISION_BITS");
        if (env != nullptr) {
            long v = std::atol(env);
            if (v >= 16) return v;
        }
        return 64L;
    }();
    return bits;
}

namespace {

// Rigorous enclosure of sum c_j * cos(2*pi*j/m) at the given precision.
void real_part_enclosure(long m, const std::vector<Rational>& coeffs, mpfr_prec_t prec,
                         mpfr_t lo_out, mpfr_t hi_out)
{
    mpfr_t pi_d, pi_u, th_d, th_u, width, cd, cu, t;
    mpfr_inits2(prec, pi_d, pi_u, th_d, th_u, width, cd, cu, t, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi_d, MPFR_RNDD);
    mpfr_const_pi(pi_u, MPFR_RNDU);
    mpfr_set_zero(lo_out, 0);
    mpfr_set_zero(hi_out, 0);
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        // theta in [th_d, th_u]
        mpfr_mul_si(th_d, pi_d, 2 * static_cast<long>(j), MPFR_RNDD);
        mpfr_div_si(th_d, th_d, m, MPFR_RNDD);
        mpfr_mul_si(th_u, pi_u, 2 * static_cast<long>(j), MPFR_RNDU);
        mpfr_div_si(th_u, th_u, m, MPFR_RNDU);
        mpfr_sub(width, th_u, th_d, MPFR_RNDU);
        // cos(theta) within [cos(th_d) - width, cos(th_d) + width] since |cos'| <= 1
        mpfr_cos(cd, th_d, MPFR_RNDD);
        mpfr_cos(cu, th_d, MPFR_RNDU);
        mpfr_sub(cd, cd, width, MPFR_RNDD);
        mpfr_add(cu, cu, width, MPFR_RNDU);
        if (sign_of(coeffs[j]) > 0) {
            mpfr_mul_q(t, cd, coeffs[j].get_mpq_t(), MPFR_RNDD);
            mpfr_add(lo_out, lo_out, t, MPFR_RNDD);
            mpfr_mul_q(t, cu, coeffs[j].get_mpq_t(), MPFR_RNDU);
            mpfr_add(hi_out, hi_out, t, MPFR_RNDU);
        } else {
            mpfr_mul_q(t, cu, coeffs[j].get_mpq_t(), MPFR_RNDD);
            mpfr_add(lo_out, lo_out, t, MPFR_RNDD);
            mpfr_mul_q(t, cd, coeffs[j].get_mpq_t(), MPFR_RNDU);
            mpfr_add(hi_out, hi_out, t, MPFR_RNDU);
        }
    }
    mpfr_clears(pi_d, pi_u, th_d, th_u, width, cd, cu, t, static_cast<mpfr_ptr>(nullptr));
}

}  // namespace

int Cyclotomic::sign() const
{
    if (!is_real()) throw std::domain_error("sign: element is not real");
    if (is_zero()) return 0;
    for (long prec = sign_start_precision();; prec *= 2) {
        mpfr_t lo, hi;
        mpfr_inits2(prec, lo, hi, static_cast<mpfr_ptr>(nullptr));
        real_part_enclosure(conductor_, coeffs_, prec, lo, hi);
        int result = 0;
        if (mpfr_sgn(lo) > 0)
            result = 1;
        else if (mpfr_sgn(hi) < 0)
            result = -1;
        mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
        if (result != 0) return result;
        if (prec > (1L << 24))
            throw std::runtime_error("sign: interval refinement failed to converge");
    }
}

std::string Cyclotomic::to_string() const
{
    std::ostringstream os;
    os << "cyclo(" << conductor_ << ";";
    for (size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : " ") << coeffs_[i].get_str();
    os << ")";
    return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& s)
{
    auto fail = [&]() -> void {
        throw std::invalid_argument("Cyclotomic::parse: malformed input '" + s + "'");
    };
    size_t open = s.find('(');
    size_t close = s.rfind(')');
    if (s.substr(0, open) != "cyclo" || open == std::string::npos || close == std::string::npos)
        fail();
    std::string body = s.substr(open + 1, close - open - 1);
    size_t semi = body.find(';');
    if (semi == std::string::npos) fail();
    long m = std::stol(body.substr(0, semi));
    if (m < 1) fail();
    std::vector<Rational> coeffs;
    std::stringstream items(body.substr(semi + 1));
    std::string item;
    while (std::getline(items, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) fail();
        coeffs.push_back(parse_rational(item.substr(a, b - a + 1)));
    }
    if (static_cast<long>(coeffs.size()) != euler_phi(m)) fail();
    return Cyclotomic(m, std::move(coeffs));
}

}  // namespace sigforge
