#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sigforge {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p" or "p/q" with optional sign; canonicalizes.
inline Rational parse_rational(const std::string& s)
{
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline int sign_of(const Rational& q) { return sgn(q); }

inline long lcm_long(long a, long b)
{
    mpz_class r;
    mpz_lcm_ui(r.get_mpz_t(), mpz_class(a).get_mpz_t(), static_cast<unsigned long>(b));
    return r.get_si();
}

inline long gcd_long(long a, long b)
{
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

}  // namespace sigforge
