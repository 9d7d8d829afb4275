#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>

namespace cusp::exactnum {

using Rational = mpq_class;
using Integer = mpz_class;

/// Builds p/q in canonical form.
inline Rational make_rational(long p, long q = 1)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// Canonical "p/q" (or "p" for integers) representation.
inline std::string to_string(const Rational& r)
{
    return r.get_str();
}

/// Parses the output of to_string; throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& r)
{
    return r.get_den() == 1;
}

/// Floor of a rational as a signed integer (values here are small).
long floor_to_long(const Rational& r);

/// Fractional part in [0, 1).
Rational frac(const Rational& r);

inline long lcm_long(long a, long b)
{
    return std::lcm(a, b);
}

/// Harmonic number 1 + 1/2 + ... + 1/n (H_0 = 0).
Rational harmonic(int n);

/// Generalised binomial coefficient e(e-1)...(e-j+1)/j!.
Rational binomial(long e, long j);

Rational rational_pow(const Rational& base, long exponent);

} // namespace cusp::exactnum
