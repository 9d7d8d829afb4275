#include "cusp/exactnum/rational.hpp"

#include <stdexcept>

namespace cusp::exactnum {

Rational parse_rational(const std::string& text)
{
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    r.canonicalize();
    return r;
}

long floor_to_long(const Rational& r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q.get_si();
}

Rational frac(const Rational& r)
{
    return r - Rational(floor_to_long(r));
}

Rational harmonic(int n)
{
    Rational h = 0;
    for (int k = 1; k <= n; ++k) {
        h += Rational(1, k);
    }
    return h;
}

Rational binomial(long e, long j)
{
    Rational c = 1;
    for (long i = 0; i < j; ++i) {
        c *= Rational(e - i);
        c /= Rational(i + 1);
    }
    c.canonicalize();
    return c;
}

Rational rational_pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0) {
            throw std::domain_error("zero to a negative power");
        }
        return rational_pow(1 / base, -exponent);
    }
    Rational result = 1;
    Rational b = base;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= b;
        }
        b *= b;
        exponent >>= 1;
    }
    return result;
}

} // namespace cusp::exactnum
