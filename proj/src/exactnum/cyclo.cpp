#include "cusp/exactnum/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace cusp::exactnum {

namespace {

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

void trim(IntPoly& p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

void trim(RatPoly& p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

// Exact division of a by monic b over Z.
IntPoly divide_exact(IntPoly a, const IntPoly& b)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) {
        return {};
    }
    IntPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        Integer c = a[i];
        if (c == 0) {
            continue;
        }
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            a[i - db + j] -= c * b[j];
        }
    }
    return q;
}

// Remainder of a modulo b over Q (b need not be monic).
RatPoly poly_mod(RatPoly a, const RatPoly& b)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) {
            a[shift + j] -= c * b[j];
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

RatPoly poly_divmod(RatPoly a, const RatPoly& b, RatPoly& rem)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    RatPoly q;
    if (a.size() >= b.size()) {
        q.assign(a.size() - db, Rational(0));
    }
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        const std::size_t shift = a.size() - 1 - db;
        q[shift] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            a[shift + j] -= c * b[j];
        }
        a.pop_back();
        trim(a);
    }
    rem = std::move(a);
    return q;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    RatPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b)
{
    if (a.size() < b.size()) {
        a.resize(b.size(), Rational(0));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
    }
    trim(a);
    return a;
}

long mod_pos(long k, long n)
{
    long r = k % n;
    return r < 0 ? r + n : r;
}

} // namespace

int euler_phi(int n)
{
    if (n <= 0) {
        throw std::invalid_argument("euler_phi: n must be positive");
    }
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) {
                m /= p;
            }
            result -= result / p;
        }
    }
    if (m > 1) {
        result -= result / m;
    }
    return result;
}

const std::vector<Integer>& cyclotomic_polynomial(int n)
{
    static std::map<int, IntPoly> cache;
    static std::recursive_mutex mu;
    if (n <= 0) {
        throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    }
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) {
        return it->second;
    }
    // x^n - 1 divided by Phi_d for every proper divisor d.
    IntPoly p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) {
            continue;
        }
        p = divide_exact(std::move(p), cyclotomic_polynomial(d));
    }
    return cache.emplace(n, std::move(p)).first->second;
}

CycloNumber::CycloNumber() : order_(1), num_(1, 0), den_(1) {}

CycloNumber::CycloNumber(const Rational& value, int order) : order_(order), den_(value.get_den())
{
    if (order <= 0) {
        throw std::invalid_argument("CycloNumber: order must be positive");
    }
    num_.assign(static_cast<std::size_t>(euler_phi(order)), 0);
    num_[0] = value.get_num();
}

CycloNumber::CycloNumber(long value) : CycloNumber(Rational(value)) {}

CycloNumber::CycloNumber(int order, std::vector<Integer> num, Integer den)
    : order_(order), num_(std::move(num)), den_(std::move(den))
{
    normalize();
}

void CycloNumber::reduce(std::vector<Integer>& poly, int n)
{
    const IntPoly& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (poly[i] == 0) {
            continue;
        }
        Integer c = poly[i];
        for (std::size_t j = 0; j < deg; ++j) {
            if (phi[j] != 0) {
                poly[i - deg + j] -= c * phi[j];
            }
        }
        poly[i] = 0;
    }
    poly.resize(deg, 0);
}

void CycloNumber::normalize()
{
    reduce(num_, order_);
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) {
            c = -c;
        }
    }
    Integer g = den_;
    for (const auto& c : num_) {
        if (g == 1) {
            break;
        }
        if (c != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        }
    }
    if (g != 1) {
        for (auto& c : num_) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        }
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
    bool all_zero = true;
    for (const auto& c : num_) {
        if (c != 0) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) {
        den_ = 1;
    }
}

CycloNumber CycloNumber::root_of_unity(int n, long k)
{
    if (n <= 0) {
        throw std::invalid_argument("root_of_unity: order must be positive");
    }
    std::vector<Integer> num(static_cast<std::size_t>(n), 0);
    num[static_cast<std::size_t>(mod_pos(k, n))] = 1;
    return CycloNumber(n, std::move(num), Integer(1));
}

CycloNumber CycloNumber::exp_2pi_i(const Rational& r)
{
    const Integer& d = r.get_den();
    if (!d.fits_sint_p()) {
        throw std::overflow_error("exp_2pi_i: denominator too large");
    }
    const int n = static_cast<int>(d.get_si());
    Integer k;
    mpz_fdiv_r(k.get_mpz_t(), r.get_num_mpz_t(), d.get_mpz_t());
    return root_of_unity(n, k.get_si());
}

CycloNumber CycloNumber::from_powers(int n, std::span<const Rational> coeffs)
{
    if (n <= 0) {
        throw std::invalid_argument("from_powers: order must be positive");
    }
    Integer den = 1;
    for (const auto& c : coeffs) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<Integer> num(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Integer scaled = coeffs[i].get_num() * (den / coeffs[i].get_den());
        num[i % static_cast<std::size_t>(n)] += scaled;
    }
    return CycloNumber(n, std::move(num), den);
}

CycloNumber cyclo(int n, long k)
{
    return CycloNumber::root_of_unity(n, k);
}

std::vector<Rational> CycloNumber::coeffs() const
{
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (const auto& c : num_) {
        Rational r(c, den_);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

CycloNumber CycloNumber::embed(int m) const
{
    if (m <= 0 || m % order_ != 0) {
        throw std::invalid_argument("embed: target order must be a multiple");
    }
    if (m == order_) {
        return *this;
    }
    const std::size_t step = static_cast<std::size_t>(m / order_);
    std::vector<Integer> num(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < num_.size(); ++i) {
        num[i * step] = num_[i];
    }
    return CycloNumber(m, std::move(num), den_);
}

bool CycloNumber::is_zero() const
{
    for (const auto& c : num_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

bool CycloNumber::is_rational() const
{
    for (std::size_t i = 1; i < num_.size(); ++i) {
        if (num_[i] != 0) {
            return false;
        }
    }
    return true;
}

Rational CycloNumber::to_rational() const
{
    if (!is_rational()) {
        throw std::domain_error("cyclotomic value is not rational: " + to_string());
    }
    Rational r(num_[0], den_);
    r.canonicalize();
    return r;
}

CycloNumber CycloNumber::operator-() const
{
    CycloNumber r = *this;
    for (auto& c : r.num_) {
        c = -c;
    }
    return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& other)
{
    if (other.order_ != order_ && !other.is_rational()) {
        const int m = std::lcm(order_, other.order_);
        if (m != order_) {
            *this = embed(m);
        }
        return *this += other.embed(m);
    }
    if (other.order_ != order_) {
        // rational other: only the constant term moves
        Rational q = other.to_rational();
        num_[0] = num_[0] * q.get_den() + q.get_num() * den_;
        for (std::size_t i = 1; i < num_.size(); ++i) {
            num_[i] *= q.get_den();
        }
        den_ *= q.get_den();
        normalize();
        return *this;
    }
    if (den_ == other.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) {
            num_[i] += other.num_[i];
        }
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) {
            num_[i] = num_[i] * other.den_ + other.num_[i] * den_;
        }
        den_ *= other.den_;
    }
    normalize();
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& other)
{
    return *this += -other;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& other)
{
    if (other.order_ != order_) {
        if (other.is_rational()) {
            Rational q = other.to_rational();
            for (auto& c : num_) {
                c *= q.get_num();
            }
            den_ *= q.get_den();
            normalize();
            return *this;
        }
        if (is_rational()) {
            Rational q = to_rational();
            *this = other;
            return *this *= CycloNumber(q, order_);
        }
        const int m = std::lcm(order_, other.order_);
        if (m != order_) {
            *this = embed(m);
        }
        return *this *= other.embed(m);
    }
    std::vector<Integer> prod(num_.size() * 2, 0);
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < other.num_.size(); ++j) {
            if (other.num_[j] != 0) {
                mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), other.num_[j].get_mpz_t());
            }
        }
    }
    num_ = std::move(prod);
    den_ *= other.den_;
    normalize();
    return *this;
}

bool operator==(const CycloNumber& a, const CycloNumber& b)
{
    if (a.order_ != b.order_) {
        const int m = std::lcm(a.order_, b.order_);
        return a.embed(m) == b.embed(m);
    }
    return a.den_ == b.den_ && a.num_ == b.num_;
}

CycloNumber CycloNumber::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    if (is_rational()) {
        return CycloNumber(1 / to_rational(), order_);
    }
    // extended Euclid: s * a == 1 mod Phi_n
    RatPoly a = coeffs();
    trim(a);
    const IntPoly& phi_int = cyclotomic_polynomial(order_);
    RatPoly phi(phi_int.begin(), phi_int.end());
    RatPoly r0 = phi;
    RatPoly r1 = a;
    RatPoly s0;
    RatPoly s1{Rational(1)};
    while (r1.size() > 1) {
        RatPoly rem;
        RatPoly q = poly_divmod(r0, r1, rem);
        RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) {
        throw std::logic_error("inverse: not coprime to cyclotomic polynomial");
    }
    const Rational c = r1[0];
    for (auto& x : s1) {
        x /= c;
    }
    s1 = poly_mod(std::move(s1), phi);
    return from_powers(order_, s1);
}

CycloNumber CycloNumber::pow(long k) const
{
    if (k < 0) {
        return inverse().pow(-k);
    }
    CycloNumber result(Rational(1), order_);
    CycloNumber base = *this;
    while (k > 0) {
        if (k & 1) {
            result *= base;
        }
        k >>= 1;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

CycloNumber CycloNumber::conj() const
{
    const int n = order_;
    std::vector<Integer> num(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < num_.size(); ++i) {
        num[static_cast<std::size_t>(mod_pos(-static_cast<long>(i), n))] += num_[i];
    }
    return CycloNumber(n, std::move(num), den_);
}

std::complex<double> CycloNumber::evaluate() const
{
    std::complex<double> z = 0;
    const double d = den_.get_d();
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) {
            continue;
        }
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / order_;
        z += (num_[i].get_d() / d) * std::polar(1.0, angle);
    }
    return z;
}

std::string CycloNumber::to_string() const
{
    if (is_rational()) {
        return to_rational().get_str();
    }
    std::string out;
    const auto cs = coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] == 0) {
            continue;
        }
        std::string term = cs[i].get_str();
        if (!out.empty()) {
            out += term[0] == '-' ? " - " : " + ";
            if (term[0] == '-') {
                term.erase(0, 1);
            }
        }
        if (i > 0) {
            term += "*z" + std::to_string(order_) + "^" + std::to_string(i);
        }
        out += term;
    }
    return out;
}

CycloNumber product_one_minus_powers(int kappa, std::span<const long> exponents)
{
    if (kappa <= 0) {
        throw std::invalid_argument("product_one_minus_powers: kappa must be positive");
    }
    if (exponents.size() + 1 != static_cast<std::size_t>(kappa)) {
        throw std::invalid_argument("product_one_minus_powers: need kappa-1 exponents");
    }
    // Work in Z[x]/(x^kappa - 1). Inverse factors use
    //   1/(1 - w) = -(1/n) sum_{j=1}^{n-1} j w^j   for w a primitive n-th root,
    // so no field inversion is needed.
    const std::size_t n = static_cast<std::size_t>(kappa);
    std::vector<Integer> acc(n, 0);
    acc[0] = 1;
    Integer den = 1;
    std::vector<Integer> scratch(n);
    for (std::size_t m = 1; m < n; ++m) {
        const long e = exponents[m - 1];
        for (long t = 0; t < e; ++t) {
            for (std::size_t i = 0; i < n; ++i) {
                scratch[i] = acc[i] - acc[(i + n - m) % n];
            }
            acc.swap(scratch);
        }
        if (e >= 0) {
            continue;
        }
        const std::size_t ord = n / std::gcd(n, m);
        for (long t = 0; t < -e; ++t) {
            for (auto& c : scratch) {
                c = 0;
            }
            for (std::size_t j = 1; j < ord; ++j) {
                const std::size_t shift = (j * m) % n;
                for (std::size_t i = 0; i < n; ++i) {
                    if (acc[i] != 0) {
                        mpz_submul_ui(scratch[(i + shift) % n].get_mpz_t(), acc[i].get_mpz_t(), j);
                    }
                }
            }
            acc.swap(scratch);
            den *= static_cast<unsigned long>(ord);
        }
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(n);
    for (auto& c : acc) {
        coeffs.emplace_back(c, den);
        coeffs.back().canonicalize();
    }
    return CycloNumber::from_powers(kappa, coeffs);
}

CycloNumber product_one_minus_eta(int kappa)
{
    std::vector<long> ones(static_cast<std::size_t>(kappa > 0 ? kappa - 1 : 0), 1);
    return product_one_minus_powers(kappa, ones);
}

} // namespace cusp::exactnum
