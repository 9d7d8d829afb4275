#include "cusp/exactnum/symbolic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace cusp::exactnum {

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r;
    r.pi_power = pi_power + o.pi_power;
    r.logq_power = logq_power + o.logq_power;
    r.q_exponent = q_exponent + o.q_exponent;
    return r;
}

std::string Monomial::to_string() const
{
    std::string out;
    auto append = [&out](const std::string& s) {
        if (!out.empty()) {
            out += "*";
        }
        out += s;
    };
    if (pi_power == 1) {
        append("Pi");
    } else if (pi_power != 0) {
        append("Pi^" + std::to_string(pi_power));
    }
    if (logq_power == 1) {
        append("logQ");
    } else if (logq_power != 0) {
        append("logQ^" + std::to_string(logq_power));
    }
    if (q_exponent != 0) {
        append("Q^(" + q_exponent.get_str() + ")");
    }
    return out;
}

bool operator<(const Monomial& a, const Monomial& b)
{
    if (a.pi_power != b.pi_power) {
        return a.pi_power < b.pi_power;
    }
    if (a.logq_power != b.logq_power) {
        return a.logq_power < b.logq_power;
    }
    return a.q_exponent < b.q_exponent;
}

bool operator==(const Monomial& a, const Monomial& b)
{
    return a.pi_power == b.pi_power && a.logq_power == b.logq_power && a.q_exponent == b.q_exponent;
}

SymbolicScalar SymbolicScalar::make(CycloNumber base, int pi_power, int logq_power, Rational q_exponent,
                                    long q_den_bound)
{
    if (q_den_bound > 0) {
        Integer rem;
        mpz_mod(rem.get_mpz_t(), Integer(q_den_bound).get_mpz_t(), q_exponent.get_den_mpz_t());
        if (rem != 0) {
            throw std::invalid_argument("q exponent " + q_exponent.get_str() + " has denominator not dividing "
                                        + std::to_string(q_den_bound));
        }
    }
    SymbolicScalar s;
    s.base = std::move(base);
    s.mono.pi_power = pi_power;
    s.mono.logq_power = logq_power;
    s.mono.q_exponent = std::move(q_exponent);
    return s;
}

SymbolicSum::SymbolicSum(const CycloNumber& c)
{
    add_term(Monomial{}, c);
}

SymbolicSum::SymbolicSum(const Rational& c) : SymbolicSum(CycloNumber(c)) {}

SymbolicSum::SymbolicSum(long c) : SymbolicSum(CycloNumber(c)) {}

SymbolicSum::SymbolicSum(const SymbolicScalar& s)
{
    add_term(s.mono, s.base);
}

SymbolicSum SymbolicSum::pi()
{
    SymbolicSum s;
    s.add_term(Monomial{1, 0, 0}, CycloNumber(1L));
    return s;
}

SymbolicSum SymbolicSum::logq()
{
    SymbolicSum s;
    s.add_term(Monomial{0, 1, 0}, CycloNumber(1L));
    return s;
}

SymbolicSum SymbolicSum::q_power(const Rational& r)
{
    SymbolicSum s;
    s.add_term(Monomial{0, 0, r}, CycloNumber(1L));
    return s;
}

bool SymbolicSum::is_pure() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

CycloNumber SymbolicSum::pure_part() const
{
    return coefficient(Monomial{});
}

CycloNumber SymbolicSum::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? CycloNumber() : it->second;
}

bool SymbolicSum::has_pi() const
{
    for (const auto& [m, c] : terms_) {
        if (m.pi_power != 0) {
            return true;
        }
    }
    return false;
}

bool SymbolicSum::has_logq() const
{
    for (const auto& [m, c] : terms_) {
        if (m.logq_power != 0) {
            return true;
        }
    }
    return false;
}

void SymbolicSum::add_term(const Monomial& m, const CycloNumber& c)
{
    if (c.is_zero()) {
        return;
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

SymbolicSum& SymbolicSum::operator+=(const SymbolicSum& o)
{
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

SymbolicSum& SymbolicSum::operator-=(const SymbolicSum& o)
{
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

SymbolicSum& SymbolicSum::operator*=(const SymbolicSum& o)
{
    SymbolicSum r;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            r.add_term(m1 * m2, c1 * c2);
        }
    }
    terms_ = std::move(r.terms_);
    return *this;
}

SymbolicSum SymbolicSum::operator-() const
{
    SymbolicSum r;
    for (const auto& [m, c] : terms_) {
        r.terms_.emplace(m, -c);
    }
    return r;
}

SymbolicSum SymbolicSum::q_dq() const
{
    SymbolicSum r;
    for (const auto& [m, c] : terms_) {
        if (m.logq_power != 0) {
            Monomial lowered = m;
            lowered.logq_power -= 1;
            r.add_term(lowered, c * CycloNumber(Rational(m.logq_power)));
        }
        if (m.q_exponent != 0) {
            r.add_term(m, c * CycloNumber(m.q_exponent));
        }
    }
    return r;
}

std::complex<double> SymbolicSum::evaluate(double logq_value) const
{
    const std::complex<double> pi_val(0.0, 2.0 * std::numbers::pi);
    std::complex<double> total = 0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> v = c.evaluate();
        v *= std::pow(pi_val, m.pi_power);
        if (m.logq_power != 0) {
            v *= std::pow(logq_value, m.logq_power);
        }
        if (m.q_exponent != 0) {
            v *= std::exp(m.q_exponent.get_d() * logq_value);
        }
        total += v;
    }
    return total;
}

std::string SymbolicSum::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        std::string cs = c.to_string();
        const bool compound = !c.is_rational();
        if (m.is_unit()) {
            out += cs;
        } else {
            out += (compound ? "(" + cs + ")" : cs) + "*" + m.to_string();
        }
    }
    return out;
}

} // namespace cusp::exactnum
