#pragma once

#include "cusp/exactnum/cyclo.hpp"

#include <complex>
#include <map>
#include <string>

namespace cusp::exactnum {

/// Exponent data of Pi^a * Lambda^b * Q^r, where Pi = 2 pi i and Lambda = log Q
/// are independent transcendental symbols.
struct Monomial {
    int pi_power = 0;
    int logq_power = 0;
    Rational q_exponent = 0;

    bool is_unit() const { return pi_power == 0 && logq_power == 0 && q_exponent == 0; }
    Monomial operator*(const Monomial& o) const;
    std::string to_string() const;
};

bool operator<(const Monomial& a, const Monomial& b);
bool operator==(const Monomial& a, const Monomial& b);

/// A single coefficient times a monomial.
struct SymbolicScalar {
    CycloNumber base;
    Monomial mono;

    /// Rejects q exponents whose denominator does not divide `q_den_bound`
    /// (pass 0 to skip the check).
    static SymbolicScalar make(CycloNumber base, int pi_power, int logq_power, Rational q_exponent,
                               long q_den_bound = 0);
};

/// Finitely supported linear combination of monomials over Q(zeta).
class SymbolicSum {
public:
    SymbolicSum() = default;
    SymbolicSum(const CycloNumber& c); // NOLINT
    SymbolicSum(const Rational& c);    // NOLINT
    SymbolicSum(long c);               // NOLINT
    SymbolicSum(const SymbolicScalar& s); // NOLINT

    static SymbolicSum pi();
    static SymbolicSum logq();
    static SymbolicSum q_power(const Rational& r);

    const std::map<Monomial, CycloNumber>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when only the unit monomial is present (or the sum is zero).
    bool is_pure() const;
    /// Coefficient of the unit monomial.
    CycloNumber pure_part() const;
    CycloNumber coefficient(const Monomial& m) const;
    bool has_pi() const;
    bool has_logq() const;

    void add_term(const Monomial& m, const CycloNumber& c);

    SymbolicSum& operator+=(const SymbolicSum& o);
    SymbolicSum& operator-=(const SymbolicSum& o);
    SymbolicSum& operator*=(const SymbolicSum& o);
    friend SymbolicSum operator+(SymbolicSum a, const SymbolicSum& b) { return a += b; }
    friend SymbolicSum operator-(SymbolicSum a, const SymbolicSum& b) { return a -= b; }
    friend SymbolicSum operator*(SymbolicSum a, const SymbolicSum& b) { return a *= b; }
    SymbolicSum operator-() const;
    friend bool operator==(const SymbolicSum& a, const SymbolicSum& b) { return a.terms_ == b.terms_; }

    /// The derivation Q d/dQ: Lambda -> 1, Q^r -> r Q^r.
    SymbolicSum q_dq() const;

    /// Numeric value with Pi = 2 pi i and the given log Q (Q = exp(logq)).
    std::complex<double> evaluate(double logq_value = 0.0) const;
    std::string to_string() const;

private:
    std::map<Monomial, CycloNumber> terms_;
};

} // namespace cusp::exactnum
