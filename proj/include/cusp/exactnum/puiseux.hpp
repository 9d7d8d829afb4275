#pragma once

#include "cusp/exactnum/symbolic.hpp"

#include <map>
#include <optional>
#include <string>

namespace cusp::exactnum {

/// Exponent q and power e of log(var) in a term c * var^q * log(var)^e.
struct PuiseuxKey {
    Rational exponent;
    int log_power = 0;
};

bool operator<(const PuiseuxKey& a, const PuiseuxKey& b);
bool operator==(const PuiseuxKey& a, const PuiseuxKey& b);

enum class SeriesVar { Lambda, X };

/// Finite sum of c * var^q * (log var)^e with q rational and e in {0, 1}.
///
/// Zero coefficients are never stored. A truncation order t (if present)
/// means every term with exponent > t has been discarded.
class PuiseuxSeries {
public:
    explicit PuiseuxSeries(SeriesVar var = SeriesVar::Lambda, std::optional<Rational> truncation = std::nullopt);

    static PuiseuxSeries monomial(const SymbolicSum& c, const Rational& exponent, int log_power = 0,
                                  SeriesVar var = SeriesVar::Lambda);

    SeriesVar var() const { return var_; }
    const std::optional<Rational>& truncation() const { return trunc_; }
    const std::map<PuiseuxKey, SymbolicSum>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    SymbolicSum coefficient(const Rational& exponent, int log_power = 0) const;

    void add_term(const Rational& exponent, int log_power, const SymbolicSum& c);

    PuiseuxSeries& operator+=(const PuiseuxSeries& o);
    PuiseuxSeries& operator-=(const PuiseuxSeries& o);
    friend PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries& b) { return a += b; }
    friend PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries& b) { return a -= b; }
    /// Product; truncates at the smaller truncation order. log^2 is rejected.
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
    PuiseuxSeries scaled(const SymbolicSum& c) const;
    /// Multiplies by var^q.
    PuiseuxSeries shifted(const Rational& q) const;
    friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);

    /// d/dvar, with d(log var)/dvar = 1/var.
    PuiseuxSeries derivative() const;
    /// Applies Q d/dQ to every coefficient.
    PuiseuxSeries q_dq() const;
    /// Continuation along a loop around 0: var^q -> e^{2 pi i q} var^q, log var -> log var + Pi.
    PuiseuxSeries monodromy() const;
    /// Principal branch at var = 1: var^q = 1 and log var = 0.
    SymbolicSum eval_at_one() const;

    std::string to_string() const;

private:
    void drop_truncated();

    SeriesVar var_;
    std::optional<Rational> trunc_;
    std::map<PuiseuxKey, SymbolicSum> terms_;
};

/// (1 - coeff * x)^exponent keeping powers up to and including x^order.
PuiseuxSeries binom_series(const CycloNumber& coeff, long exponent, const Rational& order);

} // namespace cusp::exactnum
