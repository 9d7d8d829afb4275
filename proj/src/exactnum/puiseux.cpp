#include "cusp/exactnum/puiseux.hpp"

#include <stdexcept>

namespace cusp::exactnum {

bool operator<(const PuiseuxKey& a, const PuiseuxKey& b)
{
    if (a.exponent != b.exponent) {
        return a.exponent < b.exponent;
    }
    return a.log_power < b.log_power;
}

bool operator==(const PuiseuxKey& a, const PuiseuxKey& b)
{
    return a.exponent == b.exponent && a.log_power == b.log_power;
}

PuiseuxSeries::PuiseuxSeries(SeriesVar var, std::optional<Rational> truncation)
    : var_(var), trunc_(std::move(truncation))
{
}

PuiseuxSeries PuiseuxSeries::monomial(const SymbolicSum& c, const Rational& exponent, int log_power, SeriesVar var)
{
    PuiseuxSeries s(var);
    s.add_term(exponent, log_power, c);
    return s;
}

SymbolicSum PuiseuxSeries::coefficient(const Rational& exponent, int log_power) const
{
    auto it = terms_.find(PuiseuxKey{exponent, log_power});
    return it == terms_.end() ? SymbolicSum() : it->second;
}

void PuiseuxSeries::add_term(const Rational& exponent, int log_power, const SymbolicSum& c)
{
    if (log_power < 0 || log_power > 1) {
        throw std::domain_error("log power outside {0,1}");
    }
    if (c.is_zero() || (trunc_ && exponent > *trunc_)) {
        return;
    }
    PuiseuxKey key{exponent, log_power};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

void PuiseuxSeries::drop_truncated()
{
    if (!trunc_) {
        return;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = it->first.exponent > *trunc_ ? terms_.erase(it) : std::next(it);
    }
}

PuiseuxSeries& PuiseuxSeries::operator+=(const PuiseuxSeries& o)
{
    if (o.var_ != var_) {
        throw std::invalid_argument("series in different variables");
    }
    if (o.trunc_ && (!trunc_ || *o.trunc_ < *trunc_)) {
        trunc_ = o.trunc_;
        drop_truncated();
    }
    for (const auto& [k, c] : o.terms_) {
        add_term(k.exponent, k.log_power, c);
    }
    return *this;
}

PuiseuxSeries& PuiseuxSeries::operator-=(const PuiseuxSeries& o)
{
    return *this += o.scaled(SymbolicSum(-1L));
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b)
{
    if (a.var_ != b.var_) {
        throw std::invalid_argument("series in different variables");
    }
    std::optional<Rational> t = a.trunc_;
    if (b.trunc_ && (!t || *b.trunc_ < *t)) {
        t = b.trunc_;
    }
    PuiseuxSeries r(a.var_, t);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            const Rational e = ka.exponent + kb.exponent;
            if (t && e > *t) {
                continue;
            }
            if (ka.log_power + kb.log_power > 1) {
                throw std::domain_error("log^2 term formed in series product");
            }
            r.add_term(e, ka.log_power + kb.log_power, ca * cb);
        }
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::scaled(const SymbolicSum& c) const
{
    PuiseuxSeries r(var_, trunc_);
    for (const auto& [k, v] : terms_) {
        r.add_term(k.exponent, k.log_power, v * c);
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::shifted(const Rational& q) const
{
    std::optional<Rational> t;
    if (trunc_) {
        t = *trunc_ + q;
    }
    PuiseuxSeries r(var_, t);
    for (const auto& [k, v] : terms_) {
        r.add_term(k.exponent + q, k.log_power, v);
    }
    return r;
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b)
{
    return a.var_ == b.var_ && a.terms_ == b.terms_;
}

PuiseuxSeries PuiseuxSeries::derivative() const
{
    std::optional<Rational> t;
    if (trunc_) {
        t = *trunc_ - 1;
    }
    PuiseuxSeries r(var_, t);
    for (const auto& [k, v] : terms_) {
        const Rational e1 = k.exponent - 1;
        if (k.exponent != 0) {
            r.add_term(e1, k.log_power, v * SymbolicSum(k.exponent));
        }
        if (k.log_power == 1) {
            r.add_term(e1, 0, v);
        }
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::q_dq() const
{
    PuiseuxSeries r(var_, trunc_);
    for (const auto& [k, v] : terms_) {
        r.add_term(k.exponent, k.log_power, v.q_dq());
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::monodromy() const
{
    PuiseuxSeries r(var_, trunc_);
    for (const auto& [k, v] : terms_) {
        SymbolicSum phase(CycloNumber::exp_2pi_i(k.exponent));
        SymbolicSum c = v * phase;
        r.add_term(k.exponent, k.log_power, c);
        if (k.log_power == 1) {
            r.add_term(k.exponent, 0, c * SymbolicSum::pi());
        }
    }
    return r;
}

SymbolicSum PuiseuxSeries::eval_at_one() const
{
    if (trunc_) {
        throw std::domain_error("cannot evaluate a truncated series at 1");
    }
    SymbolicSum s;
    for (const auto& [k, v] : terms_) {
        if (k.log_power == 0) {
            s += v;
        }
    }
    return s;
}

std::string PuiseuxSeries::to_string() const
{
    const std::string name = var_ == SeriesVar::Lambda ? "lambda" : "x";
    if (terms_.empty()) {
        return trunc_ ? "O(" + name + "^>" + trunc_->get_str() + ")" : "0";
    }
    std::string out;
    for (const auto& [k, v] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + v.to_string() + ")";
        if (k.exponent != 0) {
            out += "*" + name + "^(" + k.exponent.get_str() + ")";
        }
        if (k.log_power == 1) {
            out += "*log(" + name + ")";
        }
    }
    if (trunc_) {
        out += " + O(" + name + "^>" + trunc_->get_str() + ")";
    }
    return out;
}

PuiseuxSeries binom_series(const CycloNumber& coeff, long exponent, const Rational& order)
{
    if (order < 0) {
        throw std::invalid_argument("binom_series: negative order");
    }
    PuiseuxSeries r(SeriesVar::X, order);
    CycloNumber power(1L);
    const long top = floor_to_long(order);
    for (long j = 0; j <= top; ++j) {
        if (exponent >= 0 && j > exponent) {
            break;
        }
        Rational c = binomial(exponent, j);
        if (j % 2 == 1) {
            c = -c;
        }
        r.add_term(Rational(j), 0, SymbolicSum(power * CycloNumber(c)));
        power *= coeff;
    }
    return r;
}

} // namespace cusp::exactnum
