#include "cusp/periods.hpp"

#include "cusp/kgamma.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace cusp {

using exactnum::make_rational;
using exactnum::Monomial;
using exactnum::SeriesVar;

namespace {

PuiseuxSeries term(const SymbolicSum& c, const Rational& q, int log_power = 0)
{
    return PuiseuxSeries::monomial(c, q, log_power, SeriesVar::Lambda);
}

Rational factorial(int n)
{
    Rational f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

PeriodVector zero_period(const Orbifold& orb, int level, std::string name)
{
    PeriodVector p;
    p.level = level;
    p.cycle = std::move(name);
    p.components.assign(orb.size(), PuiseuxSeries(SeriesVar::Lambda));
    return p;
}

PeriodVector difference(PeriodVector a, const PeriodVector& b)
{
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        a.components[i] -= b.components[i];
    }
    return a;
}

} // namespace

bool PeriodVector::is_zero() const
{
    for (const auto& c : components) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

CohVector PeriodVector::at_one() const
{
    CohVector v(components.size());
    for (std::size_t i = 0; i < components.size(); ++i) {
        v[i] = components[i].eval_at_one();
    }
    return v;
}

std::string PeriodVector::to_string(const Orbifold& orb) const
{
    std::string out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += "[" + components[i].to_string() + "] phi_" + orb.labels()[i].name();
    }
    return out.empty() ? "0" : out;
}

PeriodVector calibrated_period(const RootVector& cycle, int level, const RootSystem& rs, int bound)
{
    if (level > bound || level < -bound) {
        throw std::out_of_range("period level " + std::to_string(level) + " outside [-" + std::to_string(bound)
                                + ", " + std::to_string(bound) + "]");
    }
    const Orbifold& orb = rs.orbifold();
    PeriodVector p = zero_period(orb, level, cycle.to_string());
    const Rational chi = orb.chi();
    const Rational wb = RootSystem::omega_b_pair(cycle.coords);
    const CohVector img = rs.image0(cycle);

    if (level >= 1) {
        const int l = level;
        const Rational sign = l % 2 == 0 ? 1 : -1;
        p.components[1] = term(SymbolicSum(sign * factorial(l) * wb * chi), Rational(-l - 1));
        for (std::size_t i : orb.twisted()) {
            const Rational& d = orb.degree(i);
            Rational falling = 1;
            for (int j = 1; j <= l; ++j) {
                falling *= d - j;
            }
            p.components[i] = term(SymbolicSum(falling) * img[i], d - l - 1);
        }
        return p;
    }
    if (level == 0) {
        p.components[0] = term(SymbolicSum(wb), Rational(0));
        p.components[1] = term(SymbolicSum(wb * chi), Rational(-1));
        for (std::size_t i : orb.twisted()) {
            p.components[i] = term(img[i], orb.degree(i) - 1);
        }
        return p;
    }

    const int l = -level - 1;
    const Rational inv_fact = 1 / factorial(l);
    p.components[0] = term(SymbolicSum(wb / factorial(l + 1)), Rational(l + 1));
    // wb (chi lambda^l/l! log lambda - lambda^l/l! (Lambda + chi H_l)) + Pi (n + (rho|alpha)) lambda^l/l!
    PuiseuxSeries pc = term(SymbolicSum(wb * chi * inv_fact), Rational(l), 1);
    const SymbolicSum constant = SymbolicSum(-wb * inv_fact) * (SymbolicSum::logq() + SymbolicSum(chi * exactnum::harmonic(l)))
                                 + SymbolicSum::pi() * SymbolicSum((cycle.imag + rs.rho_b_pair(cycle.coords)) * inv_fact);
    pc += term(constant, Rational(l));
    p.components[1] = pc;
    for (std::size_t i : orb.twisted()) {
        const Rational& d = orb.degree(i);
        Rational rising = 1;
        for (int j = 0; j <= l; ++j) {
            rising *= d + j;
        }
        p.components[i] = term(SymbolicSum(1 / rising) * img[i], d + l);
    }
    return p;
}

PeriodVector alpha_period(int leg, long m, int level, const RootSystem& rs)
{
    if (level > -1) {
        throw std::invalid_argument("alpha_period is defined for levels <= -1");
    }
    const Orbifold& orb = rs.orbifold();
    const int l = -level;
    const long a = orb.a(leg);
    PeriodVector p = zero_period(orb, level, "alpha_" + std::to_string(leg) + "," + std::to_string(m));
    const Rational chi = orb.chi();
    p.components[0] = term(SymbolicSum(1 / factorial(l)), Rational(l));
    const Rational c = 1 / factorial(l - 1);
    PuiseuxSeries pc = term(SymbolicSum(chi * c), Rational(l - 1), 1);
    pc += term(SymbolicSum::pi() * SymbolicSum(make_rational(m, a) * c)
                   - SymbolicSum(c) * (SymbolicSum::logq() + SymbolicSum(chi * exactnum::harmonic(l - 1))),
               Rational(l - 1));
    p.components[1] = pc;
    for (std::size_t i : orb.twisted()) {
        const auto& lab = orb.labels()[i];
        const Rational& d = orb.degree(i);
        Rational rising = 1;
        for (int j = 0; j < l; ++j) {
            rising *= d + j;
        }
        const CycloNumber phase = lab.leg == leg ? exactnum::cyclo(static_cast<int>(a), -m * lab.p) : CycloNumber(1L);
        p.components[i] = term(SymbolicSum(phase) * SymbolicSum(1 / rising), d + l - 1);
    }
    return p;
}

OdeResiduals check_period_odes(const RootVector& cycle, int level, const RootSystem& rs)
{
    const Orbifold& orb = rs.orbifold();
    const PeriodVector cur = calibrated_period(cycle, level, rs);
    const PeriodVector next = calibrated_period(cycle, level + 1, rs);

    OdeResiduals r;
    PeriodVector deriv = zero_period(orb, level, cur.cycle);
    for (std::size_t i = 0; i < orb.size(); ++i) {
        deriv.components[i] = cur.components[i].derivative();
    }
    r.derivative = difference(deriv, next);

    // lambda dI - rho(dI) - (theta - n - 1/2) I, where theta - n - 1/2 = d - 1 - n
    r.grading = zero_period(orb, level, cur.cycle);
    for (std::size_t i = 0; i < orb.size(); ++i) {
        PeriodVector& g = r.grading;
        g.components[i] = deriv.components[i].shifted(Rational(1))
                          - cur.components[i].scaled(SymbolicSum(orb.degree(i) - 1 - level));
    }
    r.grading.components[1] -= deriv.components[0].scaled(SymbolicSum(orb.chi()));

    // Q dQ I(n) + P cup I(n+1); P cup only sees the unit component
    r.novikov = zero_period(orb, level, cur.cycle);
    for (std::size_t i = 0; i < orb.size(); ++i) {
        r.novikov.components[i] = cur.components[i].q_dq();
    }
    r.novikov.components[1] += next.components[0];
    return r;
}

LaplaceReport laplace_match(int leg, long m, int l, const RootSystem& rs, double tol)
{
    if (l < 1) {
        throw std::invalid_argument("laplace_match needs l >= 1");
    }
    const Orbifold& orb = rs.orbifold();
    const PeriodVector per = calibrated_period(alpha_km_root(leg, m, rs), -l, rs);
    const GammaVector psi_hat = psi(leg, m, orb);
    using Key = std::pair<Rational, int>; // s-exponent, power of log s
    const double chi = orb.chi().get_d();

    LaplaceReport rep;
    rep.pass = true;
    for (std::size_t i = 0; i < orb.size(); ++i) {
        std::map<Key, std::complex<double>> got;
        for (const auto& [key, coeff] : per.components[i].terms()) {
            const Rational& q = key.exponent;
            const std::complex<double> c = coeff.evaluate(0.0);
            const double g = gamma_function(q.get_d() + 1);
            const Rational e = -q - 1;
            if (key.log_power == 0) {
                got[{e, 0}] += g * c;
            } else {
                if (!exactnum::is_integer(q) || q < 0) {
                    throw std::logic_error("log lambda with non-integral exponent");
                }
                const double digamma = exactnum::harmonic(static_cast<int>(q.get_num().get_si())).get_d()
                                       - std::numbers::egamma;
                got[{e, 0}] += g * c * digamma;
                got[{e, 1}] -= g * c;
            }
        }
        std::map<Key, std::complex<double>> want;
        if (i == 0) {
            want[{Rational(-l - 1), 0}] = psi_hat.c[0];
        } else if (i == 1) {
            want[{Rational(-l), 0}] = psi_hat.c[1];
            want[{Rational(-l), 1}] = -chi * psi_hat.c[0];
        } else {
            want[{-orb.degree(i) - l, 0}] = psi_hat.c[i];
        }
        std::map<Key, std::pair<std::complex<double>, std::complex<double>>> both;
        for (const auto& [k, v] : got) {
            both[k].first = v;
        }
        for (const auto& [k, v] : want) {
            both[k].second = v;
        }
        for (const auto& [k, v] : both) {
            const double err = std::abs(v.first - v.second);
            rep.max_error = std::max(rep.max_error, err);
            if (err >= tol && rep.pass) {
                rep.pass = false;
                rep.witness = "component " + orb.labels()[i].name() + ", s^" + k.first.get_str()
                              + (k.second ? " log s" : "") + ": " + std::to_string(v.first.real()) + "+"
                              + std::to_string(v.first.imag()) + "i vs " + std::to_string(v.second.real()) + "+"
                              + std::to_string(v.second.imag()) + "i";
            }
        }
    }
    return rep;
}

Rational saito_pairing(const RootVector& a, const RootVector& b, const RootSystem& rs)
{
    return rs.orbifold().intersection_form(rs.image_m1(a), rs.image_m1(b)).pure_part().to_rational();
}

namespace {

std::size_t expanded_rank(const std::vector<CohVector>& vs)
{
    std::map<std::pair<std::size_t, Monomial>, std::size_t> columns;
    for (const auto& v : vs) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (const auto& [mono, c] : v[i].terms()) {
                columns.emplace(std::make_pair(i, mono), columns.size());
            }
        }
    }
    std::vector<std::vector<CycloNumber>> rows;
    for (const auto& v : vs) {
        std::vector<CycloNumber> row(columns.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (const auto& [mono, c] : v[i].terms()) {
                row[columns.at({i, mono})] = c;
            }
        }
        rows.push_back(std::move(row));
    }
    return exactnum::cyclo_rank(std::move(rows));
}

void record(CheckResult& c, bool ok, const std::string& witness)
{
    if (!ok && c.pass) {
        c.pass = false;
        c.witness = witness;
    }
}

} // namespace

CheckList period_suite(const RootSystem& rs, const PeriodSuiteOptions& opts)
{
    const Orbifold& orb = rs.orbifold();
    const std::size_t n = rs.rank();
    std::vector<RootVector> cycles;
    for (std::size_t j = 0; j < n; ++j) {
        cycles.push_back(rs.simple(j));
    }
    cycles.push_back(rs.delta());
    for (int k = 1; k <= 3; ++k) {
        for (long m = 0; m < orb.a(k); ++m) {
            cycles.push_back(alpha_km_root(k, m, rs));
        }
    }

    CheckResult ode{"period ODEs (d/dlambda, grading, Q d/dQ) vanish", true, {}};
    for (const auto& c : cycles) {
        for (int level = opts.min_level; level < opts.max_level; ++level) {
            const OdeResiduals r = check_period_odes(c, level, rs);
            record(ode, r.zero(),
                   c.to_string() + " level " + std::to_string(level) + ": "
                       + (r.derivative.is_zero() ? (r.grading.is_zero() ? r.novikov.to_string(orb)
                                                                         : r.grading.to_string(orb))
                                                 : r.derivative.to_string(orb)));
        }
    }

    CheckResult delta{"I^(-1)_delta = Pi P", true, {}};
    {
        PeriodVector expected = zero_period(orb, -1, "delta");
        expected.components[1] = term(SymbolicSum::pi(), Rational(0));
        const PeriodVector got = calibrated_period(rs.delta(), -1, rs);
        record(delta, got == expected, got.to_string(orb));
        record(delta, calibrated_period(rs.delta(), 0, rs).is_zero(), "level-0 period of delta is nonzero");
    }

    CheckResult mono{"lambda-monodromy = sigma on cycles", true, {}};
    for (std::size_t j = 0; j <= n; ++j) {
        const RootVector c = j < n ? rs.simple(j) : rs.delta();
        for (int level = -2; level <= 1; ++level) {
            PeriodVector moved = calibrated_period(c, level, rs);
            for (auto& comp : moved.components) {
                comp = comp.monodromy();
            }
            const PeriodVector target = calibrated_period(rs.sigma_affine(c), level, rs);
            record(mono, moved == target, c.to_string() + " level " + std::to_string(level));
        }
    }

    CheckResult calp{"alpha_{k,m} lattice period = inverse-Laplace formula", true, {}};
    for (int k = 1; k <= 3; ++k) {
        const long a = orb.a(k);
        for (long m = -a; m < 2 * a; ++m) {
            for (int l = 1; l <= 3; ++l) {
                record(calp, calibrated_period(alpha_km_root(k, m, rs), -l, rs) == alpha_period(k, m, -l, rs),
                       "k=" + std::to_string(k) + " m=" + std::to_string(m) + " l=" + std::to_string(l));
            }
        }
    }

    CheckResult indep{"level -1 images independent", true, {}};
    CheckResult kernel{"level-0 kernel = C delta", true, {}};
    {
        std::vector<CohVector> m1;
        std::vector<CohVector> l0;
        for (std::size_t j = 0; j < n; ++j) {
            m1.push_back(calibrated_period(rs.simple(j), -1, rs).at_one());
            l0.push_back(calibrated_period(rs.simple(j), 0, rs).at_one());
        }
        m1.push_back(calibrated_period(rs.delta(), -1, rs).at_one());
        const std::size_t r1 = expanded_rank(m1);
        record(indep, r1 == n + 1, "rank " + std::to_string(r1));
        const std::size_t r0 = expanded_rank(l0);
        record(kernel, r0 == n && calibrated_period(rs.delta(), 0, rs).is_zero(), "rank " + std::to_string(r0));
    }

    CheckResult saito{"Saito pairing = Cartan matrix, delta null", true, {}};
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            const RootVector a = i < n ? rs.simple(i) : rs.delta();
            const RootVector b = j < n ? rs.simple(j) : rs.delta();
            const Rational expected = (i < n && j < n) ? Rational(rs.cartan()[i][j]) : Rational(0);
            record(saito, saito_pairing(a, b, rs) == expected, a.to_string() + ", " + b.to_string());
        }
    }

    CheckList out{ode, delta, mono, calp, indep, kernel, saito};
    if (opts.laplace) {
        CheckResult lap{"Laplace transform reproduces psi(L_k^m) to 1e-10", true, {}};
        for (int k = 1; k <= 3; ++k) {
            for (long m = 0; m < orb.a(k); ++m) {
                for (int l = 1; l <= 2; ++l) {
                    const LaplaceReport r = laplace_match(k, m, l, rs);
                    record(lap, r.pass, r.witness);
                }
            }
        }
        out.push_back(lap);
    }
    return out;
}

} // namespace cusp
