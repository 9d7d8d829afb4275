#include "cusp/hqe.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace cusp {

namespace {

using exactnum::PuiseuxSeries;

std::string vec_str(const std::vector<long>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ")";
}

std::vector<long> negated(std::vector<long> v)
{
    for (auto& x : v) {
        x = -x;
    }
    return v;
}

} // namespace

HqeContext::HqeContext(const RootSystem& rs, int kappa) : rs_(rs), kappa_(kappa)
{
    if (kappa <= 0 || kappa % rs.sigma_order() != 0) {
        throw std::invalid_argument("kappa " + std::to_string(kappa) + " is not a multiple of |sigma_b| = "
                                    + std::to_string(rs.sigma_order()));
    }
}

std::vector<long> HqeContext::orbit_pairings(const std::vector<long>& alpha, const std::vector<long>& beta) const
{
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(kappa_));
    std::vector<long> v = alpha;
    for (int m = 1; m <= kappa_; ++m) {
        v = rs_.apply_sigma(v);
        out.push_back(rs_.pair(v, beta));
    }
    return out;
}

CycloNumber HqeContext::product(const std::vector<long>& exponents) const
{
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = cache_.find(exponents); it != cache_.end()) {
            return it->second;
        }
    }
    CycloNumber v = exactnum::product_one_minus_powers(kappa_, exponents);
    std::lock_guard lock(cache_mutex_);
    cache_.emplace(exponents, v);
    return v;
}

CycloNumber HqeContext::b_bilinear(const std::vector<long>& alpha, const std::vector<long>& beta) const
{
    std::vector<long> e = orbit_pairings(alpha, beta);
    e.pop_back(); // m = kappa
    const long ab = rs_.pair(alpha, beta);
    return CycloNumber(Rational(kappa_)).pow(-ab) * product(e);
}

HqeCoefficient HqeContext::a_coefficient(const std::vector<long>& alpha) const
{
    HqeCoefficient c;
    c.alpha = alpha;
    c.omega_b = RootSystem::omega_b_pair(alpha);
    const Rational& chi = rs_.orbifold().chi();
    c.norm0 = chi * Rational(c.omega_b * c.omega_b);
    c.zeta_exponent = Rational(kappa_) * c.norm0;
    c.magnitude = b_bilinear(alpha, alpha);
    c.phase = CycloNumber::exp_2pi_i(rs_.rho_b_pair(alpha) * Rational(c.omega_b));
    c.lambda_exponent = -c.norm0;
    c.q_exponent = c.norm0 / chi;
    // zeta^{-kappa |a0|^2} with zeta^kappa = kappa lambda, against C^{|a0|^2/chi} with C = kappa^chi Q
    c.kappa_power_exponent = c.norm0 - c.norm0;
    return c;
}

PhaseFactorSeries HqeContext::phase_factor(const std::vector<long>& alpha, const std::vector<long>& beta,
                                           const Rational& order) const
{
    PhaseFactorSeries pf;
    const Rational& chi = rs_.orbifold().chi();
    const Rational ab0 = chi * Rational(RootSystem::omega_b_pair(alpha) * RootSystem::omega_b_pair(beta));
    pf.mu_exponent = -ab0;
    pf.q_exponent = ab0 / chi;
    pf.phase = CycloNumber::exp_2pi_i(-Rational(RootSystem::omega_b_pair(alpha)) * rs_.rho_b_pair(beta));
    pf.exponents = orbit_pairings(alpha, beta);
    PuiseuxSeries s = exactnum::binom_series(CycloNumber(1L), 0, order);
    for (int m = 1; m <= kappa_; ++m) {
        const long e = pf.exponents[static_cast<std::size_t>(m - 1)];
        if (e != 0) {
            s = s * exactnum::binom_series(exactnum::cyclo(kappa_, m), e, order);
        }
    }
    pf.series = s;
    return pf;
}

BMatch HqeContext::b_coefficient_match(const std::vector<long>& alpha) const
{
    BMatch r;
    const HqeCoefficient a = a_coefficient(alpha);
    // b from a_alpha: zeta^{-2 kappa |a0|^2} C^{|a0|^2/chi} e^{-4 pi i (rho|a)(omega|a)} a_alpha
    r.lambda_exponent[0] = a.lambda_exponent;
    r.q_exponent[0] = a.q_exponent;
    r.phase[0] = a.phase * CycloNumber::exp_2pi_i(-2 * rs_.rho_b_pair(alpha) * Rational(a.omega_b));
    if (a.kappa_power_exponent.get_den() != 1) {
        throw std::logic_error("b: fractional power of kappa " + a.kappa_power_exponent.get_str());
    }
    r.magnitude[0] = a.magnitude * CycloNumber(Rational(kappa_)).pow(a.kappa_power_exponent.get_num().get_si());

    // b-tilde^{-1} = lim_{x -> 1} (1 - x^kappa)^2 B-tilde_{a,-a}(lambda, lambda)
    const PhaseFactorSeries pf = phase_factor(alpha, negated(alpha), Rational(0));
    std::vector<long> e = pf.exponents;
    for (auto& x : e) {
        x += 2;
    }
    if (e.back() != 0) {
        throw std::logic_error("b-tilde limit: order at x = 1 is " + std::to_string(-pf.exponents.back()));
    }
    e.pop_back();
    const CycloNumber inv_mag = product(e);
    r.lambda_exponent[1] = -pf.mu_exponent;
    r.q_exponent[1] = -pf.q_exponent;
    r.phase[1] = pf.phase.inverse();
    r.magnitude[1] = inv_mag.inverse();

    r.equal = r.lambda_exponent[0] == r.lambda_exponent[1] && r.q_exponent[0] == r.q_exponent[1]
              && r.phase[0] == r.phase[1] && r.magnitude[0] == r.magnitude[1];
    return r;
}

CommutatorValue HqeContext::commutator_identity(const std::vector<long>& alpha, const std::vector<long>& beta) const
{
    CommutatorValue out;
    const std::vector<long> e = orbit_pairings(beta, alpha); // (sigma^m beta|alpha)
    long total = 0;
    for (int m = 1; m <= kappa_; ++m) {
        total += (kappa_ + 2L * m) * e[static_cast<std::size_t>(m - 1)];
    }
    out.lhs = exactnum::cyclo(2 * kappa_, total);

    const std::size_t n = rs_.rank();
    const Rational& chi = rs_.orbifold().chi();
    const Weights w = fundamental_weights(rs_);
    const long ab = RootSystem::omega_b_pair(alpha);
    std::vector<Rational> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        rhs[i] = Rational(alpha[i]) - chi * Rational(ab) * w.omega[0][i];
    }
    RationalMatrix m(n + 1, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = Rational((i == j ? 1 : 0) - rs_.sigma()[i][j]);
        }
    }
    m[n][0] = 1;
    rhs.push_back(Rational(0));
    const auto x = exactnum::solve_unique(m, rhs);
    if (!x) {
        throw std::logic_error("(1 - sigma_b) x = alpha_* has no solution for " + vec_str(alpha));
    }
    Rational xb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            xb += (*x)[i] * Rational(rs_.cartan()[i][j] * beta[j]);
        }
    }
    const Rational ab0 = chi * Rational(ab * RootSystem::omega_b_pair(beta));
    out.rhs = CycloNumber::exp_2pi_i(ab0 / 2 + xb);
    return out;
}

CycloNumber HqeContext::constant_term() const
{
    CycloNumber s(0L);
    for (const auto& r : rs_.finite().roots) {
        if (RootSystem::omega_b_pair(r) == 0) {
            const HqeCoefficient a = a_coefficient(r);
            s += a.magnitude * a.phase;
        }
    }
    return s;
}

HqeReport hqe_report(const RootSystem& rs)
{
    const Orbifold& orb = rs.orbifold();
    HqeReport rep;
    rep.triple = orb.triple();
    rep.kappa = kappa(rep.triple);
    field_order(rep.triple);
    rep.sigma_order = rs.sigma_order();
    const HqeContext ctx(rs, rep.kappa);
    rep.constant = ctx.constant_term().to_rational();
    rep.hodge = hodge_trace(orb);
    const EigenData eig = coxeter_sigma(rs, rep.kappa);
    std::set<Rational> lattice;
    for (std::size_t i = 0; i < orb.size(); ++i) {
        rep.index_names.push_back(orb.labels()[i].name());
        rep.exponents.push_back(eig.exponents[i]);
        for (int l = 0; l <= 2; ++l) {
            const Rational v = eig.exponents[i] + Rational(l * rep.kappa);
            if (v > 0) {
                lattice.insert(v);
            }
        }
    }
    rep.exponent_lattice.assign(lattice.begin(), lattice.end());
    for (const auto& r : rs.finite().roots) {
        const HqeCoefficient a = ctx.a_coefficient(r);
        rep.roots.push_back({r, a.omega_b, a.magnitude, a.zeta_exponent, a.phase});
    }
    return rep;
}

CheckList hqe_suite(const RootSystem& rs, const HqeSuiteOptions& opts)
{
    const Orbifold& orb = rs.orbifold();
    const int k = kappa(orb.triple()) * opts.kappa_multiplier;
    field_order(orb.triple());
    const HqeContext ctx(rs, k);
    const auto& roots = rs.finite().roots;
    CheckList out;

    {
        const HodgeTraceParts h = hodge_trace_parts(orb);
        const CycloNumber c = ctx.constant_term();
        const bool ok = c == CycloNumber(h.closed_form) && h.closed_form == h.trace_form
                        && h.closed_form == h.twisted_sum;
        out.push_back({"sum_{(omega_b|a)=0} a_alpha = (1/12) sum (a_k^2-1)/a_k = hodge trace", ok,
                       ok ? "" : c.to_string() + " vs " + h.closed_form.get_str()});
    }

    CheckResult bm{"b_alpha = b-tilde_alpha on all roots", true, {}};
    for (const auto& r : roots) {
        const BMatch m = ctx.b_coefficient_match(r);
        if (!m.equal) {
            bm.pass = false;
            bm.witness = vec_str(r) + ": lambda^" + m.lambda_exponent[0].get_str() + " Q^" + m.q_exponent[0].get_str()
                         + " " + m.phase[0].to_string() + " " + m.magnitude[0].to_string() + " vs lambda^"
                         + m.lambda_exponent[1].get_str() + " Q^" + m.q_exponent[1].get_str() + " "
                         + m.phase[1].to_string() + " " + m.magnitude[1].to_string();
            break;
        }
    }
    out.push_back(bm);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const std::size_t n = rs.rank();
    std::vector<std::vector<long>> cands;
    for (std::size_t i = 0; i < n; ++i) {
        cands.push_back(rs.simple(i).coords);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    cands.insert(cands.end(), roots.begin(), roots.end());
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(n, cands.size() - 1);
    for (int t = 0; t < opts.random_pairs; ++t) {
        pairs.emplace_back(pick(rng), pick(rng));
    }

    CheckResult comm{"prod (-eta^m)^{(a|sigma^m b)} = e^{pi i (a0|b0)} e^{2 pi i ((1-sigma)^{-1} a_*|b)}", true, {}};
    CheckResult swap{"commutator exchange symmetry", true, {}};
    for (const auto& [i, j] : pairs) {
        const CommutatorValue ab = ctx.commutator_identity(cands[i], cands[j]);
        if (comm.pass && !ab.equal()) {
            comm.pass = false;
            comm.witness = vec_str(cands[i]) + ", " + vec_str(cands[j]) + ": " + ab.lhs.to_string() + " vs "
                           + ab.rhs.to_string();
        }
        const CommutatorValue ba = ctx.commutator_identity(cands[j], cands[i]);
        if (swap.pass && !(ab.lhs * ba.lhs == CycloNumber(1L))) {
            swap.pass = false;
            swap.witness = vec_str(cands[i]) + ", " + vec_str(cands[j]) + ": " + (ab.lhs * ba.lhs).to_string();
        }
    }
    out.push_back(comm);
    out.push_back(swap);
    return out;
}

CheckResult kappa_stability(const RootSystem& rs, const std::vector<int>& multipliers)
{
    CheckResult res{"a_alpha and b-match unchanged under kappa -> m kappa", true, {}};
    const int k0 = kappa(rs.orbifold().triple());
    const auto& roots = rs.finite().roots;
    struct Entry {
        long omega_b;
        CycloNumber magnitude;
        CycloNumber phase;
        bool match;
    };
    std::vector<Entry> base;
    for (int m : multipliers) {
        const HqeContext ctx(rs, k0 * m);
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const HqeCoefficient a = ctx.a_coefficient(roots[i]);
            const Entry e{a.omega_b, a.magnitude, a.phase, ctx.b_coefficient_match(roots[i]).equal};
            if (base.size() < roots.size()) {
                base.push_back(e);
                continue;
            }
            const Entry& b = base[i];
            if (e.omega_b != b.omega_b || !(e.magnitude == b.magnitude) || !(e.phase == b.phase) || e.match != b.match) {
                res.pass = false;
                res.witness = "m = " + std::to_string(m) + ", " + vec_str(roots[i]) + ": B = " + e.magnitude.to_string()
                              + " vs " + b.magnitude.to_string();
                return res;
            }
        }
    }
    return res;
}

} // namespace cusp
