// Acceptance run: one line per criterion, exit 0 iff the set of failing
// criteria equals the set passed with --expect-fail.

#include "fano.hpp"

#include "cusp/cocycle.hpp"
#include "cusp/gw222.hpp"
#include "cusp/hqe.hpp"
#include "cusp/kgamma.hpp"
#include "cusp/periods.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace cusp;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;

    void fail(const std::string& why)
    {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

struct Criterion {
    int id;
    std::string title;
    double budget_s; // 0 = no runtime bound
    std::function<Outcome()> run;
};

std::string triple_name(const RootSystem& rs)
{
    return rs.orbifold().triple().to_string();
}

const std::vector<RootSystem>& test_systems()
{
    static const std::vector<RootSystem> systems = [] {
        std::vector<RootSystem> out;
        for (const auto& t : testing_support::fano_triples(8)) {
            out.push_back(RootSystem::build(Orbifold::build(t[0], t[1], t[2])));
        }
        return out;
    }();
    return systems;
}

void require_checks(Outcome& o, const std::string& where, const CheckList& checks, const std::set<std::string>& only = {})
{
    for (const auto& c : checks) {
        if (!only.empty() && !only.contains(c.identity)) {
            continue;
        }
        if (!c.pass) {
            o.fail(where + ": " + c.identity + ": " + c.witness);
        }
    }
}

Outcome constant_term()
{
    Outcome o;
    for (const auto& rs : test_systems()) {
        const HqeContext ctx(rs, kappa(rs.orbifold().triple()));
        const HodgeTraceParts h = hodge_trace_parts(rs.orbifold());
        const CycloNumber s = ctx.constant_term();
        if (!(s == CycloNumber(h.closed_form)) || h.closed_form != h.trace_form) {
            o.fail(triple_name(rs) + ": " + s.to_string() + ", " + h.closed_form.get_str() + ", "
                   + h.trace_form.get_str());
        }
    }
    o.notes.push_back(std::to_string(test_systems().size()) + " triples");
    return o;
}

Outcome d4_numbers()
{
    Outcome o;
    const RootSystem rs = RootSystem::build(Orbifold::build(2, 2, 2));
    const int k = kappa(rs.orbifold().triple());
    if (k != 4) {
        o.fail("kappa = " + std::to_string(k));
    }
    if (rs.sigma_order() != 2) {
        o.fail("|sigma_b| = " + std::to_string(rs.sigma_order()));
    }
    if (rs.finite().type != "D4" || rs.finite().positive.size() != 12) {
        o.fail(rs.finite().type + " with " + std::to_string(rs.finite().positive.size()) + " positive roots");
    }
    const EigenData ed = coxeter_sigma(rs, k);
    for (std::size_t i : rs.orbifold().twisted()) {
        if (ed.exponents[i] != 2) {
            o.fail("m_" + rs.orbifold().labels()[i].name() + " = " + ed.exponents[i].get_str());
        }
    }
    const Weights w = fundamental_weights(rs);
    const std::vector<Rational> omega_b{2, 1, 1, 1};
    if (w.omega[0] != omega_b) {
        o.fail("omega_b is not 2 gamma_b + gamma_1 + gamma_2 + gamma_3");
    }
    const CycloNumber c = HqeContext(rs, k).constant_term();
    if (!(c == CycloNumber(exactnum::make_rational(3, 8)))) {
        o.fail("constant " + c.to_string());
    }
    return o;
}

Outcome b_match()
{
    Outcome o;
    std::size_t roots = 0;
    for (const auto& rs : test_systems()) {
        const auto start = std::chrono::steady_clock::now();
        const HqeContext ctx(rs, kappa(rs.orbifold().triple()));
        for (const auto& r : rs.finite().roots) {
            ++roots;
            if (!ctx.b_coefficient_match(r).equal) {
                o.fail(triple_name(rs) + " root " + RootVector(r).to_string());
            }
        }
        if (rs.finite().type == "E8") {
            const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            std::ostringstream os;
            os << "E8 " << s << " s";
            o.notes.push_back(os.str());
            if (s >= 30) {
                o.fail("E8 took " + std::to_string(s) + " s");
            }
        }
    }
    o.notes.push_back(std::to_string(roots) + " roots");
    return o;
}

Outcome affine_and_conjugacy()
{
    Outcome o;
    PeriodSuiteOptions popts;
    popts.laplace = false;
    for (const auto& rs : test_systems()) {
        require_checks(o, triple_name(rs), roots_suite(rs, kappa(rs.orbifold().triple())),
                       {"affine Gram PSD, rank N, kernel = delta", "affine sigma table on gamma_b, gamma_{k,p}, delta",
                        "sigma_b isometry of order lcm(a)"});
        require_checks(o, triple_name(rs), period_suite(rs, popts), {"lambda-monodromy = sigma on cycles"});
    }
    return o;
}

Outcome gamma_correspondence()
{
    Outcome o;
    double worst = 0;
    for (const auto& t : std::vector<std::array<int, 3>>{{2, 2, 2}, {1, 2, 3}, {2, 3, 3}}) {
        const RootSystem rs = RootSystem::build(Orbifold::build(t[0], t[1], t[2]));
        for (int k = 1; k <= 3; ++k) {
            for (long m = 0; m < rs.orbifold().a(k); ++m) {
                for (int l = 1; l <= 3; ++l) {
                    const LaplaceReport lr = laplace_match(k, m, l, rs, 1e-10);
                    worst = std::max(worst, lr.max_error);
                    if (!lr.pass) {
                        o.fail(triple_name(rs) + " L_" + std::to_string(k) + "^" + std::to_string(m) + " level -"
                               + std::to_string(l) + ": " + lr.witness);
                    }
                }
            }
        }
        require_checks(o, triple_name(rs), gamma_suite(rs));
    }
    std::ostringstream os;
    os << "max Laplace error " << worst;
    o.notes.push_back(os.str());
    return o;
}

Outcome potential()
{
    Outcome o;
    const gw222::GradedPotential rec = gw222::solve_recursion(8);
    const gw222::GradedPotential closed = gw222::closed_form_potential();
    for (int d = 0; d <= 4; ++d) {
        if (!(rec.part(d) == closed.part(d))) {
            o.fail("degree " + std::to_string(d) + ": " + rec.part(d).to_string());
        }
    }
    for (int d = 5; d <= 8; ++d) {
        if (!rec.part(d).is_zero()) {
            o.fail("degree " + std::to_string(d) + " nonzero");
        }
    }
    const Rational four = gw222::four_point_invariant(rec, 1);
    if (four != exactnum::make_rational(1, 4)) {
        o.fail("four-point invariant " + four.get_str());
    }
    const gw222::WdvvReport w = gw222::wdvv_check(rec, 8);
    if (!w.pass()) {
        o.fail("WDVV residual with the default seed: " + w.witness);
    }
    const gw222::WdvvReport fixed = gw222::wdvv_check(gw222::solve_recursion(8, gw222::kWdvvQuartic), 8);
    o.notes.push_back(std::string("with t_i^4 coefficient -1/96: WDVV ") + (fixed.pass() ? "pass" : "FAIL")
                      + ", four-point "
                      + gw222::four_point_invariant(gw222::closed_form_potential(gw222::kWdvvQuartic), 1).get_str());
    return o;
}

Outcome cocycle()
{
    Outcome o;
    for (const auto& rs : test_systems()) {
        require_checks(o, triple_name(rs), cocycle_suite(rs));
    }
    return o;
}

Outcome periods()
{
    Outcome o;
    PeriodSuiteOptions popts;
    popts.min_level = -3;
    popts.max_level = 2;
    popts.laplace = false;
    for (const auto& rs : test_systems()) {
        require_checks(o, triple_name(rs), period_suite(rs, popts),
                       {"period ODEs (d/dlambda, grading, Q d/dQ) vanish", "I^(-1)_delta = Pi P"});
    }
    return o;
}

Outcome stability()
{
    Outcome o;
    for (const auto& t : std::vector<std::array<int, 3>>{{2, 2, 2}, {1, 2, 2}}) {
        const RootSystem rs = RootSystem::build(Orbifold::build(t[0], t[1], t[2]));
        const CheckResult r = kappa_stability(rs, {1, 2, 3});
        if (!r.pass) {
            o.fail(triple_name(rs) + ": " + r.witness);
        }
    }
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    std::set<int> expected_fail;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--expect-fail" && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            std::string item;
            while (std::getline(ss, item, ',')) {
                expected_fail.insert(std::stoi(item));
            }
        } else {
            std::cerr << "usage: acceptance [--expect-fail 1,2,...]\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria{
        {1, "constant term = (1/12) sum (a_k^2-1)/a_k = trace form, a3 <= 8", 10, constant_term},
        {2, "(2,2,2): kappa 4, |sigma_b| 2, m_i 2, D4, omega_b, constant 3/8", 0, d4_numbers},
        {3, "b = b-tilde on every root of every test triple", 0, b_match},
        {4, "affine signature and monodromy table", 0, affine_and_conjugacy},
        {5, "Laplace vs psi to 1e-10, Euler pairing table to 1e-9, |det| = 1", 0, gamma_correspondence},
        {6, "(2,2,2) potential: recursion, closed form, WDVV, four-point 1/4", 5, potential},
        {7, "cocycle identities, simple roots and 500 random pairs", 0, cocycle},
        {8, "period ODEs at levels -3..2 and I^(-1)_delta = Pi P", 0, periods},
        {9, "kappa -> 2 kappa, 3 kappa leaves a_alpha and b-match unchanged", 0, stability},
    };

    std::set<int> failed;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0 && secs >= c.budget_s) {
            o.fail("runtime " + std::to_string(secs) + " s over " + std::to_string(c.budget_s) + " s");
        }
        if (!o.pass) {
            failed.insert(c.id);
        }
        char timing[64];
        if (c.budget_s > 0) {
            std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.budget_s);
        } else {
            std::snprintf(timing, sizeof timing, "%.2f s", secs);
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  [" << timing << "]";
        if (!o.pass && expected_fail.contains(c.id)) {
            std::cout << "  (expected)";
        }
        std::cout << "\n";
        if (!o.pass) {
            std::cout << "      " << o.detail << "\n";
        }
        for (const auto& n : o.notes) {
            std::cout << "      " << n << "\n";
        }
    }
    std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria pass\n";
    if (failed != expected_fail) {
        std::cout << "failing set differs from the expected set\n";
        return 1;
    }
    return 0;
}
