#include "doctest.h"
#include "fano.hpp"

#include "cusp/hqe.hpp"

using namespace cusp;

namespace {

RootSystem system_of(int a1, int a2, int a3)
{
    return RootSystem::build(Orbifold::build(a1, a2, a3));
}

std::vector<long> neg(std::vector<long> v)
{
    for (auto& x : v) {
        x = -x;
    }
    return v;
}

} // namespace

TEST_CASE("hqe: B on D4")
{
    const RootSystem rs = system_of(2, 2, 2);
    const HqeContext ctx(rs, 4);
    const auto g11 = rs.simple(rs.node_of(1, 1)).coords;
    CHECK(ctx.orbit_pairings(g11, g11) == std::vector<long>{-2, 2, -2, 2});
    CHECK(ctx.b_bilinear(g11, g11) == CycloNumber(Rational(1, 16)));

    // (sigma alpha|alpha) = -2 gives 2^{-2} / 4 with the shorthand of the worked example
    for (const auto& r : rs.finite().roots) {
        if (RootSystem::omega_b_pair(r) == 0) {
            const long s = ctx.orbit_pairings(r, r)[0];
            CHECK(ctx.b_bilinear(r, r) == CycloNumber(Rational(1, 4) * Rational(1, 4)));
            CHECK(s == -2);
        }
    }
}

TEST_CASE("hqe: B for sigma-fixed roots and kappa = 1")
{
    const RootSystem rs = system_of(1, 1, 1);
    const HqeContext ctx(rs, kappa(rs.orbifold().triple()));
    CHECK(ctx.kappa() == 1);
    for (const auto& r : rs.finite().roots) {
        CHECK(ctx.b_bilinear(r, r) == CycloNumber(1L));
    }
    CHECK(rs.finite().roots.size() == 2);

    // sigma-fixed root: exponents all 2, B = kappa^{-2} kappa^2
    const RootSystem d = system_of(2, 2, 2);
    const HqeContext c4(d, 8);
    std::vector<long> e(7, 2);
    CHECK(exactnum::product_one_minus_powers(8, e) * CycloNumber(Rational(1, 64)) == CycloNumber(1L));
}

TEST_CASE("hqe: a_alpha examples")
{
    const RootSystem rs = system_of(2, 2, 2);
    const HqeContext ctx(rs, 4);
    for (int leg = 1; leg <= 3; ++leg) {
        const auto g = rs.simple(rs.node_of(leg, 1)).coords;
        for (const auto& v : {g, neg(g)}) {
            const HqeCoefficient a = ctx.a_coefficient(v);
            CHECK(a.magnitude == CycloNumber(Rational(1, 16)));
            CHECK(a.zeta_exponent == 0);
            CHECK(a.phase == CycloNumber(1L));
        }
    }
    CHECK(ctx.constant_term() == CycloNumber(Rational(3, 8)));

    const auto gb = rs.simple(0).coords;
    const HqeCoefficient a = ctx.a_coefficient(gb);
    CHECK(a.norm0 == Rational(1, 2));
    CHECK(a.zeta_exponent == 2);
    CHECK(a.lambda_exponent == Rational(-1, 2));
    CHECK(a.q_exponent == 1);
    CHECK(a.kappa_power_exponent == 0);
}

TEST_CASE("hqe: constant term equals the hodge trace")
{
    for (const auto& t : testing_support::fano_triples(8)) {
        const RootSystem rs = system_of(t[0], t[1], t[2]);
        const HqeContext ctx(rs, kappa(rs.orbifold().triple()));
        CHECK_MESSAGE(ctx.constant_term() == CycloNumber(hodge_trace(rs.orbifold())),
                      rs.orbifold().triple().to_string());
    }
}

TEST_CASE("hqe: phase factor series")
{
    const RootSystem rs = system_of(2, 2, 2);
    const HqeContext ctx(rs, 4);
    const auto g1 = rs.simple(rs.node_of(1, 1)).coords;
    const auto g2 = rs.simple(rs.node_of(2, 1)).coords;
    const Rational order(8);

    const PhaseFactorSeries ortho = ctx.phase_factor(g1, g2, order);
    CHECK(ortho.series == exactnum::binom_series(CycloNumber(1L), 0, order));
    CHECK(ortho.mu_exponent == 0);
    CHECK(ortho.q_exponent == 0);
    CHECK(ortho.phase == CycloNumber(1L));

    const PhaseFactorSeries pf = ctx.phase_factor(g1, neg(g1), order);
    const CycloNumber i = exactnum::cyclo(4, 1);
    const auto expected = exactnum::binom_series(i, 2, order) * exactnum::binom_series(-i, 2, order)
                          * exactnum::binom_series(CycloNumber(1L), -2, order)
                          * exactnum::binom_series(CycloNumber(-1L), -2, order);
    CHECK(pf.series == expected);
    // m = kappa factor carries the order (alpha|beta) at x = 1
    CHECK(pf.exponents.back() == rs.pair(g1, neg(g1)));

    for (const auto& a : rs.finite().roots) {
        for (const auto& b : {rs.simple(0).coords, g1}) {
            const PhaseFactorSeries p = ctx.phase_factor(a, b, Rational(3));
            CHECK(p.series.coefficient(Rational(0)) == exactnum::SymbolicSum(1L));
        }
    }
}

TEST_CASE("hqe: b coefficient match")
{
    const RootSystem rs = system_of(2, 2, 2);
    const HqeContext ctx(rs, 4);
    const auto g11 = rs.simple(rs.node_of(1, 1)).coords;
    BMatch m = ctx.b_coefficient_match(g11);
    CHECK(m.equal);
    CHECK(m.magnitude[1] == CycloNumber(Rational(1, 16)));
    CHECK(m.lambda_exponent[1] == 0);
    CHECK(m.q_exponent[1] == 0);

    m = ctx.b_coefficient_match(rs.simple(0).coords);
    CHECK(m.equal);
    CHECK(m.lambda_exponent[1] == Rational(-1, 2));
    CHECK(m.q_exponent[1] == 1);

    for (const auto& t : testing_support::fano_triples(7)) {
        const RootSystem r = system_of(t[0], t[1], t[2]);
        const HqeContext c(r, kappa(r.orbifold().triple()));
        for (const auto& root : r.finite().roots) {
            CHECK_MESSAGE(c.b_coefficient_match(root).equal, r.orbifold().triple().to_string());
        }
    }
}

TEST_CASE("hqe: commutator identity")
{
    const RootSystem rs = system_of(2, 2, 2);
    const HqeContext ctx(rs, 4);
    const auto g1 = rs.simple(rs.node_of(1, 1)).coords;
    const auto g2 = rs.simple(rs.node_of(2, 1)).coords;
    CommutatorValue v = ctx.commutator_identity(g1, g1);
    CHECK(v.lhs == CycloNumber(1L));
    CHECK(v.rhs == CycloNumber(1L));
    v = ctx.commutator_identity(g1, g2);
    CHECK(v.lhs == CycloNumber(1L));
    CHECK(v.rhs == CycloNumber(1L));
}

TEST_CASE("hqe: suite on Fano triples")
{
    for (const auto& t : testing_support::fano_triples(6)) {
        const RootSystem rs = system_of(t[0], t[1], t[2]);
        for (const auto& chk : hqe_suite(rs)) {
            CHECK_MESSAGE(chk.pass, (rs.orbifold().triple().to_string() + " " + chk.identity + ": " + chk.witness));
        }
    }
    const RootSystem e8 = system_of(2, 3, 5);
    for (const auto& chk : hqe_suite(e8, {20, 3, 1})) {
        CHECK_MESSAGE(chk.pass, (chk.identity + ": " + chk.witness));
    }
}

TEST_CASE("hqe: kappa stability")
{
    for (const auto& t : std::vector<std::array<int, 3>>{{2, 2, 2}, {1, 2, 2}}) {
        const RootSystem rs = system_of(t[0], t[1], t[2]);
        const CheckResult r = kappa_stability(rs);
        CHECK_MESSAGE(r.pass, (r.witness));
        for (int m : {2, 3}) {
            HqeSuiteOptions o;
            o.kappa_multiplier = m;
            for (const auto& chk : hqe_suite(rs, o)) {
                CHECK_MESSAGE(chk.pass, (chk.identity + ": " + chk.witness));
            }
        }
    }
}

TEST_CASE("hqe: report")
{
    HqeReport r = hqe_report(system_of(2, 2, 2));
    CHECK(r.constant == Rational(3, 8));
    CHECK(r.kappa == 4);
    const std::vector<Rational> lat{2, 4, 6, 8, 10, 12};
    CHECK(r.exponent_lattice == lat);

    r = hqe_report(system_of(1, 1, 1));
    CHECK(r.roots.size() == 2);
    for (const auto& e : r.exponent_lattice) {
        CHECK(e.get_den() == 1);
        CHECK(e.get_num() % r.kappa == 0);
    }

    r = hqe_report(system_of(2, 3, 3));
    CHECK(r.kappa == 12);
    const std::vector<Rational> ex{0, 12, 6, 4, 8, 4, 8};
    CHECK(r.exponents == ex);
}
