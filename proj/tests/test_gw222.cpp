#include "doctest.h"

#include "cusp/gw222.hpp"

using namespace cusp::gw222;
using cusp::exactnum::make_rational;

TEST_CASE("gw222: closed form")
{
    const GradedPotential f = closed_form_potential();
    CHECK(f.part(1).coefficient({0, 0, 1, 1, 1}) == 1);
    CHECK(f.part(3).is_zero());
    CHECK(f.part(4) == Poly::constant(make_rational(1, 4)));
    CHECK(f.part(2).coefficient({0, 0, 2, 0, 0}) == make_rational(1, 2));
    CHECK(f.part(0).coefficient({2, 1, 0, 0, 0}) == make_rational(1, 2));
    CHECK(f.part(0).coefficient({0, 0, 0, 0, 4}) == make_rational(1, 96));
}

TEST_CASE("gw222: recursion reproduces the closed form")
{
    const GradedPotential r = solve_recursion(8);
    const GradedPotential f = closed_form_potential();
    for (int d = 0; d <= 4; ++d) {
        CHECK_MESSAGE(r.part(d) == f.part(d), d);
    }
    for (int d = 5; d <= 8; ++d) {
        CHECK(r.part(d).is_zero());
    }
    CHECK(r == f);
    CHECK(solve_recursion(8, kWdvvQuartic) == closed_form_potential(kWdvvQuartic));
    CHECK(solve_recursion(2).part(2) == f.part(2));
    CHECK_THROWS_AS(solve_recursion(0), std::invalid_argument);
}

TEST_CASE("gw222: string equation and unit")
{
    const GradedPotential f = closed_form_potential();
    // F_{01,01} = t02, F_{01,i} = t_i / 2
    const GradedPotential f0101 = f.derivative(0).derivative(0);
    CHECK(f0101.parts().size() == 1);
    CHECK(f0101.part(0) == Poly::monomial(1, {0, 1, 0, 0, 0}));
    for (int i = 2; i < kVars; ++i) {
        Exponents e{};
        e[i] = 1;
        const GradedPotential g = f.derivative(0).derivative(i);
        CHECK(g.parts().size() == 1);
        CHECK(g.part(0) == Poly::monomial(make_rational(1, 2), e));
    }
}

TEST_CASE("gw222: WDVV")
{
    const WdvvReport ok = wdvv_check(solve_recursion(8, kWdvvQuartic), 8);
    CHECK_MESSAGE(ok.pass(), ok.witness);

    // the default +1/96 seed breaks associativity at degree 1
    const WdvvReport seeded = wdvv_check(closed_form_potential(), 8);
    CHECK(seeded.unit);
    CHECK_FALSE(seeded.associative);
    CHECK(seeded.failing_degree == 1);

    GradedPotential bad = closed_form_potential(kWdvvQuartic);
    bad.set(4, Poly::constant(make_rational(1, 3)));
    const WdvvReport r = wdvv_check(bad, 8);
    CHECK(r.unit);
    CHECK(r.commutative);
    CHECK_FALSE(r.associative);
    CHECK(r.failing_degree == 4);

    GradedPotential bad1 = closed_form_potential(kWdvvQuartic);
    bad1.set(1, Poly::monomial(2, {0, 0, 1, 1, 1}));
    CHECK_FALSE(wdvv_check(bad1, 8).pass());
}

TEST_CASE("gw222: four point invariants and homogeneity")
{
    const GradedPotential f = closed_form_potential();
    for (int leg = 1; leg <= 3; ++leg) {
        CHECK(four_point_invariant(f, leg) == make_rational(1, 4));
        CHECK(four_point_invariant(closed_form_potential(kWdvvQuartic), leg) == make_rational(-1, 4));
    }
    std::string why;
    CHECK_MESSAGE(weighted_homogeneous(solve_recursion(8), &why), why);
    GradedPotential bad = f;
    bad.set(3, Poly::constant(1));
    CHECK_FALSE(weighted_homogeneous(bad));

    // (phi_1 * phi_2, phi_3) at t = 0, Q = 1
    CHECK(f.derivative(2).derivative(3).derivative(4).at_zero() == 1);
}
