#include "doctest.h"
#include "fano.hpp"

#include "cusp/cocycle.hpp"

#include <cstdlib>

using namespace cusp;

TEST_CASE("cocycle: kappa and field order")
{
    CHECK(kappa(make_triple(2, 2, 2)) == 4);
    CHECK(kappa(make_triple(1, 2, 2)) == 2);
    CHECK(kappa(make_triple(2, 3, 5)) == 60);
    CHECK(kappa(make_triple(2, 3, 3)) == 12);
    CHECK(field_order(make_triple(2, 2, 2)) == 8);
    CHECK(field_order(make_triple(2, 3, 5)) == 120);
    for (const auto& t : testing_support::fano_triples(8)) {
        const FanoTriple ft = make_triple(t[0], t[1], t[2]);
        const int k = kappa(ft);
        for (int a : t) {
            CHECK(k % a == 0);
        }
        CHECK(field_order(ft) % (2 * k) == 0);
    }
    setenv("CUSP_MAX_CYCLOTOMIC_ORDER", "100", 1);
    CHECK_THROWS_AS(field_order(make_triple(2, 3, 5)), FieldOrderError);
    unsetenv("CUSP_MAX_CYCLOTOMIC_ORDER");
    CHECK(max_cyclotomic_order() == 256);
}

TEST_CASE("cocycle: examples")
{
    const RootSystem rs = RootSystem::build(Orbifold::build(2, 2, 2));
    const auto g1 = rs.simple(rs.node_of(1, 1)).coords;
    const auto g2 = rs.simple(rs.node_of(2, 1)).coords;
    CHECK(sf(rs, g1, g2) + sf(rs, g2, g1) == 0);
    for (const auto& r : rs.finite().roots) {
        CHECK(sf(rs, r, r) == 1);
    }
    for (std::size_t j = 1; j < rs.rank(); ++j) {
        CHECK(upsilon(rs, rs.simple(j).coords) == 1);
    }
    CHECK(upsilon(rs, rs.simple(0).coords) == 1);
    // gamma_b + gamma_{1,1}: one factor of (omega_b|a)(omega_{1,1}|a)
    CHECK(upsilon(rs, std::vector<long>{1, 1, 0, 0}) == -1);
}

TEST_CASE("cocycle: suite over all triples")
{
    auto triples = testing_support::fano_triples(8);
    triples.push_back({2, 3, 5});
    for (const auto& t : triples) {
        const RootSystem rs = RootSystem::build(Orbifold::build(t[0], t[1], t[2]));
        CAPTURE(rs.orbifold().triple().to_string());
        for (const auto& c : cocycle_suite(rs, {100, 7})) {
            CAPTURE(c.identity);
            CAPTURE(c.witness);
            CHECK(c.pass);
        }
    }
}
