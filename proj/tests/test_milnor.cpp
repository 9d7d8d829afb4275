#include "doctest.h"
#include "fano.hpp"

#include "cusp/milnor.hpp"

#include <map>

using namespace cusp;
using exactnum::make_rational;

namespace {

RootSystem system_for(int a1, int a2, int a3)
{
    return RootSystem::build(Orbifold::build(a1, a2, a3));
}

int test_kappa(const Orbifold& o)
{
    const long l = testing_support::lcm3(o.triple().a);
    const Rational prod = o.chi() * l;
    const bool even = exactnum::is_integer(prod) && prod.get_num() % 2 == 0;
    return static_cast<int>(even ? l : 2 * l);
}

// independent root count per ADE type
std::size_t expected_roots(const std::string& type)
{
    const char family = type[0];
    const std::size_t n = std::stoul(type.substr(1));
    if (family == 'A') {
        return n * (n + 1);
    }
    if (family == 'D') {
        return 2 * n * (n - 1);
    }
    static const std::map<std::size_t, std::size_t> e{{6, 72}, {7, 126}, {8, 240}};
    return e.at(n);
}

} // namespace

TEST_CASE("milnor: root system examples")
{
    const RootSystem d4 = system_for(2, 2, 2);
    CHECK(d4.finite().type == "D4");
    CHECK(d4.finite().roots.size() == 24);
    CHECK(d4.finite().positive.size() == 12);
    CHECK(d4.finite().kac_labels == std::vector<long>{2, 1, 1, 1});

    const RootSystem a2 = system_for(1, 1, 2);
    CHECK(a2.finite().type == "A2");
    CHECK(a2.finite().roots.size() == 6);

    const RootSystem e7 = system_for(2, 3, 4);
    CHECK(e7.finite().type == "E7");
    CHECK(e7.finite().roots.size() == 126);
    CHECK(system_for(2, 3, 5).finite().roots.size() == 240);
    CHECK(system_for(2, 3, 3).finite().roots.size() == 72);
}

TEST_CASE("milnor: every Fano triple")
{
    auto triples = testing_support::fano_triples(8);
    for (const auto& t : triples) {
        const RootSystem rs = system_for(t[0], t[1], t[2]);
        CAPTURE(rs.orbifold().triple().to_string());
        const auto& fin = rs.finite();
        CHECK(fin.roots.size() == expected_roots(fin.type));
        CHECK(fin.positive.size() * 2 == fin.roots.size());
        for (const auto& r : fin.roots) {
            CHECK(rs.pair(r, r) == 2);
        }
        for (long k : fin.kac_labels) {
            CHECK(k >= 1);
        }
        // level -1 null vector
        const Orbifold& o = rs.orbifold();
        CHECK(o.intersection_form(rs.level_m1().delta, rs.level_m1().delta).is_zero());
        for (const auto& g : rs.level_m1().simple) {
            CHECK(o.intersection_form(rs.level_m1().delta, g).is_zero());
        }

        const AffineSignature sig = affine_signature(rs);
        CHECK(sig.finite_block_positive);
        CHECK(sig.rank == rs.rank());
        CHECK(sig.kernel_is_delta);

        // sigma_b is an isometry of finite order lcm(a)
        const IntMatrix& s = rs.sigma();
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            for (std::size_t j = 0; j < rs.rank(); ++j) {
                std::vector<long> ei(rs.rank(), 0);
                std::vector<long> ej(rs.rank(), 0);
                ei[i] = 1;
                ej[j] = 1;
                CHECK(rs.pair(rs.apply_sigma(ei), rs.apply_sigma(ej)) == rs.cartan()[i][j]);
            }
        }
        CHECK(rs.sigma_order() == testing_support::lcm3(t));
        (void)s;

        // affine action on the branch node and legs
        std::vector<long> zero(rs.rank(), 0);
        RootVector expected = rs.simple(0);
        for (int k = 1; k <= 3; ++k) {
            if (o.a(k) > 1) {
                expected += rs.simple(rs.node_of(k, 1));
            }
        }
        expected.imag = rs.nonempty_legs() - 2;
        CHECK(rs.sigma_affine_inverse(rs.simple(0)) == expected);
        for (int k = 1; k <= 3; ++k) {
            for (int p = 2; p < o.a(k); ++p) {
                CHECK(rs.sigma_affine(rs.simple(rs.node_of(k, p))) == rs.simple(rs.node_of(k, p - 1)));
            }
            if (o.a(k) > 1) {
                RootVector img(zero, -1);
                for (int p = 1; p < o.a(k); ++p) {
                    img -= rs.simple(rs.node_of(k, p));
                }
                img.imag = -1;
                CHECK(rs.sigma_affine(rs.simple(rs.node_of(k, 1))) == img);
            }
        }
        CHECK(rs.sigma_affine(rs.delta()) == rs.delta());
    }
}

TEST_CASE("milnor: conjugacy example")
{
    const RootSystem rs = system_for(2, 2, 3);
    const auto v = rs.apply_sigma(rs.simple(rs.node_of(3, 2)).coords);
    CHECK(v == rs.simple(rs.node_of(3, 1)).coords);
    CHECK(system_for(1, 1, 1).sigma() == IntMatrix{{1}});
}

TEST_CASE("milnor: weights")
{
    const Weights w = fundamental_weights(system_for(2, 2, 2));
    CHECK(w.omega[0] == std::vector<Rational>{2, 1, 1, 1});
    for (const auto& t : testing_support::fano_triples(8)) {
        const RootSystem rs = system_for(t[0], t[1], t[2]);
        const Weights wt = fundamental_weights(rs);
        CHECK(wt.omega[0][0] == 1 / rs.orbifold().chi());
        // (omega_j | gamma_m) = delta_jm
        for (std::size_t j = 0; j < rs.rank(); ++j) {
            for (std::size_t m = 0; m < rs.rank(); ++m) {
                Rational s = 0;
                for (std::size_t i = 0; i < rs.rank(); ++i) {
                    s += wt.omega[j][i] * rs.cartan()[i][m];
                }
                CHECK(s == (j == m ? 1 : 0));
            }
        }
        // (rho_b | gamma) matches the closed form on simple roots
        for (std::size_t m = 0; m < rs.rank(); ++m) {
            Rational s = 0;
            for (std::size_t i = 0; i < rs.rank(); ++i) {
                s += wt.rho_b[i] * rs.cartan()[i][m];
            }
            CHECK(s == rs.rho_b_pair(rs.simple(m).coords));
        }
    }
}

TEST_CASE("milnor: eigenbasis")
{
    for (const auto& t : testing_support::fano_triples(8)) {
        const RootSystem rs = system_for(t[0], t[1], t[2]);
        const Orbifold& o = rs.orbifold();
        const int kappa = test_kappa(o);
        CAPTURE(o.triple().to_string());
        const EigenData ed = coxeter_sigma(rs, kappa);
        CHECK(ed.exponents[0] == 0);
        CHECK(ed.exponents[1] == kappa);
        for (std::size_t i : o.twisted()) {
            CHECK(ed.lines[i].eigenvalue == CycloNumber::exp_2pi_i(o.degree(i)));
            CHECK(ed.exponents[i] == o.degree(o.star(i)) * kappa);
            // eta^{m_i} is the eigenvalue of sigma_b^{-1}
            CHECK(CycloNumber::exp_2pi_i(ed.exponents[i] / kappa) == ed.lines[i].eigenvalue.conj());
        }
    }
    const RootSystem d4 = system_for(2, 2, 2);
    const EigenData ed = coxeter_sigma(d4, 4);
    CHECK(ed.order == 2);
    for (std::size_t i : d4.orbifold().twisted()) {
        CHECK(ed.lines[i].eigenvalue == CycloNumber(-1L));
        CHECK(ed.exponents[i] == 2);
    }
    CHECK_THROWS_AS(coxeter_sigma(d4, 3), std::invalid_argument);
}

TEST_CASE("milnor: (1 - sigma_k)^-1")
{
    const RootSystem rs = system_for(2, 3, 5);
    const auto m2 = sigma_inverse_entries(1, rs);
    CHECK(m2.size() == 1);
    CHECK(m2[0][0] == make_rational(1, 2));
    const auto m3 = sigma_inverse_entries(2, rs);
    CHECK(m3[0][1] == make_rational(1, 3));
    CHECK(m3[1][0] == make_rational(-1, 3));
    CHECK(sigma_inverse_entries(3, rs).size() == 4);
    CHECK_THROWS_AS(sigma_inverse_entries(1, system_for(1, 2, 2)), std::invalid_argument);
}

TEST_CASE("milnor: alpha_{k,m} cycles")
{
    for (const auto& t : testing_support::fano_triples(6)) {
        const RootSystem rs = system_for(t[0], t[1], t[2]);
        const Orbifold& o = rs.orbifold();
        CAPTURE(o.triple().to_string());
        for (int k = 1; k <= 3; ++k) {
            const int a = o.a(k);
            CHECK(alpha_km(k, 0, 0, rs) == rs.level0().simple[0]);
            CHECK(alpha_km(k, 0, -1, rs) == rs.level_m1().simple[0]);
            for (int p = 1; p < a; ++p) {
                const std::size_t node = rs.node_of(k, p);
                CHECK(alpha_km(k, -p, 0, rs) - alpha_km(k, -p + 1, 0, rs) == rs.level0().simple[node]);
                CHECK(alpha_km(k, -p, -1, rs) - alpha_km(k, -p + 1, -1, rs) == rs.level_m1().simple[node]);
            }
            CHECK(alpha_km(k, a, -1, rs) - alpha_km(k, 0, -1, rs) == rs.level_m1().delta);
            for (long m = -a; m <= 2 * a; ++m) {
                const RootVector root = alpha_km_root(k, m, rs);
                CHECK(rs.image0(root) == alpha_km(k, m, 0, rs));
                CHECK(rs.image_m1(root) == alpha_km(k, m, -1, rs));
            }
            for (int k2 = 1; k2 <= 3; ++k2) {
                for (long m = 0; m < a; ++m) {
                    for (long n = 0; n < o.a(k2); ++n) {
                        const long table = alpha_intersection_table(k, m, k2, n, rs);
                        CHECK(rs.pair(alpha_km_root(k, m, rs), alpha_km_root(k2, n, rs)) == table);
                        const Rational form =
                            o.intersection_form(alpha_km(k, m, -1, rs), alpha_km(k2, n, -1, rs)).pure_part().to_rational();
                        CHECK(form == table);
                    }
                }
            }
        }
    }
}

TEST_CASE("milnor: roots suite")
{
    for (const auto& t : testing_support::fano_triples(8)) {
        const RootSystem rs = system_for(t[0], t[1], t[2]);
        for (const auto& chk : roots_suite(rs, test_kappa(rs.orbifold()))) {
            CHECK_MESSAGE(chk.pass, (rs.orbifold().triple().to_string() + " " + chk.identity + ": " + chk.witness));
        }
    }
    const RootSystem e8 = system_for(2, 3, 5);
    CHECK(all_pass(roots_suite(e8, 60)));
    // kappa must be a multiple of |sigma_b|
    const CheckList bad = roots_suite(system_for(2, 2, 2), 3);
    CHECK_FALSE(all_pass(bad));
}
