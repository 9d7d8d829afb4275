#include "cusp/cocycle.hpp"

#include <cstdlib>
#include <numeric>
#include <random>

namespace cusp {

namespace {

int sign_of(long e)
{
    return e % 2 == 0 ? 1 : -1;
}

std::vector<long> add(const std::vector<long>& a, const std::vector<long>& b)
{
    std::vector<long> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}

std::string show(const std::vector<long>& v)
{
    return RootVector(v).to_string();
}

} // namespace

int kappa(const FanoTriple& t)
{
    const long l = std::lcm(std::lcm(static_cast<long>(t.a[0]), static_cast<long>(t.a[1])), static_cast<long>(t.a[2]));
    const Rational prod = t.chi * l;
    const bool even = exactnum::is_integer(prod) && prod.get_num() % 2 == 0;
    return static_cast<int>(even ? l : 2 * l);
}

int max_cyclotomic_order()
{
    if (const char* env = std::getenv("CUSP_MAX_CYCLOTOMIC_ORDER")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<int>(v);
        }
    }
    return 256;
}

int field_order(const FanoTriple& t)
{
    long n = 2L * kappa(t);
    n = std::lcm(n, 2 * t.chi.get_den().get_si());
    for (int a : t.a) {
        n = std::lcm(n, static_cast<long>(a));
    }
    if (n > max_cyclotomic_order()) {
        throw FieldOrderError("cyclotomic order " + std::to_string(n) + " exceeds cap "
                              + std::to_string(max_cyclotomic_order()));
    }
    return static_cast<int>(n);
}

long sf(const RootSystem& rs, const std::vector<long>& a, const std::vector<long>& b)
{
    const Orbifold& orb = rs.orbifold();
    long s = -2 * a[0] * b[0];
    for (int k = 1; k <= 3; ++k) {
        const int ak = orb.a(k);
        auto coord = [&](const std::vector<long>& v, int p) -> long {
            if (p == 0) {
                return v[0];
            }
            return p == ak ? 0 : v[rs.node_of(k, p)];
        };
        for (int p = 0; p < ak; ++p) {
            s += coord(a, p) * (coord(b, p) - coord(b, p + 1));
        }
    }
    return s;
}

int epsilon(const RootSystem& rs, const std::vector<long>& a, const std::vector<long>& b)
{
    return sign_of(sf(rs, a, b));
}

int upsilon(const RootSystem& rs, const std::vector<long>& a)
{
    long legs = 0;
    for (int k = 1; k <= 3; ++k) {
        if (rs.orbifold().a(k) > 1) {
            legs += a[rs.node_of(k, 1)];
        }
    }
    return sign_of(a[0] * legs);
}

CheckList cocycle_suite(const RootSystem& rs, const CocycleOptions& opts)
{
    const std::size_t n = rs.rank();
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> coord(-3, 3);
    auto random_vector = [&] {
        std::vector<long> v(n);
        for (auto& x : v) {
            x = coord(rng);
        }
        return v;
    };

    const int order = rs.sigma_order();
    const Rational chi_order = rs.orbifold().chi() * order;
    const long chi_order_int = chi_order.get_num().get_si();

    std::vector<std::pair<std::vector<long>, std::vector<long>>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            pairs.emplace_back(rs.simple(i).coords, rs.simple(j).coords);
        }
    }
    for (int r = 0; r < opts.random_pairs; ++r) {
        auto a = random_vector();
        pairs.emplace_back(std::move(a), random_vector());
    }

    CheckResult symm{"SF(a,b) + SF(b,a) = (a|b)", true, {}};
    CheckResult swap{"eps(a,b) eps(b,a) = (-1)^(a|b)", true, {}};
    CheckResult bimult{"eps bimultiplicative", true, {}};
    CheckResult diag{"eps(a,a) = (-1)^(|a|^2/2)", true, {}};
    CheckResult zeta{"ups(a) ups(b) eps(a,b) = ups(a+b) eps(sigma a, sigma b)", true, {}};
    CheckResult parity{"prod_m ups(sigma^m a) = (-1)^(chi |sigma| (omega_b|a)^2)", true, {}};
    CheckResult sf_root{"SF(a,a) = 1 on roots", true, {}};

    auto fail = [](CheckResult& c, const std::string& w) {
        if (c.pass) {
            c.pass = false;
            c.witness = w;
        }
    };

    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        const auto& [a, b] = pairs[idx];
        const std::string tag = show(a) + ", " + show(b);
        if (sf(rs, a, b) + sf(rs, b, a) != rs.pair(a, b)) {
            fail(symm, tag);
        }
        if (epsilon(rs, a, b) * epsilon(rs, b, a) != sign_of(rs.pair(a, b))) {
            fail(swap, tag);
        }
        const auto& c = pairs[(idx * 7 + 3) % pairs.size()].first;
        if (epsilon(rs, add(a, b), c) != epsilon(rs, a, c) * epsilon(rs, b, c)
            || epsilon(rs, c, add(a, b)) != epsilon(rs, c, a) * epsilon(rs, c, b)) {
            fail(bimult, tag + ", " + show(c));
        }
        if (epsilon(rs, a, a) != sign_of(rs.pair(a, a) / 2)) {
            fail(diag, show(a));
        }
        int prod = 1;
        for (int m = 1; m <= order; ++m) {
            prod *= upsilon(rs, rs.apply_sigma(a, m));
        }
        if (prod != sign_of(chi_order_int * a[0] * a[0])) {
            fail(parity, show(a));
        }
        const auto sa = rs.apply_sigma(a);
        const auto sb = rs.apply_sigma(b);
        if (upsilon(rs, a) * upsilon(rs, b) * epsilon(rs, a, b) != upsilon(rs, add(a, b)) * epsilon(rs, sa, sb)) {
            fail(zeta, tag);
        }
    }

    for (const auto& r : rs.finite().roots) {
        if (sf(rs, r, r) != 1) {
            fail(sf_root, show(r));
        }
        if (epsilon(rs, r, r) != -1) {
            fail(diag, show(r));
        }
        int prod = 1;
        for (int m = 1; m <= order; ++m) {
            prod *= upsilon(rs, rs.apply_sigma(r, m));
        }
        // sigma_b fixes omega_b, so (omega_b|a) is constant along the orbit
        if (prod != sign_of(chi_order_int * r[0] * r[0])) {
            fail(parity, show(r));
        }
    }
    return {symm, swap, bimult, diag, zeta, parity, sf_root};
}

} // namespace cusp
