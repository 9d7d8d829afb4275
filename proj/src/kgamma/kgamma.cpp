#include "cusp/kgamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cusp {

namespace {

constexpr double kIntegralTol = 1e-9;

long floor_div(long m, long a)
{
    long q = m / a;
    if (m % a != 0 && ((m < 0) != (a < 0))) {
        --q;
    }
    return q;
}

} // namespace

KClass& KClass::operator+=(const KClass& o)
{
    if (c.size() < o.c.size()) {
        c.resize(o.c.size(), 0);
    }
    for (std::size_t i = 0; i < o.c.size(); ++i) {
        c[i] += o.c[i];
    }
    return *this;
}

KClass& KClass::operator-=(const KClass& o)
{
    return *this += -1 * o;
}

KClass operator*(long s, KClass v)
{
    for (auto& x : v.c) {
        x *= s;
    }
    return v;
}

KClass KRing::basis(std::size_t i) const
{
    KClass v(rank());
    v.c[i] = 1;
    return v;
}

KClass KRing::structure_sheaf() const
{
    return basis(0);
}

KClass KRing::line() const
{
    return basis(1);
}

KClass KRing::skyscraper() const
{
    return line() - structure_sheaf();
}

KClass KRing::leg_line(int leg, long m) const
{
    const long a = orb_.a(leg);
    const long q = floor_div(m, a);
    const long r = m - q * a;
    KClass v = q * line() - (q - 1) * structure_sheaf(); // L^q
    if (r != 0) {
        // L_k^r L^q = L_k^r + L^q - O
        v += basis(orb_.index_of(leg, static_cast<int>(r))) - structure_sheaf();
    }
    return v;
}

KClass KRing::basis_product(std::size_t i, std::size_t j) const
{
    if (i == 0) {
        return basis(j);
    }
    if (j == 0) {
        return basis(i);
    }
    const KClass one = structure_sheaf();
    if (i == 1 || j == 1) {
        // L L = 2L - O and L L_k^p = L_k^p + L - O
        return basis(i) + basis(j) - one;
    }
    const auto& li = orb_.labels()[i];
    const auto& lj = orb_.labels()[j];
    if (li.leg != lj.leg) {
        return basis(i) + basis(j) - one;
    }
    return leg_line(li.leg, li.p + lj.p);
}

KClass KRing::multiply(const KClass& u, const KClass& v) const
{
    KClass out(rank());
    for (std::size_t i = 0; i < u.c.size(); ++i) {
        if (u.c[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < v.c.size(); ++j) {
            if (v.c[j] != 0) {
                out += (u.c[i] * v.c[j]) * basis_product(i, j);
            }
        }
    }
    return out;
}

double gamma_function(double x)
{
    if (x <= 0 && std::floor(x) == x) {
        throw std::domain_error("Gamma has a pole at " + std::to_string(x));
    }
    return std::tgamma(x);
}

GammaVector psi(int leg, long m, const Orbifold& orb)
{
    using std::numbers::pi;
    const double chi = orb.chi().get_d();
    const long ak = orb.a(leg);
    GammaVector g;
    g.c.assign(orb.size(), {0.0, 0.0});
    g.c[0] = 1.0;
    g.c[1] = {-std::numbers::egamma * chi, 2 * pi * static_cast<double>(m) / static_cast<double>(ak)};
    for (std::size_t i : orb.twisted()) {
        const auto& lab = orb.labels()[i];
        std::complex<double> phase = 1.0;
        if (lab.leg == leg) {
            const double angle = -2 * pi * static_cast<double>((m * lab.p) % ak) / static_cast<double>(ak);
            phase = std::polar(1.0, angle);
        }
        g.c[i] = gamma_function(orb.degree(i).get_d()) * phase;
    }
    return g;
}

GammaVector psi(const KClass& v, const Orbifold& orb)
{
    GammaVector g;
    g.c.assign(orb.size(), {0.0, 0.0});
    auto accumulate = [&](long coeff, const GammaVector& b) {
        for (std::size_t i = 0; i < g.c.size(); ++i) {
            g.c[i] += static_cast<double>(coeff) * b.c[i];
        }
    };
    for (std::size_t i = 0; i < v.c.size(); ++i) {
        if (v.c[i] == 0) {
            continue;
        }
        if (i == 0) {
            accumulate(v.c[i], psi(1, 0, orb));
        } else if (i == 1) {
            accumulate(v.c[i], psi(1, orb.a(1), orb));
        } else {
            const auto& lab = orb.labels()[i];
            accumulate(v.c[i], psi(lab.leg, lab.p, orb));
        }
    }
    return g;
}

EulerValue euler_pairing(const KClass& v, const KClass& w, const Orbifold& orb)
{
    using std::numbers::pi;
    const GammaVector x = psi(v, orb);
    const GammaVector y = psi(w, orb);
    std::vector<std::complex<double>> z = x.c;
    z[1] += std::complex<double>(0, pi) * orb.chi().get_d() * x.c[0];
    for (std::size_t i = 0; i < z.size(); ++i) {
        z[i] *= std::polar(1.0, pi * (orb.degree(i).get_d() - 0.5));
    }
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const std::size_t j = orb.star(i);
        s += orb.pairing()[i][j].get_d() * z[i] * y.c[j];
    }
    EulerValue out;
    out.value = s / (2 * pi);
    out.nearest = std::lround(out.value.real());
    out.integral = std::abs(out.value - std::complex<double>(static_cast<double>(out.nearest), 0)) < kIntegralTol;
    return out;
}

exactnum::IntMatrix euler_gram(const Orbifold& orb)
{
    const KRing ring(orb);
    const std::size_t n = orb.size();
    exactnum::IntMatrix g(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const EulerValue e = euler_pairing(ring.basis(i), ring.basis(j), orb);
            if (!e.integral) {
                throw std::runtime_error("Euler pairing not integral at (" + std::to_string(i) + ","
                                         + std::to_string(j) + ")");
            }
            g[i][j] = e.nearest;
        }
    }
    return g;
}

CheckList gamma_suite(const RootSystem& rs)
{
    const Orbifold& orb = rs.orbifold();
    const KRing ring(orb);
    CheckList out;

    {
        const EulerValue e = euler_pairing(ring.structure_sheaf(), ring.structure_sheaf(), orb);
        out.push_back({"chi(O, O) = 1", e.integral && e.nearest == 1,
                       e.integral && e.nearest == 1 ? "" : std::to_string(e.value.real())});
    }

    CheckResult table{"chi(V,W) + chi(W,V) = (alpha_{k,m}|alpha_{k',n})", true, {}};
    for (int k = 1; k <= 3; ++k) {
        for (long m = 0; m < orb.a(k); ++m) {
            for (int k2 = 1; k2 <= 3; ++k2) {
                for (long n = 0; n < orb.a(k2); ++n) {
                    const KClass v = ring.leg_line(k, m);
                    const KClass w = ring.leg_line(k2, n);
                    const std::complex<double> sym =
                        euler_pairing(v, w, orb).value + euler_pairing(w, v, orb).value;
                    const long expected = alpha_intersection_table(k, m, k2, n, rs);
                    if (table.pass && std::abs(sym - std::complex<double>(static_cast<double>(expected), 0)) >= kIntegralTol) {
                        table.pass = false;
                        table.witness = "L_" + std::to_string(k) + "^" + std::to_string(m) + ", L_" + std::to_string(k2)
                                        + "^" + std::to_string(n) + ": " + std::to_string(sym.real()) + " vs "
                                        + std::to_string(expected);
                    }
                }
            }
        }
    }
    out.push_back(table);

    try {
        const auto g = euler_gram(orb);
        std::vector<std::vector<exactnum::Integer>> gi(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (long x : g[i]) {
                gi[i].emplace_back(x);
            }
        }
        const exactnum::Integer det = exactnum::int_determinant(gi);
        out.push_back({"|det Euler Gram| = 1", abs(det) == 1, abs(det) == 1 ? "" : det.get_str()});
    } catch (const std::runtime_error& e) {
        out.push_back({"|det Euler Gram| = 1", false, e.what()});
    }

    CheckResult ring_laws{"K-ring associative and commutative", true, {}};
    const std::size_t n = ring.rank();
    for (std::size_t i = 0; i < n && ring_laws.pass; ++i) {
        for (std::size_t j = 0; j < n && ring_laws.pass; ++j) {
            const KClass ij = ring.multiply(ring.basis(i), ring.basis(j));
            if (ij != ring.multiply(ring.basis(j), ring.basis(i))) {
                ring_laws.pass = false;
                ring_laws.witness = "commutativity at " + std::to_string(i) + "," + std::to_string(j);
            }
            for (std::size_t k = 0; k < n; ++k) {
                if (ring.multiply(ij, ring.basis(k))
                    != ring.multiply(ring.basis(i), ring.multiply(ring.basis(j), ring.basis(k)))) {
                    ring_laws.pass = false;
                    ring_laws.witness = "associativity at " + std::to_string(i) + "," + std::to_string(j) + ","
                                        + std::to_string(k);
                    break;
                }
            }
        }
    }
    out.push_back(ring_laws);
    return out;
}

} // namespace cusp
