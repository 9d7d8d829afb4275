#include "cusp/milnor.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cusp {

using exactnum::make_rational;

namespace {

constexpr std::size_t kOrbitBound = 10000;

long height(const std::vector<long>& v)
{
    return std::accumulate(v.begin(), v.end(), 0L);
}

bool root_order(const std::vector<long>& a, const std::vector<long>& b)
{
    const long ha = height(a);
    const long hb = height(b);
    return ha != hb ? ha < hb : a < b;
}

IntMatrix int_identity(std::size_t n)
{
    IntMatrix m(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
    }
    return m;
}

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b)
{
    const std::size_t n = a.size();
    IntMatrix r(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return r;
}

IntMatrix int_inverse(const IntMatrix& m)
{
    const RationalMatrix inv = exactnum::inverse(exactnum::to_rational(m));
    IntMatrix r(m.size(), std::vector<long>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (!exactnum::is_integer(inv[i][j])) {
                throw std::logic_error("matrix is not unimodular");
            }
            r[i][j] = inv[i][j].get_num().get_si();
        }
    }
    return r;
}

std::vector<long> mat_apply(const IntMatrix& m, const std::vector<long>& v)
{
    std::vector<long> r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            r[i] += m[i][j] * v[j];
        }
    }
    return r;
}

CohVector combine(const std::vector<CohVector>& basis, const std::vector<CycloNumber>& coeffs, std::size_t dim)
{
    CohVector out(dim);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (!coeffs[j].is_zero()) {
            out += SymbolicSum(coeffs[j]) * basis[j];
        }
    }
    return out;
}

IntMatrix gram_of(const Orbifold& orb, const std::vector<CohVector>& vs, bool level0)
{
    IntMatrix g(vs.size(), std::vector<long>(vs.size(), 0));
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = 0; j < vs.size(); ++j) {
            const SymbolicSum s = level0 ? orb.intersection_form_level0(vs[i], vs[j])
                                         : orb.intersection_form(vs[i], vs[j]);
            if (!s.is_pure()) {
                throw std::logic_error("Gram entry not a number: " + s.to_string());
            }
            const Rational q = s.pure_part().to_rational();
            if (!exactnum::is_integer(q)) {
                throw std::logic_error("Gram entry not an integer: " + q.get_str());
            }
            g[i][j] = q.get_num().get_si();
        }
    }
    return g;
}

} // namespace

RootVector& RootVector::operator+=(const RootVector& o)
{
    if (coords.size() < o.coords.size()) {
        coords.resize(o.coords.size(), 0);
    }
    for (std::size_t i = 0; i < o.coords.size(); ++i) {
        coords[i] += o.coords[i];
    }
    imag += o.imag;
    return *this;
}

RootVector& RootVector::operator-=(const RootVector& o)
{
    return *this += -o;
}

RootVector RootVector::operator-() const
{
    RootVector r = *this;
    for (auto& x : r.coords) {
        x = -x;
    }
    r.imag = -imag;
    return r;
}

RootVector operator*(long s, RootVector v)
{
    for (auto& x : v.coords) {
        x *= s;
    }
    v.imag *= s;
    return v;
}

std::string RootVector::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        out += (i ? "," : "") + std::to_string(coords[i]);
    }
    out += ")";
    if (imag != 0) {
        out += (imag > 0 ? "+" : "") + std::to_string(imag) + "d";
    }
    return out;
}

RootSystem RootSystem::build(const Orbifold& orb)
{
    RootSystem rs;
    rs.orb_ = orb;
    const std::size_t n = orb.size() - 1;
    rs.node_leg_.assign(n, 0);
    for (std::size_t j = 1; j < n; ++j) {
        rs.node_leg_[j] = orb.labels()[j + 1].leg;
    }

    // branching diagram: gamma_b joined to each (k,1); (k,p) joined to (k,p+1)
    rs.cartan_.assign(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        rs.cartan_[i][i] = 2;
    }
    for (int k = 1; k <= 3; ++k) {
        for (int p = 1; p < orb.a(k); ++p) {
            const std::size_t j = rs.node_of(k, p);
            const std::size_t prev = p == 1 ? 0 : rs.node_of(k, p - 1);
            rs.cartan_[j][prev] = rs.cartan_[prev][j] = -1;
        }
    }
    rs.cartan_inv_ = exactnum::inverse(exactnum::to_rational(rs.cartan_));

    // simple roots at levels 0 and -1
    const SymbolicSum pi = SymbolicSum::pi();
    const SymbolicSum logq = SymbolicSum::logq();
    rs.level0_.level = 0;
    rs.level_m1_.level = -1;
    CohVector gb0 = orb.zero();
    CohVector gb1 = orb.zero();
    gb0[0] = SymbolicSum(1L);
    gb0[1] = SymbolicSum(orb.chi());
    gb1[0] = SymbolicSum(1L);
    gb1[1] = -logq;
    for (std::size_t i : orb.twisted()) {
        gb0[i] = SymbolicSum(1L);
        gb1[i] = SymbolicSum(1 / orb.degree(i));
    }
    rs.level0_.simple.push_back(gb0);
    rs.level_m1_.simple.push_back(gb1);
    for (std::size_t j = 1; j < n; ++j) {
        const auto& lab = orb.labels()[j + 1];
        const int k = lab.leg;
        const int p = lab.p;
        const int ak = orb.a(k);
        CohVector g0 = orb.zero();
        CohVector g1 = orb.zero();
        g1[1] = SymbolicSum(make_rational(-1, ak)) * pi;
        for (int m = 1; m < ak; ++m) {
            const std::size_t idx = orb.index_of(k, m);
            const CycloNumber c = exactnum::cyclo(ak, static_cast<long>(m) * p)
                                  - exactnum::cyclo(ak, static_cast<long>(m) * (p - 1));
            g0[idx] = SymbolicSum(c);
            g1[idx] = SymbolicSum(c * CycloNumber(1 / orb.degree(idx)));
        }
        rs.level0_.simple.push_back(g0);
        rs.level_m1_.simple.push_back(g1);
    }
    rs.level0_.delta = orb.zero();
    rs.level_m1_.delta = orb.zero();
    rs.level_m1_.delta[1] = pi;
    rs.level0_.gram = gram_of(orb, rs.level0_.simple, true);
    rs.level_m1_.gram = gram_of(orb, rs.level_m1_.simple, false);
    if (rs.level0_.gram != rs.cartan_ || rs.level_m1_.gram != rs.cartan_) {
        throw std::logic_error("simple-root Gram matrix does not match the branching diagram");
    }

    // finite roots by reflection closure
    std::set<std::vector<long>> seen;
    std::deque<std::vector<long>> queue;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<long> e(n, 0);
        e[j] = 1;
        queue.push_back(e);
        seen.insert(e);
    }
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < n; ++j) {
            auto w = rs.reflect(j, v);
            if (seen.insert(w).second) {
                if (seen.size() > kOrbitBound) {
                    throw std::runtime_error("root orbit exceeds 10^4 vectors");
                }
                queue.push_back(std::move(w));
            }
        }
    }
    auto& fin = rs.finite_;
    fin.roots.assign(seen.begin(), seen.end());
    std::sort(fin.roots.begin(), fin.roots.end(), root_order);
    for (const auto& r : fin.roots) {
        if (std::all_of(r.begin(), r.end(), [](long x) { return x >= 0; })) {
            fin.positive.push_back(r);
        }
    }
    fin.highest = fin.positive.back();
    fin.kac_labels = fin.highest;
    const auto& a = orb.triple().a;
    const char family = a[0] == 1 ? 'A' : (a[1] == 2 ? 'D' : 'E');
    fin.type = std::string(1, family) + std::to_string(n);

    // sigma_b = prod_k s_{k,a_k-1} ... s_{k,1}, rightmost applied first
    rs.sigma_.assign(n, std::vector<long>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<long> v(n, 0);
        v[j] = 1;
        for (int k = 1; k <= 3; ++k) {
            for (int p = 1; p < orb.a(k); ++p) {
                v = rs.reflect(rs.node_of(k, p), v);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            rs.sigma_[i][j] = v[i];
        }
    }
    rs.sigma_inv_ = int_inverse(rs.sigma_);
    IntMatrix power = rs.sigma_;
    rs.sigma_order_ = 1;
    while (power != int_identity(n)) {
        power = int_multiply(power, rs.sigma_);
        ++rs.sigma_order_;
        if (rs.sigma_order_ > 100000) {
            throw std::logic_error("sigma_b has no finite order");
        }
    }

    // affine action: sigma(g_{k,p}) = g_{k,p-1}, sigma(g_{k,1}) = -sum_p g_{k,p} - delta,
    // sigma(g_b) = g_b + sum g_{k,p} + 2 delta, sigma(delta) = delta
    rs.sigma_affine_.assign(n + 1, std::vector<long>(n + 1, 0));
    rs.sigma_affine_[n][n] = 1;
    rs.sigma_affine_[0][0] = 1;
    rs.sigma_affine_[n][0] = 2;
    for (std::size_t j = 1; j < n; ++j) {
        rs.sigma_affine_[j][0] = 1;
    }
    for (int k = 1; k <= 3; ++k) {
        for (int p = 1; p < orb.a(k); ++p) {
            const std::size_t j = rs.node_of(k, p);
            if (p >= 2) {
                rs.sigma_affine_[rs.node_of(k, p - 1)][j] = 1;
            } else {
                for (int q = 1; q < orb.a(k); ++q) {
                    rs.sigma_affine_[rs.node_of(k, q)][j] = -1;
                }
                rs.sigma_affine_[n][j] = -1;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (rs.sigma_affine_[i][j] != rs.sigma_[i][j]) {
                throw std::logic_error("affine monodromy table disagrees with sigma_b");
            }
        }
    }
    rs.sigma_affine_inv_ = int_inverse(rs.sigma_affine_);
    return rs;
}

std::size_t RootSystem::node_of(int leg, int p) const
{
    return orb_.index_of(leg, p) - 1;
}

long RootSystem::pair(const std::vector<long>& u, const std::vector<long>& v) const
{
    long s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < v.size(); ++j) {
            s += u[i] * cartan_[i][j] * v[j];
        }
    }
    return s;
}

std::vector<long> RootSystem::reflect(std::size_t node, const std::vector<long>& v) const
{
    long c = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        c += v[i] * cartan_[i][node];
    }
    std::vector<long> w = v;
    w[node] -= c;
    return w;
}

RootVector RootSystem::simple(std::size_t node) const
{
    std::vector<long> e(rank(), 0);
    e[node] = 1;
    return RootVector(e);
}

RootVector RootSystem::delta() const
{
    return RootVector(std::vector<long>(rank(), 0), 1);
}

CohVector RootSystem::image0(const RootVector& v) const
{
    std::vector<CycloNumber> c(v.coords.begin(), v.coords.end());
    return combine(level0_.simple, c, orb_.size());
}

CohVector RootSystem::image_m1(const RootVector& v) const
{
    std::vector<CycloNumber> c(v.coords.begin(), v.coords.end());
    CohVector out = combine(level_m1_.simple, c, orb_.size());
    if (v.imag != 0) {
        out += SymbolicSum(v.imag) * level_m1_.delta;
    }
    return out;
}

std::vector<long> RootSystem::apply_sigma(const std::vector<long>& v, long power) const
{
    const IntMatrix& m = power >= 0 ? sigma_ : sigma_inv_;
    long steps = power >= 0 ? power : -power;
    steps %= sigma_order_;
    std::vector<long> w = v;
    for (long s = 0; s < steps; ++s) {
        w = mat_apply(m, w);
    }
    return w;
}

RootVector RootSystem::sigma_affine(const RootVector& v) const
{
    std::vector<long> ext = v.coords;
    ext.push_back(v.imag);
    auto w = mat_apply(sigma_affine_, ext);
    const long n = w.back();
    w.pop_back();
    return RootVector(w, n);
}

RootVector RootSystem::sigma_affine_inverse(const RootVector& v) const
{
    std::vector<long> ext = v.coords;
    ext.push_back(v.imag);
    auto w = mat_apply(sigma_affine_inv_, ext);
    const long n = w.back();
    w.pop_back();
    return RootVector(w, n);
}

Rational RootSystem::rho_b_pair(const std::vector<long>& v) const
{
    Rational s = 0;
    for (std::size_t j = 1; j < v.size(); ++j) {
        if (v[j] != 0) {
            s -= make_rational(v[j], orb_.a(node_leg_[j]));
        }
    }
    return s;
}

int RootSystem::nonempty_legs() const
{
    int count = 0;
    for (int ak : orb_.triple().a) {
        count += ak > 1 ? 1 : 0;
    }
    return count;
}

RationalMatrix affine_gram(const RootSystem& rs)
{
    const std::size_t n = rs.rank();
    const auto& theta = rs.finite().highest;
    RootVector g0(std::vector<long>(n, 0), 1);
    for (std::size_t j = 0; j < n; ++j) {
        g0.coords[j] = -theta[j];
    }
    std::vector<CohVector> vs{rs.image_m1(g0)};
    for (std::size_t j = 0; j < n; ++j) {
        vs.push_back(rs.image_m1(rs.simple(j)));
    }
    RationalMatrix g(n + 1, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            g[i][j] = rs.orbifold().intersection_form(vs[i], vs[j]).pure_part().to_rational();
        }
    }
    return g;
}

AffineSignature affine_signature(const RootSystem& rs)
{
    const RationalMatrix g = affine_gram(rs);
    const std::size_t n = rs.rank();
    AffineSignature sig;
    // Sylvester: leading minors of the finite block
    sig.finite_block_positive = true;
    for (std::size_t m = 1; m <= n; ++m) {
        RationalMatrix minor(m, std::vector<Rational>(m));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                minor[i][j] = g[i + 1][j + 1];
            }
        }
        if (exactnum::determinant(minor) <= 0) {
            sig.finite_block_positive = false;
        }
    }
    sig.rank = exactnum::rank(g);
    const auto ker = exactnum::kernel(g);
    if (ker.size() == 1) {
        const auto& v = ker[0];
        std::vector<Rational> expected{Rational(1)};
        for (long k : rs.finite().kac_labels) {
            expected.emplace_back(k);
        }
        bool proportional = v[0] != 0;
        for (std::size_t i = 0; i <= n && proportional; ++i) {
            proportional = v[i] * expected[0] == expected[i] * v[0];
        }
        sig.kernel_is_delta = proportional;
    }
    return sig;
}

Weights fundamental_weights(const RootSystem& rs)
{
    const std::size_t n = rs.rank();
    const Orbifold& orb = rs.orbifold();
    const RationalMatrix& cinv = rs.cartan_inverse();
    Weights w;
    w.omega = cinv;
    w.rho_b.assign(n, Rational(0));
    for (std::size_t j = 1; j < n; ++j) {
        const Rational inv_a = make_rational(1, orb.leg_order(rs.orbifold_index(j)));
        for (std::size_t i = 0; i < n; ++i) {
            w.rho_b[i] -= inv_a * w.omega[j][i];
        }
    }
    w.kac_labels = rs.finite().kac_labels;

    const Rational& chi = orb.chi();
    if (cinv[0][0] != 1 / chi) {
        throw std::logic_error("(omega_b|omega_b) != 1/chi");
    }
    for (std::size_t j = 1; j < n; ++j) {
        // (omega_{k,p} | chi omega_b) = d_{k,p}
        if (chi * cinv[j][0] != orb.degree(rs.orbifold_index(j))) {
            throw std::logic_error("(omega_{k,p}|chi omega_b) != d_{k,p}");
        }
    }
    // pi_0(gamma_b) = chi omega_b and pi_*(gamma_b) = gamma_b - chi omega_b = -sum d_i gamma_i
    for (std::size_t j = 0; j < n; ++j) {
        const Rational proj = chi * cinv[0][j];
        const Rational rest = (j == 0 ? Rational(1) : Rational(0)) - proj;
        const Rational expected = j == 0 ? Rational(0) : Rational(-orb.degree(rs.orbifold_index(j)));
        if (rest != expected) {
            throw std::logic_error("pi_*(gamma_b) != -sum d_i gamma_i");
        }
    }
    return w;
}

namespace {

std::vector<CycloNumber> weight_combination(const Weights& w, const std::vector<CycloNumber>& coeffs)
{
    const std::size_t n = w.omega.size();
    std::vector<CycloNumber> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (coeffs[j].is_zero()) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (w.omega[j][i] != 0) {
                out[i] += coeffs[j] * CycloNumber(w.omega[j][i]);
            }
        }
    }
    return out;
}

std::vector<CycloNumber> apply_cyclo(const IntMatrix& m, const std::vector<CycloNumber>& v)
{
    std::vector<CycloNumber> r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (m[i][j] != 0 && !v[j].is_zero()) {
                r[i] += CycloNumber(m[i][j]) * v[j];
            }
        }
    }
    return r;
}

} // namespace

EigenData coxeter_sigma(const RootSystem& rs, int kappa)
{
    const Orbifold& orb = rs.orbifold();
    const std::size_t n = rs.rank();
    const std::size_t dim = orb.size();
    if (kappa <= 0 || kappa % rs.sigma_order() != 0) {
        throw std::invalid_argument("kappa must be a positive multiple of |sigma_b|");
    }
    const Weights w = fundamental_weights(rs);
    EigenData ed;
    ed.sigma = rs.sigma();
    ed.order = rs.sigma_order();
    ed.kappa = kappa;
    ed.lines.resize(dim);
    ed.exponents.resize(dim);

    // H_0 on omega_b
    std::vector<CycloNumber> wb(n);
    for (std::size_t i = 0; i < n; ++i) {
        wb[i] = CycloNumber(w.omega[0][i]);
    }
    CohVector h0 = combine(rs.level0().simple, wb, dim);
    CohVector expected_h0 = orb.zero();
    expected_h0[0] = SymbolicSum(1 / orb.chi());
    expected_h0[1] = SymbolicSum(1L);
    if (!(h0 == expected_h0)) {
        throw std::logic_error("omega_b level-0 image is not 1/chi + P");
    }
    if (apply_cyclo(rs.sigma(), wb) != wb) {
        throw std::logic_error("sigma_b does not fix omega_b");
    }
    for (std::size_t i : {std::size_t{0}, std::size_t{1}}) {
        ed.lines[i] = EigenLine{h0, Rational(kappa) * orb.chi(), CycloNumber(1L)};
    }
    ed.exponents[0] = 0;
    ed.exponents[1] = kappa;

    // a_k phi_{k,p*} = omega_b + sum_m (zeta^{mp} - zeta^{(m-1)p}) omega_{k,m}
    for (std::size_t idx : orb.twisted()) {
        const auto& lab = orb.labels()[idx];
        const int k = lab.leg;
        const int ak = orb.a(k);
        const int pstar = ak - lab.p;
        std::vector<CycloNumber> c(n);
        c[0] = CycloNumber(1L);
        for (int m = 1; m < ak; ++m) {
            c[rs.node_of(k, m)] = exactnum::cyclo(ak, static_cast<long>(m) * pstar)
                                  - exactnum::cyclo(ak, static_cast<long>(m - 1) * pstar);
        }
        const CycloNumber inv_a(make_rational(1, ak));
        for (auto& x : c) {
            x *= inv_a;
        }
        std::vector<CycloNumber> coords = weight_combination(w, c);
        CohVector base = combine(rs.level0().simple, coords, dim);
        if (!(base == orb.basis(idx))) {
            throw std::logic_error("weight identity for phi_" + lab.name() + " failed");
        }
        CohVector moved = combine(rs.level0().simple, apply_cyclo(rs.sigma(), coords), dim);
        const CycloNumber ev = moved[idx].pure_part();
        if (!(moved == SymbolicSum(ev) * base)) {
            throw std::logic_error("phi_" + lab.name() + " is not a sigma_b eigenvector");
        }
        ed.lines[idx] = EigenLine{base, Rational(static_cast<long>(kappa) * ak), ev};
        ed.exponents[idx] = orb.degree(orb.star(idx)) * kappa;
    }

    // squared normalization (H_i|H_j)^2 = kappa^2 delta_{i,j*}, with 01 and 02 merged
    std::vector<std::size_t> reps{0};
    for (std::size_t idx : orb.twisted()) {
        reps.push_back(idx);
    }
    for (std::size_t i : reps) {
        for (std::size_t j : reps) {
            const Rational f = orb.intersection_form_level0(ed.lines[i].base, ed.lines[j].base)
                                   .pure_part()
                                   .to_rational();
            const bool dual = (i == 0 && j == 0) || (i != 0 && orb.star(i) == j);
            const Rational lhs = f * f * ed.lines[i].scale_sq * ed.lines[j].scale_sq;
            const Rational rhs = dual ? Rational(static_cast<long>(kappa) * kappa) : Rational(0);
            if (lhs != rhs || (dual && f <= 0)) {
                throw std::logic_error("eigenbasis normalization failed");
            }
        }
    }
    return ed;
}

RationalMatrix sigma_inverse_entries(int leg, const RootSystem& rs)
{
    const int ak = rs.orbifold().a(leg);
    if (ak < 2) {
        throw std::invalid_argument("sigma_inverse_entries needs a_k >= 2");
    }
    const std::size_t m = static_cast<std::size_t>(ak - 1);
    RationalMatrix one_minus(m, std::vector<Rational>(m));
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = 0; q < m; ++q) {
            const long s = rs.sigma()[rs.node_of(leg, static_cast<int>(p + 1))][rs.node_of(leg, static_cast<int>(q + 1))];
            one_minus[p][q] = Rational((p == q ? 1 : 0) - s);
        }
    }
    RationalMatrix inv = exactnum::inverse(one_minus);
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = 0; q < m; ++q) {
            const Rational closed = make_rational(static_cast<long>(p + 1), ak) - (p > q ? 1 : 0);
            if (inv[p][q] != closed) {
                throw std::logic_error("(1-sigma_k)^{-1} entry mismatch");
            }
        }
    }
    return inv;
}

RootVector alpha_km_root(int leg, long m, const RootSystem& rs)
{
    const long ak = rs.orbifold().a(leg);
    const long p = (((-m) % ak) + ak) % ak;
    const long t = (m + p) / ak;
    RootVector v = rs.simple(0);
    for (long q = 1; q <= p; ++q) {
        v.coords[rs.node_of(leg, static_cast<int>(q))] += 1;
    }
    v.imag = t;
    return v;
}

CohVector alpha_km(int leg, long m, int level, const RootSystem& rs)
{
    const Orbifold& orb = rs.orbifold();
    const int ak = orb.a(leg);
    CohVector v = orb.zero();
    v[0] = SymbolicSum(1L);
    if (level == 0) {
        v[1] = SymbolicSum(orb.chi());
    } else if (level == -1) {
        v[1] = SymbolicSum(make_rational(m, ak)) * SymbolicSum::pi() - SymbolicSum::logq();
    } else {
        throw std::invalid_argument("alpha_km images are provided at levels 0 and -1");
    }
    for (std::size_t idx : orb.twisted()) {
        const auto& lab = orb.labels()[idx];
        CycloNumber c = lab.leg == leg ? exactnum::cyclo(ak, -m * lab.p) : CycloNumber(1L);
        if (level == -1) {
            c *= CycloNumber(1 / orb.degree(idx));
        }
        v[idx] = SymbolicSum(c);
    }
    return v;
}

long alpha_intersection_table(int k, long m, int k2, long n, const RootSystem& rs)
{
    const long a1 = rs.orbifold().a(k);
    const long a2 = rs.orbifold().a(k2);
    const bool m0 = m % a1 == 0;
    const bool n0 = n % a2 == 0;
    if (k == k2) {
        return (m - n) % a1 == 0 ? 2 : 1;
    }
    if (m0 && n0) {
        return 2;
    }
    if (!m0 && !n0) {
        return 0;
    }
    return 1;
}


namespace {

std::size_t ade_root_count(const std::string& type)
{
    const char family = type[0];
    const std::size_t n = std::stoul(type.substr(1));
    if (family == 'A') {
        return n * (n + 1);
    }
    if (family == 'D') {
        return 2 * n * (n - 1);
    }
    switch (n) {
    case 6:
        return 72;
    case 7:
        return 126;
    case 8:
        return 240;
    default:
        return 0;
    }
}

template <class F>
CheckResult guarded(const std::string& identity, F&& body)
{
    try {
        std::string why = body();
        return {identity, why.empty(), why};
    } catch (const std::exception& e) {
        return {identity, false, e.what()};
    }
}

} // namespace

CheckList roots_suite(const RootSystem& rs, int kappa)
{
    const Orbifold& orb = rs.orbifold();
    const auto& fin = rs.finite();
    const std::size_t n = rs.rank();
    CheckList out;

    out.push_back(guarded("root count matches " + fin.type, [&]() -> std::string {
        if (fin.roots.size() != ade_root_count(fin.type) || 2 * fin.positive.size() != fin.roots.size()) {
            return std::to_string(fin.roots.size()) + " roots, " + std::to_string(fin.positive.size()) + " positive";
        }
        for (const auto& r : fin.roots) {
            if (rs.pair(r, r) != 2) {
                return "norm of " + RootVector(r).to_string();
            }
        }
        return {};
    }));

    out.push_back(guarded("affine Gram PSD, rank N, kernel = delta", [&]() -> std::string {
        const AffineSignature s = affine_signature(rs);
        if (!s.finite_block_positive || s.rank != n || !s.kernel_is_delta) {
            return "positive " + std::to_string(s.finite_block_positive) + ", rank " + std::to_string(s.rank)
                   + ", kernel delta " + std::to_string(s.kernel_is_delta);
        }
        return {};
    }));

    out.push_back(guarded("sigma_b isometry of order lcm(a)", [&]() -> std::string {
        const auto& a = orb.triple().a;
        const long l = std::lcm(std::lcm(static_cast<long>(a[0]), static_cast<long>(a[1])), static_cast<long>(a[2]));
        if (rs.sigma_order() != l) {
            return "order " + std::to_string(rs.sigma_order());
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<long> ei(n, 0);
                std::vector<long> ej(n, 0);
                ei[i] = 1;
                ej[j] = 1;
                if (rs.pair(rs.apply_sigma(ei), rs.apply_sigma(ej)) != rs.cartan()[i][j]) {
                    return "pairing at " + std::to_string(i) + "," + std::to_string(j);
                }
            }
        }
        return {};
    }));

    out.push_back(guarded("affine sigma table on gamma_b, gamma_{k,p}, delta", [&]() -> std::string {
        const std::vector<long> zero(n, 0);
        RootVector up = rs.simple(0);
        RootVector down = rs.simple(0);
        for (int k = 1; k <= 3; ++k) {
            for (int p = 1; p < orb.a(k); ++p) {
                up += rs.simple(rs.node_of(k, p));
            }
            if (orb.a(k) > 1) {
                down += rs.simple(rs.node_of(k, 1));
            }
        }
        up.imag = 2;
        down.imag = rs.nonempty_legs() - 2;
        if (!(rs.sigma_affine(rs.simple(0)) == up)) {
            return "sigma(gamma_b) = " + rs.sigma_affine(rs.simple(0)).to_string();
        }
        if (!(rs.sigma_affine_inverse(rs.simple(0)) == down)) {
            return "sigma^-1(gamma_b) = " + rs.sigma_affine_inverse(rs.simple(0)).to_string();
        }
        for (int k = 1; k <= 3; ++k) {
            RootVector first(zero, -1);
            for (int p = 1; p < orb.a(k); ++p) {
                const RootVector g = rs.simple(rs.node_of(k, p));
                first -= g;
                if (p >= 2 && !(rs.sigma_affine(g) == rs.simple(rs.node_of(k, p - 1)))) {
                    return "sigma(gamma_" + std::to_string(k) + "," + std::to_string(p) + ")";
                }
            }
            if (orb.a(k) > 1 && !(rs.sigma_affine(rs.simple(rs.node_of(k, 1))) == first)) {
                return "sigma(gamma_" + std::to_string(k) + ",1)";
            }
        }
        if (!(rs.sigma_affine(rs.delta()) == rs.delta())) {
            return "sigma(delta)";
        }
        return {};
    }));

    out.push_back(guarded("fundamental weights, rho_b and (1-sigma_k)^{-1} entries", [&]() -> std::string {
        const Weights w = fundamental_weights(rs);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<long> e(n, 0);
            e[j] = 1;
            Rational via_weights = 0;
            for (std::size_t i = 0; i < n; ++i) {
                via_weights += w.rho_b[i] * Rational(rs.cartan()[i][j]);
            }
            if (rs.rho_b_pair(e) != via_weights) {
                return "(rho_b|gamma_" + std::to_string(j) + ")";
            }
        }
        for (int k = 1; k <= 3; ++k) {
            if (orb.a(k) > 1) {
                sigma_inverse_entries(k, rs);
            }
        }
        return {};
    }));

    out.push_back(guarded("sigma_b eigenlines: eigen relation and normalization", [&]() -> std::string {
        const EigenData ed = coxeter_sigma(rs, kappa);
        for (std::size_t i = 0; i < orb.size(); ++i) {
            const Rational m = orb.degree(orb.star(i)) * Rational(kappa);
            if (ed.exponents[i] != m) {
                return "m_" + orb.labels()[i].name() + " = " + exactnum::to_string(ed.exponents[i]);
            }
        }
        return {};
    }));
    return out;
}
} // namespace cusp
