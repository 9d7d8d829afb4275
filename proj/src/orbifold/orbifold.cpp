#include "cusp/orbifold.hpp"

namespace cusp {

using exactnum::make_rational;

std::string FanoTriple::to_string() const
{
    return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + ")";
}

FanoTriple make_triple(int a1, int a2, int a3)
{
    if (a1 < 1 || a2 < 1 || a3 < 1) {
        throw TripleError("entries must be positive integers");
    }
    if (!(a1 <= a2 && a2 <= a3)) {
        throw TripleError("triple must be sorted a1 <= a2 <= a3");
    }
    FanoTriple t;
    t.a = {a1, a2, a3};
    t.chi = make_rational(1, a1) + make_rational(1, a2) + make_rational(1, a3) - 1;
    if (t.chi <= 0) {
        throw TripleError("chi = " + t.chi.get_str() + " not Fano");
    }
    t.milnor = a1 + a2 + a3 - 1;
    return t;
}

std::string IndexLabel::name() const
{
    switch (kind) {
    case Kind::Unit: return "01";
    case Kind::Point: return "02";
    default: return std::to_string(leg) + "," + std::to_string(p);
    }
}

bool CohVector::is_zero() const
{
    for (const auto& x : c) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

CohVector& CohVector::operator+=(const CohVector& o)
{
    if (c.size() < o.c.size()) {
        c.resize(o.c.size());
    }
    for (std::size_t i = 0; i < o.c.size(); ++i) {
        c[i] += o.c[i];
    }
    return *this;
}

CohVector& CohVector::operator-=(const CohVector& o)
{
    if (c.size() < o.c.size()) {
        c.resize(o.c.size());
    }
    for (std::size_t i = 0; i < o.c.size(); ++i) {
        c[i] -= o.c[i];
    }
    return *this;
}

CohVector operator*(const SymbolicSum& s, const CohVector& v)
{
    CohVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        r.c[i] = s * v.c[i];
    }
    return r;
}

std::string CohVector::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        out += (i ? "; " : "") + c[i].to_string();
    }
    return out + "]";
}

Orbifold Orbifold::build(int a1, int a2, int a3)
{
    Orbifold o;
    o.triple_ = make_triple(a1, a2, a3);
    o.labels_.push_back({IndexLabel::Kind::Unit, 0, 0});
    o.labels_.push_back({IndexLabel::Kind::Point, 0, 0});
    o.degrees_ = {Rational(1), Rational(0)};
    for (int k = 1; k <= 3; ++k) {
        o.leg_start_.push_back(o.labels_.size());
        const int ak = o.triple_.a[static_cast<std::size_t>(k - 1)];
        for (int p = 1; p < ak; ++p) {
            o.labels_.push_back({IndexLabel::Kind::Twisted, k, p});
            o.degrees_.push_back(1 - make_rational(p, ak));
        }
    }
    const std::size_t n = o.labels_.size();
    o.star_.assign(n, 0);
    o.star_[0] = 1;
    o.star_[1] = 0;
    o.pairing_.assign(n, std::vector<Rational>(n, Rational(0)));
    o.pairing_[0][1] = 1;
    o.pairing_[1][0] = 1;
    for (std::size_t i = 2; i < n; ++i) {
        const auto& l = o.labels_[i];
        const int ak = o.a(l.leg);
        o.star_[i] = o.index_of(l.leg, ak - l.p);
        o.pairing_[i][o.star_[i]] = make_rational(1, ak);
    }
    return o;
}

std::size_t Orbifold::index_of(int leg, int p) const
{
    const int ak = a(leg);
    const int q = ((p % ak) + ak) % ak;
    if (q == 0) {
        throw std::out_of_range("(k,p) with p = 0 mod a_k is not a twisted index");
    }
    return leg_start_[static_cast<std::size_t>(leg - 1)] + static_cast<std::size_t>(q - 1);
}

int Orbifold::leg_order(std::size_t i) const
{
    return labels_[i].kind == IndexLabel::Kind::Twisted ? a(labels_[i].leg) : 1;
}

std::vector<std::size_t> Orbifold::twisted() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 2; i < size(); ++i) {
        out.push_back(i);
    }
    return out;
}

CohVector Orbifold::basis(std::size_t i) const
{
    CohVector v = zero();
    v[i] = SymbolicSum(1L);
    return v;
}

CohVector Orbifold::theta(const CohVector& v) const
{
    CohVector out = zero();
    for (std::size_t i = 0; i < size(); ++i) {
        out[i] = SymbolicSum(degrees_[i] - make_rational(1, 2)) * v[i];
    }
    return out;
}

CohVector Orbifold::rho(const CohVector& v) const
{
    CohVector out = zero();
    out[1] = SymbolicSum(chi()) * v[0];
    return out;
}

CohVector Orbifold::r(const CohVector& v) const
{
    // (1 - deg_CR) scales phi_i by d_i (deg_CR = 1 - d_i), then add rho
    CohVector scaled = zero();
    for (std::size_t i = 0; i < size(); ++i) {
        scaled[i] = SymbolicSum(degrees_[i]) * v[i];
    }
    return scaled + rho(scaled);
}

SymbolicSum Orbifold::poincare(const CohVector& u, const CohVector& v) const
{
    SymbolicSum s;
    for (std::size_t i = 0; i < size(); ++i) {
        if (u[i].is_zero()) {
            continue;
        }
        const std::size_t j = star_[i];
        s += SymbolicSum(pairing_[i][j]) * u[i] * v[j];
    }
    return s;
}

SymbolicSum Orbifold::intersection_form(const CohVector& u, const CohVector& v) const
{
    const CohVector ru = r(u);
    const CohVector rv = r(v);
    SymbolicSum s = poincare(ru, rv - rho(rv));
    if (s.has_pi() || s.has_logq()) {
        throw ContaminationError("intersection form not free of Pi/logQ: " + s.to_string());
    }
    return s;
}

SymbolicSum Orbifold::intersection_form_level0(const CohVector& u, const CohVector& v) const
{
    return poincare(u, v - rho(v));
}

HodgeTraceParts hodge_trace_parts(const Orbifold& orb)
{
    const std::size_t n = orb.size();
    RationalMatrix theta(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        theta[i][i] = orb.degree(i) - make_rational(1, 2);
    }
    // adjoint with respect to the Poincare pairing: G^{-1} theta^T G
    const RationalMatrix& g = orb.pairing();
    RationalMatrix adj = exactnum::multiply(exactnum::multiply(exactnum::inverse(g), exactnum::transpose(theta)), g);
    RationalMatrix prod = exactnum::multiply(theta, adj);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) {
        tr += make_rational(1, 4) + prod[i][i];
    }
    HodgeTraceParts parts;
    parts.trace_form = tr / 2;
    parts.twisted_sum = 0;
    for (std::size_t i : orb.twisted()) {
        parts.twisted_sum += orb.degree(i) * (1 - orb.degree(i)) / 2;
    }
    parts.closed_form = 0;
    for (int ak : orb.triple().a) {
        parts.closed_form += make_rational(ak * ak - 1, 12 * ak);
    }
    return parts;
}

Rational hodge_trace(const Orbifold& orb)
{
    const auto parts = hodge_trace_parts(orb);
    if (parts.trace_form != parts.closed_form || parts.twisted_sum != parts.closed_form) {
        throw std::logic_error("hodge trace expressions disagree: " + parts.trace_form.get_str() + ", "
                               + parts.twisted_sum.get_str() + ", " + parts.closed_form.get_str());
    }
    return parts.closed_form;
}

} // namespace cusp
