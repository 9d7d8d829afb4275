#include "cusp/gw222.hpp"
#include "cusp/orbifold.hpp"

#include <sstream>
#include <stdexcept>

namespace cusp::gw222 {

namespace {

constexpr int T01 = 0;
constexpr int T02 = 1;
constexpr const char* kNames[kVars] = {"t01", "t02", "t1", "t2", "t3"};

Exponents exps(int e01, int e02, int e1, int e2, int e3)
{
    return {e01, e02, e1, e2, e3};
}

const Poly kZero;

} // namespace

Poly Poly::constant(const Rational& c)
{
    return monomial(c, {});
}

Poly Poly::monomial(const Rational& c, const Exponents& e)
{
    Poly p;
    p.add(e, c);
    return p;
}

Rational Poly::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add(const Exponents& e, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Poly& Poly::operator+=(const Poly& o)
{
    for (const auto& [e, c] : o.terms_) {
        add(e, c);
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    for (const auto& [e, c] : o.terms_) {
        add(e, -c);
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e{};
            for (int i = 0; i < kVars; ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add(e, ca * cb);
        }
    }
    return out;
}

Poly Poly::scaled(const Rational& c) const
{
    Poly out;
    for (const auto& [e, x] : terms_) {
        out.add(e, x * c);
    }
    return out;
}

Poly Poly::derivative(int var) const
{
    Poly out;
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) {
            continue;
        }
        Exponents f = e;
        --f[var];
        out.add(f, c * e[var]);
    }
    return out;
}

bool Poly::depends_on(int var) const
{
    for (const auto& [e, c] : terms_) {
        if (e[var] != 0) {
            return true;
        }
    }
    return false;
}

std::string Poly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool unit_monomial = e == Exponents{};
        Rational mag = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        bool need_star = false;
        if (mag != 1 || unit_monomial) {
            os << exactnum::to_string(mag);
            need_star = true;
        }
        for (int i = 0; i < kVars; ++i) {
            if (e[i] == 0) {
                continue;
            }
            os << (need_star ? "*" : "") << kNames[i];
            if (e[i] > 1) {
                os << "^" << e[i];
            }
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

const Poly& GradedPotential::part(int d) const
{
    auto it = parts_.find(d);
    return it == parts_.end() ? kZero : it->second;
}

void GradedPotential::set(int d, Poly p)
{
    if (p.is_zero()) {
        parts_.erase(d);
    } else {
        parts_[d] = std::move(p);
    }
}

GradedPotential GradedPotential::derivative(int var) const
{
    GradedPotential out;
    for (const auto& [d, p] : parts_) {
        Poly q = p.derivative(var);
        if (var == T02 && d != 0) {
            q += p.scaled(Rational(d));
        }
        out.set(d, std::move(q));
    }
    return out;
}

GradedPotential& GradedPotential::operator+=(const GradedPotential& o)
{
    for (const auto& [d, p] : o.parts_) {
        set(d, part(d) + p);
    }
    return *this;
}

GradedPotential& GradedPotential::operator-=(const GradedPotential& o)
{
    for (const auto& [d, p] : o.parts_) {
        set(d, part(d) - p);
    }
    return *this;
}

GradedPotential GradedPotential::times(const GradedPotential& o, int max_degree) const
{
    GradedPotential out;
    for (const auto& [d1, p1] : parts_) {
        for (const auto& [d2, p2] : o.parts_) {
            if (d1 + d2 <= max_degree) {
                out.set(d1 + d2, out.part(d1 + d2) + p1 * p2);
            }
        }
    }
    return out;
}

GradedPotential GradedPotential::scaled(const Rational& c) const
{
    GradedPotential out;
    for (const auto& [d, p] : parts_) {
        out.set(d, p.scaled(c));
    }
    return out;
}

Rational GradedPotential::at_zero() const
{
    Rational s = 0;
    for (const auto& [d, p] : parts_) {
        s += p.coefficient({});
    }
    return s;
}

GradedPotential GradedPotential::truncated(int d) const
{
    GradedPotential out;
    for (const auto& [e, p] : parts_) {
        if (e <= d) {
            out.set(e, p);
        }
    }
    return out;
}

bool operator==(const GradedPotential& a, const GradedPotential& b)
{
    return a.parts_ == b.parts_;
}

std::string GradedPotential::to_string() const
{
    std::ostringstream os;
    for (const auto& [d, p] : parts_) {
        os << "d=" << d << ": " << p.to_string() << "\n";
    }
    return os.str();
}

GradedPotential classical_seed(const Rational& quartic)
{
    Poly p = Poly::monomial(Rational(1, 2), exps(2, 1, 0, 0, 0));
    for (int i = 2; i < kVars; ++i) {
        Exponents sq{};
        sq[T01] = 1;
        sq[i] = 2;
        p.add(sq, Rational(1, 4));
        Exponents q{};
        q[i] = 4;
        p.add(q, quartic);
    }
    GradedPotential f;
    f.set(0, p);
    return f;
}

GradedPotential closed_form_potential(const Rational& quartic)
{
    GradedPotential f = classical_seed(quartic);
    f.set(1, Poly::monomial(Rational(1), exps(0, 0, 1, 1, 1)));
    Poly two;
    for (int i = 2; i < kVars; ++i) {
        Exponents sq{};
        sq[i] = 2;
        two.add(sq, Rational(1, 2));
    }
    f.set(2, two);
    f.set(4, Poly::constant(Rational(1, 4)));
    return f;
}

GradedPotential solve_recursion(int max_degree, const Rational& quartic)
{
    if (max_degree < 1) {
        throw std::invalid_argument("solve_recursion: max_degree must be at least 1, got "
                                    + std::to_string(max_degree));
    }
    constexpr int T1 = 2;
    GradedPotential f = classical_seed(quartic);
    const Poly t123 = Poly::monomial(Rational(1), exps(0, 0, 1, 1, 1));
    for (int d = 1; d <= max_degree; ++d) {
        // F_{02,02} = 4 Q^4 e^{4 t02} + Q e^{t02} (t1 t2 t3 + 2 (t1 F_{2,3} + t2 F_{1,3} + t3 F_{1,2}))
        const Poly& prev = f.part(d - 1);
        Poly rhs;
        if (d == 4) {
            rhs += Poly::constant(Rational(4));
        }
        if (d == 1) {
            rhs += t123;
        }
        for (int i = 0; i < 3; ++i) {
            const int a = T1 + (i + 1) % 3;
            const int b = T1 + (i + 2) % 3;
            Exponents ti{};
            ti[T1 + i] = 1;
            rhs += (Poly::monomial(Rational(2), ti) * prev.derivative(a).derivative(b));
        }
        if (rhs.depends_on(T01)) {
            throw std::logic_error("solve_recursion: right-hand side depends on t01 at degree " + std::to_string(d)
                                   + ": " + rhs.to_string());
        }
        f.set(d, rhs.scaled(Rational(1, d * d)));
    }
    return f;
}

WdvvReport wdvv_check(const GradedPotential& f, int max_degree)
{
    WdvvReport rep;
    const Orbifold orb = Orbifold::build(2, 2, 2);
    const RationalMatrix eta = orb.pairing();
    const RationalMatrix eta_inv = exactnum::inverse(eta);
    const int n = kVars;

    std::vector<GradedPotential> d1(n);
    std::vector<std::vector<GradedPotential>> d2(n, std::vector<GradedPotential>(n));
    std::vector<std::vector<std::vector<GradedPotential>>> c(
        n, std::vector<std::vector<GradedPotential>>(n, std::vector<GradedPotential>(n)));
    for (int i = 0; i < n; ++i) {
        d1[i] = f.derivative(i);
        for (int j = 0; j < n; ++j) {
            d2[i][j] = d1[i].derivative(j);
            for (int k = 0; k < n; ++k) {
                c[i][j][k] = d2[i][j].derivative(k).truncated(max_degree);
            }
        }
    }

    for (int i = 0; i < n && rep.commutative; ++i) {
        for (int j = 0; j < n && rep.commutative; ++j) {
            for (int k = 0; k < n; ++k) {
                if (!(c[i][j][k] == c[j][i][k]) || !(c[i][j][k] == c[i][k][j])) {
                    rep.commutative = false;
                    rep.witness = "c_{" + std::to_string(i) + std::to_string(j) + std::to_string(k) + "} not symmetric";
                    break;
                }
            }
        }
    }

    for (int j = 0; j < n && rep.unit; ++j) {
        for (int k = 0; k < n; ++k) {
            GradedPotential want;
            want.set(0, Poly::constant(eta[j][k]));
            if (!(c[T01][j][k] == want)) {
                rep.unit = false;
                rep.witness = "c_{01," + std::to_string(j) + "," + std::to_string(k) + "} = " + c[T01][j][k].to_string();
                break;
            }
        }
    }

    // c_{ij}^e = sum_f c_{ijf} eta^{fe}
    std::vector<std::vector<std::vector<GradedPotential>>> up(
        n, std::vector<std::vector<GradedPotential>>(n, std::vector<GradedPotential>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int e = 0; e < n; ++e) {
                for (int g = 0; g < n; ++g) {
                    if (eta_inv[g][e] != 0) {
                        up[i][j][e] += c[i][j][g].scaled(eta_inv[g][e]);
                    }
                }
            }
        }
    }

    for (int i = 0; i < n && rep.associative; ++i) {
        for (int j = 0; j < n && rep.associative; ++j) {
            for (int k = 0; k < n && rep.associative; ++k) {
                for (int l = 0; l < n; ++l) {
                    GradedPotential r;
                    for (int e = 0; e < n; ++e) {
                        r += up[i][j][e].times(c[e][k][l], max_degree);
                        r -= up[i][l][e].times(c[e][k][j], max_degree);
                    }
                    if (!r.parts().empty()) {
                        rep.associative = false;
                        rep.failing_degree = r.parts().begin()->first;
                        rep.witness = "(" + std::string(kNames[i]) + "," + kNames[j] + "," + kNames[k] + ","
                                      + kNames[l] + ") degree " + std::to_string(rep.failing_degree) + ": "
                                      + r.parts().begin()->second.to_string();
                        break;
                    }
                }
            }
        }
    }
    return rep;
}

Rational four_point_invariant(const GradedPotential& f, int leg)
{
    if (leg < 1 || leg > 3) {
        throw std::invalid_argument("four_point_invariant: leg must be 1..3");
    }
    const int v = 1 + leg;
    return f.derivative(v).derivative(v).derivative(v).derivative(v).part(0).coefficient({});
}

bool weighted_homogeneous(const GradedPotential& f, std::string* witness)
{
    const Exponents skip = exps(2, 1, 0, 0, 0);
    for (const auto& [d, p] : f.parts()) {
        for (const auto& [e, c] : p.terms()) {
            if (d == 0 && e == skip) {
                continue;
            }
            const Rational w = Rational(e[0]) + exactnum::make_rational(e[2] + e[3] + e[4] + d, 2);
            if (e[T02] != 0 || w != 2) {
                if (witness) {
                    *witness = "degree " + std::to_string(d) + " term " + Poly::monomial(c, e).to_string();
                }
                return false;
            }
        }
    }
    return true;
}

} // namespace cusp::gw222
