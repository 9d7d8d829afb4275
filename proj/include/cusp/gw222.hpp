#pragma once

#include "cusp/exactnum/rational.hpp"

#include <array>
#include <map>
#include <string>

namespace cusp::gw222 {

using exactnum::Rational;

/// Variable order: t01, t02, t1, t2, t3 (the orbifold basis order of (2,2,2)).
constexpr int kVars = 5;
using Exponents = std::array<int, kVars>;

/// Exact polynomial with rational coefficients; zero terms are never stored.
class Poly {
public:
    Poly() = default;
    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, const Exponents& e);

    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Exponents& e) const;
    void add(const Exponents& e, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& c) const;
    Poly derivative(int var) const;
    bool depends_on(int var) const;
    friend bool operator==(const Poly&, const Poly&) = default;

    std::string to_string() const;

private:
    std::map<Exponents, Rational> terms_;
};

/// sum_d g_d Q^d e^{d t02}; g_0 may contain t02 explicitly (the 1/2 t01^2 t02 term).
class GradedPotential {
public:
    const std::map<int, Poly>& parts() const { return parts_; }
    const Poly& part(int d) const;
    void set(int d, Poly p);
    int max_degree() const { return parts_.empty() ? 0 : parts_.rbegin()->first; }

    /// d/dt_var; d/dt02 multiplies the degree-d part by d as well.
    GradedPotential derivative(int var) const;
    GradedPotential& operator+=(const GradedPotential& o);
    GradedPotential& operator-=(const GradedPotential& o);
    /// Product keeping Novikov degrees <= max_degree.
    GradedPotential times(const GradedPotential& o, int max_degree) const;
    GradedPotential scaled(const Rational& c) const;
    /// Value at t = 0, Q = 1.
    Rational at_zero() const;
    /// Keeps parts of degree <= d.
    GradedPotential truncated(int d) const;

    friend bool operator==(const GradedPotential& a, const GradedPotential& b);
    std::string to_string() const;

private:
    std::map<int, Poly> parts_;
};

/// Coefficient of sum t_i^4 in the default classical seed.
inline const Rational kSeedQuartic{1, 96};
/// The value associativity forces once the t1 t2 t3 Q e^{t02} term is present.
inline const Rational kWdvvQuartic{-1, 96};

/// 1/2 t01^2 t02 + 1/4 t01 sum t_i^2 + quartic sum t_i^4.
GradedPotential classical_seed(const Rational& quartic = kSeedQuartic);

/// The closed form through Novikov degree 4.
GradedPotential closed_form_potential(const Rational& quartic = kSeedQuartic);

/// Solves d^2 g_d = [RHS of the t02 t02 relation]_d for d = 1..max_degree.
/// Throws std::invalid_argument for max_degree < 1 and std::logic_error if the
/// right-hand side depends on t01 at positive degree.
GradedPotential solve_recursion(int max_degree, const Rational& quartic = kSeedQuartic);

struct WdvvReport {
    bool associative = true;
    bool commutative = true;
    bool unit = true;
    int failing_degree = -1;
    std::string witness;
    bool pass() const { return associative && commutative && unit; }
};

/// Associativity of the product from the third derivatives of F, raised with
/// the inverse Poincare pairing of (2,2,2), per Novikov degree <= max_degree.
WdvvReport wdvv_check(const GradedPotential& f, int max_degree);

/// d^4 F / dt_leg^4 at t = 0, degree 0; leg in 1..3.
Rational four_point_invariant(const GradedPotential& f, int leg);

/// e01 + (e1 + e2 + e3)/2 + d/2 = 2 on every monomial, ignoring 1/2 t01^2 t02.
bool weighted_homogeneous(const GradedPotential& f, std::string* witness = nullptr);

} // namespace cusp::gw222
