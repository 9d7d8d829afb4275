#pragma once

#include "cusp/check.hpp"
#include "cusp/milnor.hpp"

#include <complex>
#include <vector>

namespace cusp {

/// K-theory class in the normal-form basis, indexed like the orbifold basis:
/// O <-> 01, L <-> 02, L_k^p <-> (k,p).
struct KClass {
    std::vector<long> c;

    KClass() = default;
    explicit KClass(std::size_t n) : c(n, 0) {}

    KClass& operator+=(const KClass& o);
    KClass& operator-=(const KClass& o);
    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
    friend KClass operator*(long s, KClass v);
    friend bool operator==(const KClass&, const KClass&) = default;
};

/// K_orb of the orbifold line: Z[L_1, L_2, L_3] modulo
/// L_1^{a_1} = L_2^{a_2} = L_3^{a_3} and (1 - L_k)(1 - L_k') = 0.
class KRing {
public:
    explicit KRing(const Orbifold& orb) : orb_(orb) {}

    const Orbifold& orbifold() const { return orb_; }
    std::size_t rank() const { return orb_.size(); }

    KClass structure_sheaf() const;
    KClass line() const; // L
    /// L_k^m for any integer m (L_k^{q a_k + r} = L_k^r + q L - q O).
    KClass leg_line(int leg, long m) const;
    /// O_pt = L - O.
    KClass skyscraper() const;
    KClass basis(std::size_t i) const;

    KClass multiply(const KClass& u, const KClass& v) const;

private:
    KClass basis_product(std::size_t i, std::size_t j) const;

    Orbifold orb_;
};

/// (2 pi)^{1/2} Psi(V) in the orbifold basis, double precision.
struct GammaVector {
    std::vector<std::complex<double>> c;
    bool sqrt_2pi_normalized = true;
};

/// Gamma at a point of (0, 1] or beyond; throws std::domain_error at poles.
double gamma_function(double x);

/// (2 pi)^{1/2} Psi(L_k^m) = 1 + (-gamma chi + 2 pi i m / a_k) P
///                          + sum Gamma(d_{j,p}) zeta_j^{-m p delta_{kj}} phi_{j,p}.
GammaVector psi(int leg, long m, const Orbifold& orb);
/// Linear extension to a K-class.
GammaVector psi(const KClass& v, const Orbifold& orb);

struct EulerValue {
    std::complex<double> value;
    long nearest = 0;
    bool integral = false; // within 1e-9 of nearest
};

/// chi(V (x) W^dual) = (1/2pi) (e^{pi i theta} e^{pi i rho} psi(V), psi(W)).
EulerValue euler_pairing(const KClass& v, const KClass& w, const Orbifold& orb);

/// Euler Gram matrix over the normal-form basis, rounded; throws
/// std::runtime_error if an entry is not within 1e-9 of an integer.
exactnum::IntMatrix euler_gram(const Orbifold& orb);

/// Symmetrized pairing against the alpha_{k,m} table, Gram unimodularity,
/// chi(O) = 1, ring associativity and commutativity.
CheckList gamma_suite(const RootSystem& rs);

} // namespace cusp
