#pragma once

#include "cusp/exactnum/rational.hpp"

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cusp::exactnum {

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_polynomial(int n);

/// Euler totient (degree of the n-th cyclotomic polynomial).
int euler_phi(int n);

/// An exact element of Q(zeta_n), zeta_n = exp(2 pi i / n).
///
/// Stored as integer numerators over one positive common denominator, in the
/// power basis 1, zeta, ..., zeta^(phi(n)-1) reduced modulo Phi_n. Within a
/// fixed order the representation is canonical, so equality is coefficient
/// equality. Binary operations on operands of different orders first embed
/// both into Q(zeta_lcm).
class CycloNumber {
public:
    CycloNumber();
    CycloNumber(const Rational& value, int order = 1); // NOLINT: implicit from rationals is intended
    CycloNumber(long value); // NOLINT

    /// zeta_n^k; n must be positive.
    static CycloNumber root_of_unity(int n, long k);
    /// exp(2 pi i r) for rational r, of order den(r).
    static CycloNumber exp_2pi_i(const Rational& r);
    /// Builds an element from arbitrary-length rational coefficients in zeta_n.
    static CycloNumber from_powers(int n, std::span<const Rational> coeffs);

    int order() const { return order_; }
    /// Coefficients of 1, zeta, ..., zeta^(phi(n)-1).
    std::vector<Rational> coeffs() const;

    /// Image under Q(zeta_n) -> Q(zeta_m); requires n | m.
    CycloNumber embed(int m) const;

    bool is_zero() const;
    bool is_rational() const;
    /// Throws std::domain_error if the value is not rational.
    Rational to_rational() const;

    CycloNumber inverse() const;
    CycloNumber pow(long k) const;
    /// Complex conjugate (zeta -> zeta^-1).
    CycloNumber conj() const;

    std::complex<double> evaluate() const;
    std::string to_string() const;

    CycloNumber& operator+=(const CycloNumber& other);
    CycloNumber& operator-=(const CycloNumber& other);
    CycloNumber& operator*=(const CycloNumber& other);

    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
    friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
    friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * b.inverse(); }
    CycloNumber operator-() const;

    friend bool operator==(const CycloNumber& a, const CycloNumber& b);

private:
    CycloNumber(int order, std::vector<Integer> num, Integer den);
    void normalize();
    static void reduce(std::vector<Integer>& poly, int n);

    int order_;
    std::vector<Integer> num_;
    Integer den_;
};

/// zeta_n^k in canonical form; n = 0 is rejected.
CycloNumber cyclo(int n, long k);

/// prod_{m=1}^{kappa-1} (1 - eta^m)^{exponents[m-1]} with eta = exp(2 pi i / kappa).
///
/// Factors are accumulated in Z[x]/(x^kappa - 1) and reduced modulo Phi_kappa
/// once at the end.
CycloNumber product_one_minus_powers(int kappa, std::span<const long> exponents);

/// prod_{m=1}^{kappa-1} (1 - eta^m); equals kappa.
CycloNumber product_one_minus_eta(int kappa);

} // namespace cusp::exactnum
