#pragma once

#include "cusp/exactnum/linalg.hpp"
#include "cusp/exactnum/symbolic.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace cusp {

using exactnum::CycloNumber;
using exactnum::Rational;
using exactnum::RationalMatrix;
using exactnum::SymbolicSum;

/// Bad triple: unsorted, non-positive, or not Fano.
struct TripleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A pairing picked up Pi or log Q where a lattice value was expected.
struct ContaminationError : std::domain_error {
    using std::domain_error::domain_error;
};

struct FanoTriple {
    std::array<int, 3> a{};
    Rational chi;
    int milnor = 0; // N + 1

    std::string to_string() const;
};

/// Validates and builds the triple; throws TripleError.
FanoTriple make_triple(int a1, int a2, int a3);

struct IndexLabel {
    enum class Kind { Unit, Point, Twisted };
    Kind kind = Kind::Unit;
    int leg = 0; // 1..3 for twisted
    int p = 0;

    std::string name() const;
};

/// Element of H with coefficients in Q(zeta)[Pi, Lambda, Q^r].
struct CohVector {
    std::vector<SymbolicSum> c;

    CohVector() = default;
    explicit CohVector(std::size_t n) : c(n) {}

    std::size_t size() const { return c.size(); }
    SymbolicSum& operator[](std::size_t i) { return c[i]; }
    const SymbolicSum& operator[](std::size_t i) const { return c[i]; }
    bool is_zero() const;

    CohVector& operator+=(const CohVector& o);
    CohVector& operator-=(const CohVector& o);
    friend CohVector operator+(CohVector a, const CohVector& b) { return a += b; }
    friend CohVector operator-(CohVector a, const CohVector& b) { return a -= b; }
    friend CohVector operator*(const SymbolicSum& s, const CohVector& v);
    friend bool operator==(const CohVector& a, const CohVector& b) { return a.c == b.c; }

    std::string to_string() const;
};

/// Chen-Ruan cohomology model of the orbifold line with three orbifold points.
///
/// Basis order: (01) = 1, (02) = P, then (k,p) leg by leg.
class Orbifold {
public:
    static Orbifold build(int a1, int a2, int a3);

    const FanoTriple& triple() const { return triple_; }
    int a(int leg) const { return triple_.a[static_cast<std::size_t>(leg - 1)]; }
    const Rational& chi() const { return triple_.chi; }
    std::size_t size() const { return labels_.size(); }
    const std::vector<IndexLabel>& labels() const { return labels_; }
    const Rational& degree(std::size_t i) const { return degrees_[i]; }
    std::size_t star(std::size_t i) const { return star_[i]; }
    /// Position of (k,p); p is taken modulo a_k and must be nonzero.
    std::size_t index_of(int leg, int p) const;
    /// a_i for a twisted index, 1 otherwise.
    int leg_order(std::size_t i) const;
    std::vector<std::size_t> twisted() const;
    const RationalMatrix& pairing() const { return pairing_; }

    CohVector zero() const { return CohVector(size()); }
    CohVector basis(std::size_t i) const;

    /// theta: phi_i -> (d_i - 1/2) phi_i.
    CohVector theta(const CohVector& v) const;
    /// rho: 1 -> chi P, everything else -> 0.
    CohVector rho(const CohVector& v) const;
    /// r = (1 + rho)(1 - deg_CR).
    CohVector r(const CohVector& v) const;

    /// Orbifold Poincare pairing, bilinear.
    SymbolicSum poincare(const CohVector& u, const CohVector& v) const;
    /// (r u, (1 - rho) r v); throws ContaminationError if Pi or log Q survives.
    SymbolicSum intersection_form(const CohVector& u, const CohVector& v) const;
    /// (u, (1 - rho) v), the form on the level-0 images.
    SymbolicSum intersection_form_level0(const CohVector& u, const CohVector& v) const;

private:
    FanoTriple triple_;
    std::vector<IndexLabel> labels_;
    std::vector<Rational> degrees_;
    std::vector<std::size_t> star_;
    std::vector<std::size_t> leg_start_;
    RationalMatrix pairing_;
};

struct HodgeTraceParts {
    Rational trace_form;  // 1/2 tr(1/4 + theta theta^T)
    Rational twisted_sum; // 1/2 sum d(1-d)
    Rational closed_form; // 1/12 sum (a^2-1)/a
};

HodgeTraceParts hodge_trace_parts(const Orbifold& orb);
/// Common value of the three expressions; throws std::logic_error if they differ.
Rational hodge_trace(const Orbifold& orb);

} // namespace cusp
