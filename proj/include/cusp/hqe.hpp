#pragma once

#include "cusp/check.hpp"
#include "cusp/cocycle.hpp"
#include "cusp/exactnum/puiseux.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace cusp {

/// a_alpha = magnitude * zeta^{zeta_exponent} * phase, together with the
/// lambda / Q exponents of the matching b coefficient.
struct HqeCoefficient {
    std::vector<long> alpha;
    long omega_b = 0;              // (omega_b|alpha)
    Rational norm0;                // |alpha_0|^2 = chi (omega_b|alpha)^2
    Rational zeta_exponent;        // kappa |alpha_0|^2
    CycloNumber magnitude;         // B_{alpha,alpha}
    CycloNumber phase;             // exp(2 pi i (rho_b|alpha)(omega_b|alpha))
    Rational lambda_exponent;      // -|alpha_0|^2
    Rational q_exponent;           // |alpha_0|^2 / chi
    Rational kappa_power_exponent; // leftover power of kappa; 0 when lambda = zeta^kappa / kappa is consistent
};

struct PhaseFactorSeries {
    Rational mu_exponent;            // -(alpha_0|beta_0)
    Rational q_exponent;             // (alpha_0|beta_0) / chi
    CycloNumber phase;               // exp(-2 pi i (omega_b|alpha)(rho_b|beta))
    exactnum::PuiseuxSeries series;  // prod_{m=1}^{kappa} (1 - eta^m x)^{(sigma^m alpha|beta)}
    std::vector<long> exponents;     // (sigma^m alpha|beta), m = 1..kappa
};

/// Both sides of the b coefficient identity for one root.
struct BMatch {
    Rational lambda_exponent[2];
    Rational q_exponent[2];
    CycloNumber phase[2];
    CycloNumber magnitude[2];
    bool equal = false;
};

struct CommutatorValue {
    CycloNumber lhs; // prod_{m=1}^{kappa} (-eta^m)^{(alpha|sigma^m beta)}
    CycloNumber rhs; // e^{pi i (alpha_0|beta_0)} e^{2 pi i ((1-sigma)^{-1} alpha_*|beta)}
    bool equal() const { return lhs == rhs; }
};

/// Scalar HQE data for one triple at a given kappa (a multiple of |sigma_b|).
/// B_{alpha,beta} products are cached by their exponent vector.
class HqeContext {
public:
    HqeContext(const RootSystem& rs, int kappa);

    const RootSystem& roots() const { return rs_; }
    int kappa() const { return kappa_; }

    /// (sigma^m alpha|beta) for m = 1..kappa.
    std::vector<long> orbit_pairings(const std::vector<long>& alpha, const std::vector<long>& beta) const;

    /// kappa^{-(alpha|beta)} prod_{m=1}^{kappa-1} (1 - eta^m)^{(sigma^m alpha|beta)}.
    CycloNumber b_bilinear(const std::vector<long>& alpha, const std::vector<long>& beta) const;
    HqeCoefficient a_coefficient(const std::vector<long>& alpha) const;
    PhaseFactorSeries phase_factor(const std::vector<long>& alpha, const std::vector<long>& beta,
                                   const Rational& order) const;
    /// b from the a_alpha route against b-tilde from the x -> 1 limit of the phase factor.
    BMatch b_coefficient_match(const std::vector<long>& alpha) const;
    CommutatorValue commutator_identity(const std::vector<long>& alpha, const std::vector<long>& beta) const;

    /// sum of a_alpha over roots with (omega_b|alpha) = 0.
    CycloNumber constant_term() const;

private:
    CycloNumber product(const std::vector<long>& exponents) const;

    RootSystem rs_;
    int kappa_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::vector<long>, CycloNumber> cache_;
};

struct HqeRootEntry {
    std::vector<long> alpha;
    long omega_b = 0;
    CycloNumber a_magnitude;
    Rational zeta_exponent;
    CycloNumber phase;
};

struct HqeReport {
    FanoTriple triple;
    int kappa = 1;
    int sigma_order = 1;
    Rational constant;                  // sum of a_alpha over (omega_b|alpha) = 0
    Rational hodge;                     // (1/12) sum (a_k^2 - 1)/a_k
    std::vector<std::string> index_names;
    std::vector<Rational> exponents;    // m_i
    std::vector<Rational> exponent_lattice; // distinct positive m_i + l kappa, l = 0..2
    std::vector<HqeRootEntry> roots;
};

HqeReport hqe_report(const RootSystem& rs);

struct HqeSuiteOptions {
    int random_pairs = 100;
    std::uint64_t seed = 11;
    int kappa_multiplier = 1;
};

/// Constant term three-way identity, b-match on every root, commutator
/// identity and its exchange symmetry.
CheckList hqe_suite(const RootSystem& rs, const HqeSuiteOptions& opts = {});

/// a_alpha data and b-match verdicts at kappa, 2 kappa and 3 kappa agree.
CheckResult kappa_stability(const RootSystem& rs, const std::vector<int>& multipliers = {1, 2, 3});

} // namespace cusp
