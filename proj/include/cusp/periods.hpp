#pragma once

#include "cusp/check.hpp"
#include "cusp/exactnum/puiseux.hpp"
#include "cusp/milnor.hpp"

#include <string>
#include <vector>

namespace cusp {

using exactnum::PuiseuxSeries;

/// Calibrated period of one cycle at one level, as Puiseux series in lambda
/// per orbifold basis component.
struct PeriodVector {
    int level = 0;
    std::string cycle;
    std::vector<PuiseuxSeries> components;

    friend bool operator==(const PeriodVector& a, const PeriodVector& b) { return a.components == b.components; }
    bool is_zero() const;
    /// Value at lambda = 1 on the principal branch.
    CohVector at_one() const;
    std::string to_string(const Orbifold& orb) const;
};

/// Largest |level| accepted by calibrated_period.
constexpr int kDefaultLevelBound = 6;

/// Periods of (alpha, n) from the closed-form expressions at levels l >= 1,
/// 0 and -1-l. Throws std::out_of_range when |level| exceeds `bound`.
PeriodVector calibrated_period(const RootVector& cycle, int level, const RootSystem& rs,
                               int bound = kDefaultLevelBound);

/// Period of alpha_{k,m} at level -l (l >= 1) from the inverse-Laplace
/// formula for L_k^m, independent of the lattice decomposition.
PeriodVector alpha_period(int leg, long m, int level, const RootSystem& rs);

/// Residuals of the three differential identities between levels n and n+1:
/// d/dlambda I(n) - I(n+1), (lambda - rho) d I(n) - (theta - n - 1/2) I(n),
/// Q d/dQ I(n) + P I(n+1).
struct OdeResiduals {
    PeriodVector derivative;
    PeriodVector grading;
    PeriodVector novikov;
    bool zero() const { return derivative.is_zero() && grading.is_zero() && novikov.is_zero(); }
};
OdeResiduals check_period_odes(const RootVector& cycle, int level, const RootSystem& rs);

/// Termwise Laplace transform of the level -l period of alpha_{k,m} at
/// Q = 1, compared with s^{-theta-l-1/2} s^{-rho} applied to psi(L_k^m).
struct LaplaceReport {
    double max_error = 0;
    bool pass = false;
    std::string witness;
};
LaplaceReport laplace_match(int leg, long m, int l, const RootSystem& rs, double tol = 1e-10);

/// Intersection number from the level -1 images.
Rational saito_pairing(const RootVector& a, const RootVector& b, const RootSystem& rs);

/// ODEs on simple roots, delta and alpha_{k,m} over [min_level, max_level],
/// the delta period, monodromy compatibility, independence at level -1,
/// the level-0 kernel, Saito pairing against the Cartan matrix, and the
/// Laplace correspondence.
struct PeriodSuiteOptions {
    int min_level = -3;
    int max_level = 2;
    bool laplace = true;
};
CheckList period_suite(const RootSystem& rs, const PeriodSuiteOptions& opts = {});

} // namespace cusp
