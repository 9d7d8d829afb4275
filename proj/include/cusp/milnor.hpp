#pragma once

#include "cusp/check.hpp"
#include "cusp/orbifold.hpp"

#include <string>
#include <vector>

namespace cusp {

using exactnum::IntMatrix;

/// Lattice vector in the simple-root basis (gamma_b first, then gamma_{k,p}
/// in index order) together with an imaginary part n (multiple of delta).
struct RootVector {
    std::vector<long> coords;
    long imag = 0;

    RootVector() = default;
    explicit RootVector(std::vector<long> c, long n = 0) : coords(std::move(c)), imag(n) {}

    RootVector& operator+=(const RootVector& o);
    RootVector& operator-=(const RootVector& o);
    friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
    friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
    RootVector operator-() const;
    friend RootVector operator*(long s, RootVector v);
    friend bool operator==(const RootVector& a, const RootVector& b) = default;

    std::string to_string() const;
};

struct RootBasis {
    int level = 0;
    std::vector<CohVector> simple; // gamma_b, gamma_{k,p}
    CohVector delta;               // zero at level 0
    IntMatrix gram;
};

struct FiniteRootSystem {
    std::vector<std::vector<long>> roots; // sorted by height, then lexicographically
    std::vector<std::vector<long>> positive;
    std::vector<long> highest;
    std::vector<long> kac_labels; // k_j with delta = gamma_0 + sum k_j gamma_j
    std::string type;             // e.g. "D4"
};

/// Milnor-lattice model of the affine cusp singularity for one triple.
class RootSystem {
public:
    /// Builds both bases, verifies their Gram matrices against the branching
    /// diagram and enumerates the finite roots. Throws std::runtime_error if
    /// the orbit closure exceeds 10^4 vectors.
    static RootSystem build(const Orbifold& orb);

    const Orbifold& orbifold() const { return orb_; }
    std::size_t rank() const { return cartan_.size(); }
    /// Node of gamma_{k,p} (p in 1..a_k-1); node 0 is gamma_b.
    std::size_t node_of(int leg, int p) const;
    /// Orbifold index of the twisted class attached to node j >= 1.
    std::size_t orbifold_index(std::size_t node) const { return node + 1; }
    const IntMatrix& cartan() const { return cartan_; }
    const RationalMatrix& cartan_inverse() const { return cartan_inv_; }

    long pair(const std::vector<long>& u, const std::vector<long>& v) const;
    long pair(const RootVector& u, const RootVector& v) const { return pair(u.coords, v.coords); }
    std::vector<long> reflect(std::size_t node, const std::vector<long>& v) const;

    const RootBasis& level0() const { return level0_; }
    const RootBasis& level_m1() const { return level_m1_; }
    const FiniteRootSystem& finite() const { return finite_; }

    RootVector simple(std::size_t node) const;
    RootVector delta() const;
    /// Level-0 image (delta maps to 0).
    CohVector image0(const RootVector& v) const;
    /// Level -1 image at lambda = 1.
    CohVector image_m1(const RootVector& v) const;

    /// Matrix of sigma_b: entry [i][j] is the coefficient of gamma_i in sigma_b(gamma_j).
    const IntMatrix& sigma() const { return sigma_; }
    const IntMatrix& sigma_inv() const { return sigma_inv_; }
    int sigma_order() const { return sigma_order_; }
    /// sigma_b^power on the finite lattice (power may be negative).
    std::vector<long> apply_sigma(const std::vector<long>& v, long power = 1) const;
    /// sigma acting on the affine lattice, including the delta shifts.
    RootVector sigma_affine(const RootVector& v) const;
    RootVector sigma_affine_inverse(const RootVector& v) const;

    /// (omega_b | v) = coefficient of gamma_b.
    static long omega_b_pair(const std::vector<long>& v) { return v[0]; }
    /// (rho_b | v) = -sum_{k,p} v_{k,p} / a_k.
    Rational rho_b_pair(const std::vector<long>& v) const;

    /// Number of non-empty legs.
    int nonempty_legs() const;

private:
    Orbifold orb_;
    IntMatrix cartan_;
    RationalMatrix cartan_inv_;
    std::vector<int> node_leg_;
    RootBasis level0_;
    RootBasis level_m1_;
    FiniteRootSystem finite_;
    IntMatrix sigma_;
    IntMatrix sigma_inv_;
    IntMatrix sigma_affine_; // (N+1)x(N+1), last coordinate is delta
    IntMatrix sigma_affine_inv_;
    int sigma_order_ = 1;
};

/// Affine Gram matrix over (gamma_0, gamma_1..gamma_N) computed from level -1 images.
RationalMatrix affine_gram(const RootSystem& rs);

struct AffineSignature {
    bool finite_block_positive = false;
    std::size_t rank = 0;
    bool kernel_is_delta = false;
};
AffineSignature affine_signature(const RootSystem& rs);

struct EigenLine {
    CohVector base;
    Rational scale_sq;      // H = sqrt(scale_sq) * base
    CycloNumber eigenvalue; // sigma_b(H) = eigenvalue * H, equal to exp(2 pi i d_i)
};

struct EigenData {
    IntMatrix sigma;
    int order = 1;
    int kappa = 1;
    std::vector<EigenLine> lines;     // indexed like the orbifold basis; 01 and 02 share H_0
    std::vector<Rational> exponents;  // m_i
};

/// sigma_b eigen-lines and exponents; the eigen relation and the squared
/// normalization are verified exactly (throws std::logic_error otherwise).
EigenData coxeter_sigma(const RootSystem& rs, int kappa);

struct Weights {
    std::vector<std::vector<Rational>> omega; // omega[j] in simple-root coordinates
    std::vector<Rational> rho_b;
    std::vector<long> kac_labels;
};

/// Fundamental weights from the inverse Cartan matrix; checks the branching
/// node identities and throws std::logic_error on failure.
Weights fundamental_weights(const RootSystem& rs);

/// (1 - sigma_k)^{-1} on leg k, computed by elimination and compared with
/// p/a_k - [p > q]; throws std::logic_error on mismatch.
RationalMatrix sigma_inverse_entries(int leg, const RootSystem& rs);

/// The lattice cycle matched to L_k^m.
RootVector alpha_km_root(int leg, long m, const RootSystem& rs);
/// Its period at lambda = 1, level 0 or -1, from the closed-form images.
CohVector alpha_km(int leg, long m, int level, const RootSystem& rs);
/// Intersection number of alpha_{k,m} and alpha_{k',n} from the table.
long alpha_intersection_table(int k, long m, int k2, long n, const RootSystem& rs);

/// Root count against the ADE type, norms, affine signature, sigma_b as an
/// isometry of order lcm(a), the affine action table, fundamental weights,
/// the leg inverses and the eigen relation at the given kappa.
CheckList roots_suite(const RootSystem& rs, int kappa);

} // namespace cusp
