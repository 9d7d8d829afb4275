#pragma once

#include "cusp/check.hpp"
#include "cusp/milnor.hpp"

#include <cstdint>

namespace cusp {

/// The cyclotomic order a triple needs exceeds CUSP_MAX_CYCLOTOMIC_ORDER.
struct FieldOrderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// |sigma_b| = lcm(a1,a2,a3) if chi |sigma_b| is even, else twice that.
int kappa(const FanoTriple& t);

/// lcm(2 kappa, 2 den(chi), a1, a2, a3); throws FieldOrderError above the cap.
int field_order(const FanoTriple& t);

/// CUSP_MAX_CYCLOTOMIC_ORDER, default 256.
int max_cyclotomic_order();

/// SF(a,b) = sum_k sum_{p=0}^{a_k-1} a_{k,p} (b_{k,p} - b_{k,p+1}) - 2 a_b b_b
/// with a_{k,0} = a_b and b_{k,a_k} = 0. Imaginary parts are ignored.
long sf(const RootSystem& rs, const std::vector<long>& a, const std::vector<long>& b);
int epsilon(const RootSystem& rs, const std::vector<long>& a, const std::vector<long>& b);
/// (-1)^{(omega_b|a) sum_k (omega_{k,1}|a)}
int upsilon(const RootSystem& rs, const std::vector<long>& a);

struct CocycleOptions {
    int random_pairs = 500;
    std::uint64_t seed = 20240501;
};

/// SF symmetrization, bimultiplicativity, epsilon(a,a), the sigma_b relation
/// for upsilon and the upsilon-product parity (-1)^{chi |sigma_b| (omega_b|a)^2}, on simple roots, all roots and
/// random lattice vectors.
CheckList cocycle_suite(const RootSystem& rs, const CocycleOptions& opts = {});

} // namespace cusp
