#pragma once

#include "cusp/exactnum/cyclo.hpp"

#include <optional>
#include <vector>

namespace cusp::exactnum {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<long>>;

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix to_rational(const IntMatrix& m);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> multiply(const RationalMatrix& a, const std::vector<Rational>& v);
RationalMatrix transpose(const RationalMatrix& a);

std::size_t rank(RationalMatrix m);
Rational determinant(RationalMatrix m);
/// Throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& m);
/// Solves m x = b for a (possibly non-square) consistent system; returns
/// nullopt if inconsistent and throws if the solution is not unique.
std::optional<std::vector<Rational>> solve_unique(RationalMatrix m, std::vector<Rational> b);
/// Basis of the right kernel.
std::vector<std::vector<Rational>> kernel(RationalMatrix m);

/// Exact determinant of an integer matrix (Bareiss).
Integer int_determinant(const std::vector<std::vector<Integer>>& m);

/// Rank of vectors over Q(zeta), given as rows.
std::size_t cyclo_rank(std::vector<std::vector<CycloNumber>> rows);

} // namespace cusp::exactnum
