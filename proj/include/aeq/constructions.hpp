#pragma once

#include "aeq/types.hpp"

#include <cstdint>

namespace aeq {

/// m+1 points pairwise at unit distance, embedded in the first m coordinates
/// of R^d and centered at the origin. Circumradius sqrt(m / (2(m+1))).
PointSet regular_unit_simplex(int m, int d);

/// alpha_d = 2 arcsin sqrt((d+1) / (2d)), in (pi/2, pi].
double alpha_d(int d);

/// k = 1 / (2 sin(alpha / 2)) for alpha in (0, pi].
double scale_k(double alpha);

/// 2d+2 points: two copies of the d+1 unit-sphere simplex vertices (the
/// second rotated by a seeded random orthogonal transform), scaled by
/// k = scale_k(alpha_d(d)). Almost-equidistant by construction.
PointSet two_simplex_union(int d, std::uint64_t seed);

/// The 7-point Moser spindle in R^2; deterministic coordinates.
PointSet moser_spindle();

}  // namespace aeq
