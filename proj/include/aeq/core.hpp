#pragma once

#include "aeq/types.hpp"

namespace aeq {

/// Matrix V with entries ||v_i - v_j||^2. Symmetric, zero diagonal.
Eigen::MatrixXd squared_distance_matrix(const PointSet& ps);

/// Matrix U = V - J + I: off-diagonal entries ||v_i - v_j||^2 - 1, zero diagonal.
Eigen::MatrixXd matrix_u(const PointSet& ps);

/// Edges are pairs with |distance - 1| <= tol.unit_eps.
UnitDistanceGraph unit_distance_graph(const PointSet& ps, const Tolerance& tol);

/// True iff every 3-subset of indices contains a unit-distance pair.
/// On failure the witness is the lexicographically smallest violating triple.
/// Sets with n <= 2 are vacuously true.
AlmostEquidistantVerdict is_almost_equidistant(const PointSet& ps,
                                               const Tolerance& tol);

/// |LHS - RHS| of
///   sum_{i,j} ||x_i - y_j||^2 =
///   sum_{i<j} ||x_i - x_j||^2 + sum_{i<j} ||y_i - y_j||^2 + n^2 ||xbar - ybar||^2.
/// Requires equal dimension and cardinality; duplicates allowed.
double barycenter_identity_residual(const PointSet& x, const PointSet& y);

/// Maximum pairwise distance; requires n >= 2.
double diameter(const PointSet& ps);

}  // namespace aeq
