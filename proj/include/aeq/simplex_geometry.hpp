#pragma once

#include "aeq/types.hpp"

namespace aeq {

struct SphereSpec {
  Eigen::RowVectorXd center;
  double radius = 0.0;
};

struct DeviationSum {
  double s = 0.0;
  bool applicable = false;  // |s| >= sqrt(k) - zero_eps
};

struct IntersectionRadius {
  double r_prime = 0.0;
  double x = 0.0;          // ||w0 - o||
  double cos_theta = 0.0;
  bool bound_asserted = false;  // deviation sum applicable
  bool bound_holds = false;     // r' <= 1/sqrt(2) + zero_eps
};

struct CommonNeighborReport {
  std::vector<int> neighbors;
  double s = 0.0;
  int k = 0;  // witnesses remaining after dropping apex neighbors
  bool applicable = false;
  bool pass = false;  // count <= 2d+2; true when not applicable
  int limit = 0;      // 2d + 2
};

/// Circumradius of a unit (k-1)-simplex: sqrt((k-1) / (2k)).
double circumradius(int k);

/// The sphere containing every point at unit distance from all rows of ws:
/// center at the barycenter, radius sqrt((k+1) / (2k)). Rows of ws must be
/// pairwise unit-distant within unit_eps.
SphereSpec common_sphere(const Eigen::MatrixXd& ws, const Tolerance& tol);

/// s = sum_i (||w0 - w_i||^2 - 1); applicable when |s| >= sqrt(k).
DeviationSum deviation_sum(const Eigen::RowVectorXd& w0,
                           const Eigen::MatrixXd& ws, const Tolerance& tol);

/// Residual of k(s+k) = k(k-1)/2 + k^2 x^2 with x = ||w0 - o||.
double apex_identity_residual(const Eigen::RowVectorXd& w0,
                              const Eigen::MatrixXd& ws, const Tolerance& tol);

/// g(x) = (k-1)/(4kx) + x/2.
double g_function(double x, int k);

/// Radius of S(w0, 1) intersected with the common sphere of ws, via the Law
/// of Cosines at w0. When the deviation sum is applicable the bound
/// r' <= 1/sqrt(2) is asserted.
IntersectionRadius intersection_radius(const Eigen::RowVectorXd& w0,
                                       const Eigen::MatrixXd& ws,
                                       const Tolerance& tol);

/// Vertices at unit distance from the apex and every witness. Witnesses at
/// unit distance from the apex are dropped before computing s; the 2d+2
/// bound is asserted only when |s| >= sqrt(k) over the remaining witnesses.
CommonNeighborReport common_neighbors(const PointSet& ps, int apex,
                                      const std::vector<int>& witness_idxs,
                                      const Tolerance& tol);

}  // namespace aeq
