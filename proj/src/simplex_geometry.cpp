#include "aeq/simplex_geometry.hpp"

#include <algorithm>
#include <cmath>

namespace aeq {

namespace {

void require_unit_simplex(const Eigen::MatrixXd& ws, const Tolerance& tol) {
  const int k = static_cast<int>(ws.rows());
  if (k < 1) throw std::invalid_argument("need at least one witness point");
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const double dist = (ws.row(i) - ws.row(j)).norm();
      if (std::abs(dist - 1.0) > tol.unit_eps) {
        throw std::invalid_argument(
            "witness points are not a unit simplex: pair (" +
            std::to_string(i) + "," + std::to_string(j) + ") at distance " +
            std::to_string(dist));
      }
    }
  }
}

}  // namespace

double circumradius(int k) {
  if (k < 1) throw std::invalid_argument("circumradius: k >= 1");
  return std::sqrt((k - 1.0) / (2.0 * k));
}

SphereSpec common_sphere(const Eigen::MatrixXd& ws, const Tolerance& tol) {
  tol.validate();
  require_unit_simplex(ws, tol);
  const int k = static_cast<int>(ws.rows());
  if (k > ws.cols()) {
    throw std::invalid_argument("common_sphere: k points need dimension >= k");
  }
  SphereSpec sphere;
  sphere.center = ws.colwise().mean();
  sphere.radius = std::sqrt((k + 1.0) / (2.0 * k));
  return sphere;
}

DeviationSum deviation_sum(const Eigen::RowVectorXd& w0,
                           const Eigen::MatrixXd& ws, const Tolerance& tol) {
  tol.validate();
  if (w0.size() != ws.cols()) {
    throw std::invalid_argument("deviation_sum: dimension mismatch");
  }
  const int k = static_cast<int>(ws.rows());
  DeviationSum dev;
  for (int i = 0; i < k; ++i) {
    dev.s += (w0 - ws.row(i)).squaredNorm() - 1.0;
  }
  dev.applicable = std::abs(dev.s) >= std::sqrt(static_cast<double>(k)) -
                                          tol.zero_eps;
  return dev;
}

double apex_identity_residual(const Eigen::RowVectorXd& w0,
                              const Eigen::MatrixXd& ws, const Tolerance& tol) {
  tol.validate();
  require_unit_simplex(ws, tol);
  const int k = static_cast<int>(ws.rows());
  const double s = deviation_sum(w0, ws, tol).s;
  const Eigen::RowVectorXd o = ws.colwise().mean();
  const double x2 = (w0 - o).squaredNorm();
  return std::abs(k * (s + k) - k * (k - 1.0) / 2.0 -
                  static_cast<double>(k) * k * x2);
}

double g_function(double x, int k) {
  if (k < 1) throw std::invalid_argument("g_function: k >= 1");
  if (!(x > 0.0)) throw std::invalid_argument("g_function: x > 0");
  return (k - 1.0) / (4.0 * k * x) + x / 2.0;
}

IntersectionRadius intersection_radius(const Eigen::RowVectorXd& w0,
                                       const Eigen::MatrixXd& ws,
                                       const Tolerance& tol) {
  tol.validate();
  require_unit_simplex(ws, tol);
  const int k = static_cast<int>(ws.rows());
  const Eigen::RowVectorXd o = ws.colwise().mean();
  const double r = std::sqrt((k + 1.0) / (2.0 * k));

  IntersectionRadius result;
  result.x = (w0 - o).norm();
  if (result.x < std::abs(r - 1.0) - tol.zero_eps ||
      result.x > r + 1.0 + tol.zero_eps) {
    throw std::invalid_argument(
        "intersection_radius: spheres S(w0,1) and S(o,r) do not intersect");
  }
  // Law of Cosines at w0 for the triangle (z, w0, o) with ||z - w0|| = 1.
  result.cos_theta =
      (1.0 + result.x * result.x - (k + 1.0) / (2.0 * k)) / (2.0 * result.x);
  result.cos_theta = std::clamp(result.cos_theta, -1.0, 1.0);
  result.r_prime = std::sqrt(1.0 - result.cos_theta * result.cos_theta);

  const DeviationSum dev = deviation_sum(w0, ws, tol);
  result.bound_asserted = dev.applicable;
  result.bound_holds =
      !dev.applicable ||
      result.r_prime <= 1.0 / std::sqrt(2.0) + tol.zero_eps;
  return result;
}

CommonNeighborReport common_neighbors(const PointSet& ps, int apex,
                                      const std::vector<int>& witness_idxs,
                                      const Tolerance& tol) {
  tol.validate();
  const int n = ps.size();
  if (apex < 0 || apex >= n) {
    throw std::invalid_argument("common_neighbors: apex out of range");
  }
  for (int w : witness_idxs) {
    if (w < 0 || w >= n || w == apex) {
      throw std::invalid_argument("common_neighbors: bad witness index");
    }
  }

  // Witnesses already adjacent to the apex do not
  // constrain anything beyond their own adjacency; drop them from s.
  std::vector<int> active;
  for (int w : witness_idxs) {
    if (std::abs(ps.distance(apex, w) - 1.0) > tol.unit_eps) active.push_back(w);
  }

  CommonNeighborReport report;
  report.k = static_cast<int>(active.size());
  report.limit = 2 * ps.dim() + 2;
  for (int w : active) {
    report.s += ps.squared_distance(apex, w) - 1.0;
  }
  report.applicable =
      report.k >= 1 &&
      std::abs(report.s) >=
          std::sqrt(static_cast<double>(report.k)) - tol.zero_eps;

  for (int v = 0; v < n; ++v) {
    if (v == apex) continue;
    if (std::find(witness_idxs.begin(), witness_idxs.end(), v) !=
        witness_idxs.end()) {
      continue;
    }
    bool adjacent_to_all = std::abs(ps.distance(apex, v) - 1.0) <= tol.unit_eps;
    for (size_t i = 0; adjacent_to_all && i < witness_idxs.size(); ++i) {
      adjacent_to_all =
          std::abs(ps.distance(witness_idxs[i], v) - 1.0) <= tol.unit_eps;
    }
    if (adjacent_to_all) report.neighbors.push_back(v);
  }
  report.pass = !report.applicable ||
                static_cast<int>(report.neighbors.size()) <= report.limit;
  return report;
}

}  // namespace aeq
