#include "aeq/constructions.hpp"

#include "aeq/core.hpp"
#include "aeq/rng.hpp"

#include <cmath>
#include <limits>

namespace aeq {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Random orthogonal matrix: Gram-Schmidt on a Gaussian matrix with signs
/// fixed so the result is deterministic per seed.
Eigen::MatrixXd random_orthogonal(int d, Rng& rng) {
  Eigen::MatrixXd a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  }
  return q;
}

}  // namespace

PointSet regular_unit_simplex(int m, int d) {
  if (m < 1) throw std::invalid_argument("regular_unit_simplex: m >= 1");
  if (m > d) {
    throw std::invalid_argument(
        "regular_unit_simplex: a unit m-simplex needs dimension >= m");
  }
  // Vertices e_i / sqrt(2) for i = 1..m plus t * (1,...,1) with t solving
  // m t^2 - sqrt(2) t - 1/2 = 0, then centered at the barycenter.
  Eigen::MatrixXd coords = Eigen::MatrixXd::Zero(m + 1, d);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < m; ++i) coords(i, i) = inv_sqrt2;
  const double t = (1.0 + std::sqrt(m + 1.0)) / (std::sqrt(2.0) * m);
  coords.row(m).head(m).setConstant(t);

  const Eigen::RowVectorXd center = coords.colwise().mean();
  coords.rowwise() -= center;
  return PointSet(d, std::move(coords));
}

double alpha_d(int d) {
  if (d < 1) throw std::invalid_argument("alpha_d: d >= 1");
  return 2.0 * std::asin(std::sqrt((d + 1.0) / (2.0 * d)));
}

double scale_k(double alpha) {
  if (!(alpha > 0.0) || alpha > kPi) {
    throw std::invalid_argument("scale_k: alpha must lie in (0, pi]");
  }
  return 1.0 / (2.0 * std::sin(alpha / 2.0));
}

PointSet two_simplex_union(int d, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("two_simplex_union: d >= 2");
  const PointSet simplex = regular_unit_simplex(d, d);

  // Normalize the centered simplex vertices onto the unit sphere; pairwise
  // angles are then alpha_d.
  Eigen::MatrixXd unit = simplex.coords();
  for (int i = 0; i <= d; ++i) unit.row(i) /= unit.row(i).norm();

  const double k = scale_k(alpha_d(d));
  for (int attempt = 0; attempt < 16; ++attempt) {
    Rng rng(seed + static_cast<std::uint64_t>(attempt) * 0x9e3779b97f4a7c15ULL);
    const Eigen::MatrixXd q = random_orthogonal(d, rng);

    Eigen::MatrixXd coords(2 * d + 2, d);
    coords.topRows(d + 1) = k * unit;
    coords.bottomRows(d + 1) = k * unit * q.transpose();

    // Cross-copy collisions are the only way distinctness can fail.
    double min_dist = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= d; ++i) {
      for (int j = d + 1; j < 2 * d + 2; ++j) {
        min_dist = std::min(min_dist, (coords.row(i) - coords.row(j)).norm());
      }
    }
    if (min_dist > kDistinctnessTol) {
      return PointSet(d, std::move(coords));
    }
  }
  throw std::runtime_error(
      "two_simplex_union: copies collide after 16 reseeded attempts");
}

PointSet moser_spindle() {
  // Two rhombi (each two unit triangles glued along an edge) sharing the
  // apex at the origin; far tips sit at distance sqrt(3). Rotating the
  // second rhombus by 2 arcsin(1/(2 sqrt(3))) puts the tips at distance 1.
  const double rot = 2.0 * std::asin(1.0 / (2.0 * std::sqrt(3.0)));

  auto rhombus = [](double base_angle) {
    // Apex omitted; returns the three non-apex vertices a, b, a+b where
    // a and b are unit vectors 60 degrees apart.
    Eigen::Matrix<double, 3, 2> pts;
    const double a0 = base_angle - kPi / 6.0;
    const double a1 = base_angle + kPi / 6.0;
    pts << std::cos(a0), std::sin(a0), std::cos(a1), std::sin(a1),
        std::cos(a0) + std::cos(a1), std::sin(a0) + std::sin(a1);
    return pts;
  };

  Eigen::MatrixXd coords(7, 2);
  coords.row(0).setZero();
  coords.block<3, 2>(1, 0) = rhombus(kPi / 2.0);
  coords.block<3, 2>(4, 0) = rhombus(kPi / 2.0 + rot);
  return PointSet(2, std::move(coords));
}

}  // namespace aeq
