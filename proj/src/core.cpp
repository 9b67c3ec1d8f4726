#include "aeq/core.hpp"

#include <algorithm>
#include <cmath>

namespace aeq {

PointSet::PointSet(int dim, Eigen::MatrixXd coords, bool allow_duplicates)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ < 1) throw std::invalid_argument("PointSet: dim must be positive");
  if (coords_.rows() < 1) throw std::invalid_argument("PointSet: need n >= 1");
  if (coords_.cols() != dim_) {
    throw std::invalid_argument("PointSet: coordinate width does not match dim");
  }
  if (!coords_.allFinite()) {
    throw std::invalid_argument("PointSet: non-finite coordinate");
  }
  if (!allow_duplicates) {
    const int n = size();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (distance(i, j) <= kDistinctnessTol) {
          throw std::invalid_argument("PointSet: duplicate points at indices " +
                                      std::to_string(i) + ", " +
                                      std::to_string(j));
        }
      }
    }
  }
}

UnitDistanceGraph::UnitDistanceGraph(int n,
                                     std::vector<std::pair<int, int>> edges,
                                     double tolerance)
    : n_(n), tolerance_(tolerance), adj_(static_cast<size_t>(n) * n, 0),
      degree_(n, 0) {
  if (n < 0) throw std::invalid_argument("UnitDistanceGraph: negative size");
  if (tolerance < 0) {
    throw std::invalid_argument("UnitDistanceGraph: negative tolerance");
  }
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("UnitDistanceGraph: self-loop");
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw std::invalid_argument("UnitDistanceGraph: vertex out of range");
    }
    if (a > b) std::swap(a, b);
    if (adj_[a * n_ + b]) continue;
    adj_[a * n_ + b] = adj_[b * n_ + a] = 1;
    ++degree_[a];
    ++degree_[b];
    edges_.emplace_back(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
}

Eigen::MatrixXd squared_distance_matrix(const PointSet& ps) {
  const int n = ps.size();
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      v(i, j) = v(j, i) = ps.squared_distance(i, j);
    }
  }
  return v;
}

Eigen::MatrixXd matrix_u(const PointSet& ps) {
  const int n = ps.size();
  Eigen::MatrixXd u = squared_distance_matrix(ps);
  u.array() -= 1.0;
  u.diagonal().setZero();
  return u;
}

UnitDistanceGraph unit_distance_graph(const PointSet& ps,
                                      const Tolerance& tol) {
  tol.validate();
  const int n = ps.size();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(ps.distance(i, j) - 1.0) <= tol.unit_eps) {
        edges.emplace_back(i, j);
      }
    }
  }
  return UnitDistanceGraph(n, std::move(edges), tol.unit_eps);
}

AlmostEquidistantVerdict is_almost_equidistant(const PointSet& ps,
                                               const Tolerance& tol) {
  const UnitDistanceGraph g = unit_distance_graph(ps, tol);
  const int n = g.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!g.adjacent(i, k) && !g.adjacent(j, k)) {
          return {false, TripleWitness{{i, j, k}}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

double barycenter_identity_residual(const PointSet& x, const PointSet& y) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("barycenter identity: dimension mismatch");
  }
  if (x.size() != y.size()) {
    throw std::invalid_argument("barycenter identity: cardinality mismatch");
  }
  const int n = x.size();
  double lhs = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      lhs += (x.point(i) - y.point(j)).squaredNorm();
    }
  }
  double rhs = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      rhs += (x.point(i) - x.point(j)).squaredNorm();
      rhs += (y.point(i) - y.point(j)).squaredNorm();
    }
  }
  const Eigen::RowVectorXd xbar = x.coords().colwise().mean();
  const Eigen::RowVectorXd ybar = y.coords().colwise().mean();
  rhs += static_cast<double>(n) * n * (xbar - ybar).squaredNorm();
  return std::abs(lhs - rhs);
}

double diameter(const PointSet& ps) {
  const int n = ps.size();
  if (n < 2) throw std::invalid_argument("diameter: need n >= 2");
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      best = std::max(best, ps.distance(i, j));
    }
  }
  return best;
}

}  // namespace aeq
