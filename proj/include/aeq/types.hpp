#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace aeq {

/// Numeric slacks used throughout. unit_eps decides unit distance,
/// eig_eps is relative to the spectral radius, zero_eps bounds residuals.
struct Tolerance {
  double unit_eps = 1e-9;
  double eig_eps = 1e-7;
  double zero_eps = 1e-9;

  void validate() const {
    if (!(unit_eps > 0 && unit_eps < 0.1) || !(eig_eps > 0 && eig_eps < 0.1) ||
        !(zero_eps > 0 && zero_eps < 0.1)) {
      throw std::invalid_argument("Tolerance values must lie in (0, 0.1)");
    }
  }
};

/// Minimum separation below which two points count as duplicates.
inline constexpr double kDistinctnessTol = 1e-6;

/// An ordered list of n points in R^d, stored as an n x d matrix.
/// Points are pairwise distinct unless duplicates are explicitly allowed
/// (only the barycenter identity needs that).
class PointSet {
 public:
  PointSet(int dim, Eigen::MatrixXd coords, bool allow_duplicates = false);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(coords_.rows()); }
  const Eigen::MatrixXd& coords() const { return coords_; }
  Eigen::RowVectorXd point(int i) const { return coords_.row(i); }

  double squared_distance(int i, int j) const {
    return (coords_.row(i) - coords_.row(j)).squaredNorm();
  }
  double distance(int i, int j) const {
    return (coords_.row(i) - coords_.row(j)).norm();
  }

 private:
  int dim_;
  Eigen::MatrixXd coords_;
};

/// Graph on point indices with edges at (approximately) unit distance.
class UnitDistanceGraph {
 public:
  UnitDistanceGraph(int n, std::vector<std::pair<int, int>> edges,
                    double tolerance);

  int size() const { return n_; }
  double tolerance() const { return tolerance_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int i, int j) const { return adj_[i * n_ + j]; }
  int degree(int i) const { return degree_[i]; }

 private:
  int n_;
  double tolerance_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<char> adj_;
  std::vector<int> degree_;
};

struct TripleWitness {
  std::array<int, 3> indices;  // zero-based, ascending
};

struct AlmostEquidistantVerdict {
  bool holds = false;
  std::optional<TripleWitness> witness;  // set when holds is false
};

}  // namespace aeq
