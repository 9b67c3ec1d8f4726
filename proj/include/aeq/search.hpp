#pragma once

#include "aeq/spectral.hpp"
#include "aeq/types.hpp"

#include <cstdint>

namespace aeq {

struct SearchConfig {
  int d = 2;
  int target_n = 7;
  std::uint64_t seed = 0;
  int restarts = 8;
  int max_iters = 2000;
  double step_init = 0.01;
  double penalty_accept = 1e-12;
  std::optional<double> budget_seconds;

  void validate() const;
};

struct OptimizeResult {
  Eigen::MatrixXd coords;
  double penalty = 0.0;
  int iterations = 0;
};

struct RestartTrace {
  int restart_index = 0;
  std::uint64_t seed = 0;
  int iterations = 0;
  int n = 0;
  double final_penalty = 0.0;
};

struct SearchResult {
  PointSet best;
  int n_achieved = 0;
  double penalty = 0.0;
  bool verified = false;
  CertificateReport certificates;
  std::vector<RestartTrace> trace;
};

/// Thrown when the objective turns non-finite; carries the last valid iterate.
struct NumericFailure : std::runtime_error {
  NumericFailure(const std::string& what, Eigen::MatrixXd iterate)
      : std::runtime_error(what), last_iterate(std::move(iterate)) {}
  Eigen::MatrixXd last_iterate;
};

/// Sum over all index triples of the squared deviation of the best pair:
/// min over the triple's 3 pairs of (||v_i - v_j||^2 - 1)^2. Zero iff the
/// configuration is exactly almost-equidistant. Zero for n < 3.
double penalty(const Eigen::MatrixXd& coords);
double penalty(const PointSet& ps);

/// Gradient of the penalty, charging each triple's argmin pair (ties to the
/// lexicographically smallest pair). One row per point.
Eigen::MatrixXd penalty_gradient(const Eigen::MatrixXd& coords);
Eigen::MatrixXd penalty_gradient(const PointSet& ps);

/// Gradient descent with backtracking line search: halve the step on
/// non-decrease, grow it 1.2x on success. Stops at penalty <= penalty_accept,
/// gradient norm <= 1e-10, or max_iters. Monotone over accepted steps.
OptimizeResult optimize(const PointSet& ps0, const SearchConfig& cfg);

/// Tries to append one point (seeded samples in the inflated bounding ball),
/// reoptimizing locally then globally; accepts iff the extended set verifies
/// almost-equidistant at unit_eps 1e-6 with penalty <= penalty_accept.
std::optional<PointSet> greedy_extend(const PointSet& ps,
                                      const SearchConfig& cfg);

/// Restart driver: the seeded two-simplex union plus random restarts,
/// interleaving optimize and greedy_extend. Deterministic per config; the
/// winner is (max n, min penalty, lowest restart index). Falls back to the
/// seeded construction when nothing better verifies.
SearchResult search(const SearchConfig& cfg);

}  // namespace aeq
