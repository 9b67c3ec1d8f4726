#pragma once

#include "aeq/types.hpp"

#include <string>

namespace aeq {

/// Real eigenvalues in ascending order plus the spectral radius.
struct Spectrum {
  Eigen::VectorXd values;  // ascending
  double scale = 0.0;      // max |value|
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double margin = 0.0;  // signed slack; >= 0 iff pass
};

/// Spectral certificate for a point set: the distance-matrix eigenvalue
/// counts, trace diagnostics and the rank bound, each with its margin.
struct CertificateReport {
  int n = 0;
  int d = 0;
  int positive_count_V = 0;
  int above_one_count_U = 0;
  int equal_one_count_U = 0;
  double trace_U = 0.0;
  double trace_U_cubed = 0.0;
  int rank_W = 0;
  double lambda_max_U = 0.0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  const CheckResult* find(const std::string& name) const;
};

struct GershgorinDisk {
  double center = 0.0;  // diagonal entry
  double radius = 0.0;  // off-diagonal absolute row sum
  int row = 0;
};

struct GershgorinReport {
  std::vector<GershgorinDisk> disks;
  bool contained = false;   // every eigenvalue lies in the disk union
  double worst_margin = 0;  // min over eigenvalues of (slack to nearest disk)
};

struct WitnessRow {
  int row = 0;
  double offdiag_sum = 0.0;
};

struct SignSubset {
  std::vector<int> indices;  // positions into the input list
  double sum = 0.0;
};

struct WeylReport {
  bool pass = false;
  double worst_margin = 0.0;
};

struct RankReport {
  int rank = 0;
  int max_allowed = 0;  // d + 2
  bool rank_ok = false;
  int positive_count = 0;  // eigenvalues of W above eig_eps * scale
  bool positive_ok = false;
};

struct TraceReport {
  double trace_U = 0.0;
  double trace_U_cubed = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct CubicSumReport {
  bool hypothesis = false;
  bool conclusion = false;  // meaningful only when hypothesis holds
  double l = 0.0;
  double sum_cubes = 0.0;
  double required = 0.0;  // (m + 3l) y^3
};

struct FirstCaseReport {
  bool applicable = false;
  std::string failed_precondition;  // empty when applicable
  int k = 0;
  double sum_neg = 0.0;    // sum of -lambda_i
  double sum_neg3 = 0.0;   // sum of (-lambda_i)^3
  double dev_sum = 0.0;    // |sum_neg - (n - k)|
  double dev_sum3 = 0.0;   // |sum_neg3 - (n - k)|
  bool pass = false;
};

/// All eigenvalues of a symmetric matrix, ascending. The input may be
/// asymmetric up to 1e-12 relative and is symmetrized as (M + M^T)/2.
Spectrum sym_eigenvalues(const Eigen::MatrixXd& m);

/// Counts: exactly one positive eigenvalue of V; at most one eigenvalue of U
/// above 1; at least n-d-2 eigenvalues of U equal to 1 (within eig_eps*scale).
CertificateReport certify_distance_spectrum(const PointSet& ps,
                                            const Tolerance& tol);

/// tr(U) = 0 exactly and |tr(U^3)| <= zero_eps * n * (1 + max|U|)^3 after
/// snapping near-unit entries to 0. Requires an almost-equidistant input.
TraceReport trace_conditions(const PointSet& ps, const Tolerance& tol);

/// One disk per row plus the containment verdict for every eigenvalue.
GershgorinReport gershgorin_disks(const Eigen::MatrixXd& m,
                                  const Tolerance& tol);

/// A row of U whose off-diagonal absolute sum is >= lambda - eig_eps*scale.
/// lambda must be an eigenvalue of U within slack; ties break to lowest row.
WitnessRow gershgorin_witness_row(const Eigen::MatrixXd& u, double lambda,
                                  const Tolerance& tol);

/// Among the first 2t values, picks a one-signed subset of size <= t with
/// |sum| > sqrt(t): the larger-total sign class, ordered by descending
/// absolute value then index. Returns nullopt when no such subset results.
std::optional<SignSubset> same_sign_subset(const std::vector<double>& values,
                                           int t);

/// Checks both Weyl inequality families for eigenvalues of A, B and A + B.
WeylReport weyl_inequality_check(const Eigen::MatrixXd& a,
                                 const Eigen::MatrixXd& b,
                                 const Tolerance& tol);

/// Numeric rank of W = V - J (singular values above 1e-8 relative) with the
/// verdicts rank <= d+2 and at most one positive eigenvalue.
RankReport rank_w_bound(const PointSet& ps, const Tolerance& tol);

/// Given x_i >= -y and l = (sum x_i)/y - m >= 0, asserts
/// sum x_i^3 >= (m + 3l) y^3.
CubicSumReport cubic_sum_check(const std::vector<double>& xs, double y,
                               const Tolerance& tol);

/// Replays the first-case bookkeeping: the eigenvalues of U below 1 satisfy
/// sum(-lambda_i) = sum(-lambda_i)^3 = n - k.
FirstCaseReport first_case_sums(const PointSet& ps, const Tolerance& tol);

/// Full certificate: spectral counts plus trace, non-neighbor, Gershgorin
/// containment and diameter checks, for the CLI certify surface.
CertificateReport full_certificate(const PointSet& ps, const Tolerance& tol);

}  // namespace aeq
