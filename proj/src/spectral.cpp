#include "aeq/spectral.hpp"

#include "aeq/core.hpp"
#include "aeq/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace aeq {

bool CertificateReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* CertificateReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Spectrum sym_eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("sym_eigenvalues: matrix not square");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument("sym_eigenvalues: non-finite entry");
  }
  const double magnitude = m.cwiseAbs().maxCoeff();
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(magnitude, 1.0)) {
    throw std::invalid_argument("sym_eigenvalues: matrix not symmetric");
  }
  const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("sym_eigenvalues: eigensolver failed");
  }
  Spectrum spec;
  spec.values = solver.eigenvalues();
  spec.scale = spec.values.size() ? spec.values.cwiseAbs().maxCoeff() : 0.0;
  return spec;
}

CertificateReport certify_distance_spectrum(const PointSet& ps,
                                            const Tolerance& tol) {
  tol.validate();
  const int n = ps.size();
  if (n < 2) throw std::invalid_argument("certify_distance_spectrum: n >= 2");
  const int d = ps.dim();

  CertificateReport report;
  report.n = n;
  report.d = d;

  const Eigen::MatrixXd v = squared_distance_matrix(ps);
  const Eigen::MatrixXd u = matrix_u(ps);
  const Spectrum sv = sym_eigenvalues(v);
  const Spectrum su = sym_eigenvalues(u);

  const double thr_v = tol.eig_eps * sv.scale;
  const double thr_u = tol.eig_eps * su.scale;

  report.positive_count_V =
      static_cast<int>((sv.values.array() > thr_v).count());
  report.above_one_count_U =
      static_cast<int>((su.values.array() > 1.0 + thr_u).count());
  report.equal_one_count_U =
      static_cast<int>(((su.values.array() - 1.0).abs() <= thr_u).count());
  report.lambda_max_U = su.values(n - 1);
  report.trace_U = u.trace();
  report.trace_U_cubed = (u * u * u).trace();

  // Exactly one positive eigenvalue of V for distinct points. The margin is the
  // smaller of (largest eigenvalue above threshold, second-largest below).
  {
    const double top = sv.values(n - 1) - thr_v;
    const double second = thr_v - sv.values(n - 2);
    report.checks.push_back({"v_positive_count",
                             report.positive_count_V == 1,
                             std::min(top, second)});
  }
  // At most one eigenvalue of U above 1.
  {
    const double second = n >= 2 ? su.values(n - 2) : 0.0;
    report.checks.push_back({"u_above_one_count",
                             report.above_one_count_U <= 1,
                             1.0 + thr_u - second});
  }
  // At least n-d-2 eigenvalues of U equal to 1.
  {
    const int required = n - d - 2;
    report.checks.push_back(
        {"u_equal_one_count", report.equal_one_count_U >= required,
         static_cast<double>(report.equal_one_count_U - required)});
  }
  // Rank bound on W = V - J.
  {
    const RankReport rw = rank_w_bound(ps, tol);
    report.rank_W = rw.rank;
    report.checks.push_back(
        {"rank_w", rw.rank_ok && rw.positive_ok,
         static_cast<double>(rw.max_allowed - rw.rank)});
  }
  return report;
}

TraceReport trace_conditions(const PointSet& ps, const Tolerance& tol) {
  tol.validate();
  const auto verdict = is_almost_equidistant(ps, tol);
  if (!verdict.holds) {
    const auto& w = verdict.witness->indices;
    throw std::invalid_argument(
        "trace_conditions: input not almost-equidistant, witness triple (" +
        std::to_string(w[0] + 1) + "," + std::to_string(w[1] + 1) + "," +
        std::to_string(w[2] + 1) + ")");
  }
  const int n = ps.size();
  Eigen::MatrixXd u = matrix_u(ps);
  // Snap near-unit entries to exact zero so the triple-product property
  // u_ij u_jk u_ki = 0 holds for numerically constructed sets.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && std::abs(u(i, j)) <= tol.unit_eps) u(i, j) = 0.0;
    }
  }
  TraceReport report;
  report.trace_U = u.trace();
  report.trace_U_cubed = (u * u * u).trace();
  const double umax = u.cwiseAbs().maxCoeff();
  report.bound = tol.zero_eps * n * std::pow(1.0 + umax, 3);
  report.pass =
      report.trace_U == 0.0 && std::abs(report.trace_U_cubed) <= report.bound;
  return report;
}

GershgorinReport gershgorin_disks(const Eigen::MatrixXd& m,
                                  const Tolerance& tol) {
  tol.validate();
  if (m.rows() != m.cols() || !m.allFinite()) {
    throw std::invalid_argument("gershgorin_disks: need a finite square matrix");
  }
  const int n = static_cast<int>(m.rows());
  GershgorinReport report;
  report.disks.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double radius = m.row(k).cwiseAbs().sum() - std::abs(m(k, k));
    report.disks.push_back({m(k, k), radius, k});
  }
  const Spectrum spec = sym_eigenvalues(m);
  const double slack = tol.eig_eps * spec.scale;
  report.worst_margin = std::numeric_limits<double>::infinity();
  report.contained = true;
  for (int i = 0; i < n; ++i) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& disk : report.disks) {
      best = std::max(best, disk.radius - std::abs(spec.values(i) - disk.center));
    }
    report.worst_margin = std::min(report.worst_margin, best);
    if (best < -slack) report.contained = false;
  }
  return report;
}

WitnessRow gershgorin_witness_row(const Eigen::MatrixXd& u, double lambda,
                                  const Tolerance& tol) {
  tol.validate();
  const Spectrum spec = sym_eigenvalues(u);
  const double slack = tol.eig_eps * spec.scale;
  const bool is_eigenvalue =
      ((spec.values.array() - lambda).abs() <= slack + 1e-300).any();
  const int n = static_cast<int>(u.rows());
  if (is_eigenvalue) {
    for (int k = 0; k < n; ++k) {
      const double sum = u.row(k).cwiseAbs().sum() - std::abs(u(k, k));
      if (sum >= lambda - slack) return {k, sum};
    }
  }
  throw std::invalid_argument(
      "gershgorin_witness_row: no qualifying row; lambda is not an eigenvalue "
      "within tolerance");
}

std::optional<SignSubset> same_sign_subset(const std::vector<double>& values,
                                           int t) {
  if (t < 1) throw std::invalid_argument("same_sign_subset: t >= 1");
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("same_sign_subset: non-finite value");
    }
  }
  const int window = std::min<int>(2 * t, static_cast<int>(values.size()));
  std::vector<int> idx(window);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const double fa = std::abs(values[a]), fb = std::abs(values[b]);
    if (fa != fb) return fa > fb;
    return a < b;
  });

  double pos_total = 0.0, neg_total = 0.0;
  for (int i : idx) {
    if (values[i] > 0) pos_total += values[i];
    else neg_total += -values[i];
  }
  const bool take_positive = pos_total >= neg_total;

  SignSubset subset;
  for (int i : idx) {
    if (static_cast<int>(subset.indices.size()) >= t) break;
    const double v = values[i];
    if ((take_positive && v > 0) || (!take_positive && v < 0)) {
      subset.indices.push_back(i);
      subset.sum += v;
    }
  }
  std::sort(subset.indices.begin(), subset.indices.end());
  if (std::abs(subset.sum) > std::sqrt(static_cast<double>(t))) return subset;
  return std::nullopt;
}

WeylReport weyl_inequality_check(const Eigen::MatrixXd& a,
                                 const Eigen::MatrixXd& b,
                                 const Tolerance& tol) {
  tol.validate();
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("weyl_inequality_check: size mismatch");
  }
  const Spectrum sa = sym_eigenvalues(a);
  const Spectrum sb = sym_eigenvalues(b);
  const Spectrum sc = sym_eigenvalues(a + b);
  const int n = static_cast<int>(a.rows());

  WeylReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  // One-based index arithmetic from the inequality statement.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i >= j) {
        const double m =
            sc.values(i - 1) - sa.values(j - 1) - sb.values(i - j + 1 - 1);
        report.worst_margin = std::min(report.worst_margin, m);
      }
      if (i <= j) {
        const double m =
            sa.values(j - 1) + sb.values(i - j + n - 1) - sc.values(i - 1);
        report.worst_margin = std::min(report.worst_margin, m);
      }
    }
  }
  const double slack = tol.eig_eps * std::max({sa.scale, sb.scale, sc.scale});
  report.pass = report.worst_margin >= -slack;
  return report;
}

RankReport rank_w_bound(const PointSet& ps, const Tolerance& tol) {
  tol.validate();
  const int n = ps.size();
  if (n < 2) throw std::invalid_argument("rank_w_bound: n >= 2");
  const Eigen::MatrixXd w =
      squared_distance_matrix(ps) - Eigen::MatrixXd::Ones(n, n);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(w);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double cutoff = 1e-8 * sigma(0);

  RankReport report;
  report.rank = static_cast<int>((sigma.array() > cutoff).count());
  report.max_allowed = ps.dim() + 2;
  report.rank_ok = report.rank <= report.max_allowed;

  const Spectrum spec = sym_eigenvalues(w);
  report.positive_count =
      static_cast<int>((spec.values.array() > tol.eig_eps * spec.scale).count());
  report.positive_ok = report.positive_count <= 1;
  return report;
}

CubicSumReport cubic_sum_check(const std::vector<double>& xs, double y,
                               const Tolerance& tol) {
  tol.validate();
  if (!(y > 0)) throw std::invalid_argument("cubic_sum_check: y > 0");
  const int m = static_cast<int>(xs.size());
  double sum = 0.0, sum_cubes = 0.0;
  bool bounded_below = true;
  for (double x : xs) {
    if (x < -y - tol.zero_eps) bounded_below = false;
    sum += x;
    sum_cubes += x * x * x;
  }
  CubicSumReport report;
  report.l = sum / y - m;
  report.hypothesis = bounded_below && report.l >= -tol.zero_eps;
  report.sum_cubes = sum_cubes;
  report.required = (m + 3.0 * report.l) * y * y * y;
  report.conclusion =
      report.hypothesis && sum_cubes >= report.required - tol.zero_eps;
  return report;
}

FirstCaseReport first_case_sums(const PointSet& ps, const Tolerance& tol) {
  tol.validate();
  FirstCaseReport report;
  const auto verdict = is_almost_equidistant(ps, tol);
  if (!verdict.holds) {
    report.failed_precondition = "input is not almost-equidistant";
    return report;
  }
  const int n = ps.size();
  const Spectrum su = sym_eigenvalues(matrix_u(ps));
  const double thr = tol.eig_eps * su.scale;
  if ((su.values.array() > 1.0 + thr).any()) {
    report.failed_precondition = "U has an eigenvalue greater than 1";
    return report;
  }
  report.applicable = true;
  for (int i = 0; i < n; ++i) {
    const double lam = su.values(i);
    if (lam < 1.0 - thr) {
      ++report.k;
      report.sum_neg += -lam;
      report.sum_neg3 += -lam * lam * lam;
    }
  }
  const double target = static_cast<double>(n - report.k);
  report.dev_sum = std::abs(report.sum_neg - target);
  report.dev_sum3 = std::abs(report.sum_neg3 - target);
  const double bound =
      tol.zero_eps * n * std::pow(std::max(1.0, su.scale), 3);
  report.pass = report.dev_sum <= bound && report.dev_sum3 <= bound;
  return report;
}

CertificateReport full_certificate(const PointSet& ps, const Tolerance& tol) {
  CertificateReport report = certify_distance_spectrum(ps, tol);

  const auto verdict = is_almost_equidistant(ps, tol);
  report.checks.push_back(
      {"almost_equidistant", verdict.holds, verdict.holds ? 0.0 : -1.0});

  if (verdict.holds) {
    const TraceReport tr = trace_conditions(ps, tol);
    report.trace_U = tr.trace_U;
    report.trace_U_cubed = tr.trace_U_cubed;
    report.checks.push_back({"trace_conditions", tr.pass,
                             tr.bound - std::abs(tr.trace_U_cubed)});
  } else {
    report.checks.push_back({"trace_conditions", false, -1.0});
  }

  const UnitDistanceGraph g = unit_distance_graph(ps, tol);
  const auto violations = non_neighbor_violations(g, ps.dim());
  double worst = std::numeric_limits<double>::infinity();
  for (int v = 0; v < g.size(); ++v) {
    worst = std::min(
        worst, static_cast<double>(ps.dim() + 1 - (g.size() - 1 - g.degree(v))));
  }
  report.checks.push_back({"non_neighbor_bound", violations.empty(), worst});

  const GershgorinReport gr = gershgorin_disks(matrix_u(ps), tol);
  report.checks.push_back(
      {"gershgorin_containment", gr.contained, gr.worst_margin});

  if (verdict.holds) {
    const DiameterBoundReport db = diameter_bound_check(ps, tol);
    report.checks.push_back(
        {"diameter_bound", db.pass,
         db.applicable ? static_cast<double>(db.limit - db.n) : 0.0});
  } else {
    report.checks.push_back({"diameter_bound", false, -1.0});
  }
  return report;
}

}  // namespace aeq
