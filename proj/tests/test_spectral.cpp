#include "aeq/constructions.hpp"
#include "aeq/core.hpp"
#include "aeq/spectral.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace aeq;
using namespace aeq::testutil;

namespace {
const Tolerance kTol{};
}

TEST_CASE("sym_eigenvalues on closed forms") {
  const Spectrum id3 = sym_eigenvalues(Eigen::MatrixXd::Identity(3, 3));
  CHECK(id3.values(0) == doctest::Approx(1.0));
  CHECK(id3.values(2) == doctest::Approx(1.0));

  Eigen::MatrixXd swap(2, 2);
  swap << 0, 1, 1, 0;
  const Spectrum sw = sym_eigenvalues(swap);
  CHECK(sw.values(0) == doctest::Approx(-1.0));
  CHECK(sw.values(1) == doctest::Approx(1.0));
  CHECK(sw.scale == doctest::Approx(1.0));

  // V of the unit triangle is J - I: eigenvalues {-1, -1, 2}.
  const Spectrum tri = sym_eigenvalues(squared_distance_matrix(unit_triangle()));
  CHECK(tri.values(0) == doctest::Approx(-1.0));
  CHECK(tri.values(1) == doctest::Approx(-1.0));
  CHECK(tri.values(2) == doctest::Approx(2.0));
}

TEST_CASE("sym_eigenvalues input validation") {
  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, 2, 0;
  CHECK_THROWS_AS(sym_eigenvalues(asym), std::invalid_argument);

  Eigen::MatrixXd nan2 = Eigen::MatrixXd::Zero(2, 2);
  nan2(0, 1) = nan2(1, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(sym_eigenvalues(nan2), std::invalid_argument);

  CHECK_THROWS_AS(sym_eigenvalues(Eigen::MatrixXd::Zero(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("sym_eigenvalues trace and Frobenius consistency") {
  Rng rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(12));
    const Eigen::MatrixXd m = random_symmetric(rng, n);
    const Spectrum spec = sym_eigenvalues(m);
    const double scale = std::max(1.0, spec.scale);
    CHECK(std::abs(spec.values.sum() - m.trace()) <= 1e-10 * scale * n);
    CHECK(std::abs(spec.values.squaredNorm() - m.squaredNorm()) <=
          1e-10 * scale * scale * n);
  }
}

TEST_CASE("certify_distance_spectrum on closed forms") {
  const CertificateReport tri = certify_distance_spectrum(unit_triangle(), kTol);
  CHECK(tri.positive_count_V == 1);
  CHECK(tri.above_one_count_U == 0);
  CHECK(tri.equal_one_count_U == 0);  // required minimum is 3-2-2 = -1
  CHECK(tri.all_pass());

  const CertificateReport line =
      certify_distance_spectrum(make_points(1, {0, 1, 2}), kTol);
  CHECK(line.positive_count_V == 1);
  CHECK(line.all_pass());
}

TEST_CASE("distance-matrix spectrum structure holds on random point sets") {
  Rng rng(505);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(19));
    const int d = 1 + static_cast<int>(rng.below(8));
    const PointSet ps = random_points(rng, n, d);
    const CertificateReport report = certify_distance_spectrum(ps, kTol);
    CHECK(report.positive_count_V == 1);
    CHECK(report.above_one_count_U <= 1);
    CHECK(report.equal_one_count_U >= n - d - 2);
  }
}

TEST_CASE("20 random points in R^3 have many unit eigenvalues of U") {
  Rng rng(606);
  const PointSet ps = random_points(rng, 20, 3);
  const CertificateReport report = certify_distance_spectrum(ps, kTol);
  CHECK(report.positive_count_V == 1);
  CHECK(report.equal_one_count_U >= 15);
}

TEST_CASE("trace_conditions") {
  const TraceReport tri = trace_conditions(unit_triangle(), kTol);
  CHECK(tri.trace_U == 0.0);
  CHECK(tri.trace_U_cubed == 0.0);
  CHECK(tri.pass);

  // U of the unit square is the adjacency matrix of a perfect matching.
  const TraceReport sq = trace_conditions(unit_square(), kTol);
  CHECK(sq.trace_U_cubed == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sq.pass);

  CHECK(trace_conditions(moser_spindle(), kTol).pass);

  CHECK_THROWS_WITH_AS(trace_conditions(collinear_024(), kTol),
                       doctest::Contains("witness triple (1,2,3)"),
                       std::invalid_argument);
}

TEST_CASE("gershgorin_disks") {
  Eigen::MatrixXd m(2, 2);
  m << 2, 1, 1, 2;
  const GershgorinReport rep = gershgorin_disks(m, kTol);
  REQUIRE(rep.disks.size() == 2);
  CHECK(rep.disks[0].center == 2.0);
  CHECK(rep.disks[0].radius == 1.0);
  CHECK(rep.contained);

  const GershgorinReport diag =
      gershgorin_disks(Eigen::Vector3d(3, -1, 7).asDiagonal(), kTol);
  for (const auto& disk : diag.disks) CHECK(disk.radius == 0.0);
  CHECK(diag.contained);
  CHECK(diag.worst_margin == doctest::Approx(0.0).epsilon(1e-12));

  const GershgorinReport sq = gershgorin_disks(matrix_u(unit_square()), kTol);
  for (const auto& disk : sq.disks) {
    CHECK(disk.center == 0.0);
    CHECK(disk.radius == doctest::Approx(1.0));
  }
  CHECK(sq.contained);
}

TEST_CASE("gershgorin containment on random symmetric matrices") {
  Rng rng(707);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(10));
    CHECK(gershgorin_disks(random_symmetric(rng, n), kTol).contained);
  }
}

TEST_CASE("gershgorin_witness_row") {
  // Collinear 0,1,2: U has eigenvalues {-3, 0, 3}.
  const Eigen::MatrixXd u = matrix_u(make_points(1, {0, 1, 2}));
  const WitnessRow row = gershgorin_witness_row(u, 3.0, kTol);
  CHECK(row.row == 0);
  CHECK(row.offdiag_sum == doctest::Approx(3.0));

  const WitnessRow zero =
      gershgorin_witness_row(Eigen::MatrixXd::Zero(3, 3), 0.0, kTol);
  CHECK(zero.row == 0);
  CHECK(zero.offdiag_sum == 0.0);

  const WitnessRow sq =
      gershgorin_witness_row(matrix_u(unit_square()), 1.0, kTol);
  CHECK(sq.row == 0);
  CHECK(sq.offdiag_sum == doctest::Approx(1.0));

  // 2.0 is not an eigenvalue of the square's U.
  CHECK_THROWS_AS(gershgorin_witness_row(matrix_u(unit_square()), 2.0, kTol),
                  std::invalid_argument);
}

TEST_CASE("same_sign_subset") {
  CHECK_FALSE(same_sign_subset({0, 0, 0, 0, 0, 0, 0, 0}, 4).has_value());

  const auto single = same_sign_subset({3, 0, 0}, 1);
  REQUIRE(single.has_value());
  CHECK(single->indices == std::vector<int>{0});
  CHECK(single->sum == 3.0);

  const auto pair = same_sign_subset({1.2, 1.2, -0.1, 0}, 2);
  REQUIRE(pair.has_value());
  CHECK(pair->indices == std::vector<int>{0, 1});
  CHECK(pair->sum == doctest::Approx(2.4));
  CHECK(std::abs(pair->sum) > std::sqrt(2.0));

  // Negative-dominant input selects the negative class.
  const auto neg = same_sign_subset({-2.0, -2.0, 0.5}, 2);
  REQUIRE(neg.has_value());
  CHECK(neg->indices == std::vector<int>{0, 1});
  CHECK(neg->sum == doctest::Approx(-4.0));

  CHECK_THROWS_AS(same_sign_subset({1.0}, 0), std::invalid_argument);
}

TEST_CASE("same_sign_subset results always satisfy the contract") {
  Rng rng(808);
  for (int trial = 0; trial < 500; ++trial) {
    const int len = 1 + static_cast<int>(rng.below(20));
    const int t = 1 + static_cast<int>(rng.below(6));
    std::vector<double> values(len);
    for (double& v : values) v = rng.uniform(-2.0, 2.0);
    const auto subset = same_sign_subset(values, t);
    if (!subset) continue;
    CHECK(static_cast<int>(subset->indices.size()) <= t);
    CHECK(std::abs(subset->sum) > std::sqrt(static_cast<double>(t)));
    double sum = 0.0;
    bool pos = subset->sum > 0;
    for (int idx : subset->indices) {
      CHECK(idx < std::min(2 * t, len));
      CHECK((values[idx] > 0) == pos);
      sum += values[idx];
    }
    CHECK(sum == doctest::Approx(subset->sum));
  }
}

TEST_CASE("weyl_inequality_check") {
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(3, 3);
  const WeylReport same = weyl_inequality_check(id, id, kTol);
  CHECK(same.pass);
  CHECK(same.worst_margin == doctest::Approx(0.0).epsilon(1e-12));

  const WeylReport diag = weyl_inequality_check(
      Eigen::Vector2d(0, 1).asDiagonal(), Eigen::Vector2d(1, 0).asDiagonal(),
      kTol);
  CHECK(diag.pass);

  CHECK_THROWS_AS(
      weyl_inequality_check(id, Eigen::MatrixXd::Identity(2, 2), kTol),
      std::invalid_argument);

  Rng rng(909);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(9));
    CHECK(weyl_inequality_check(random_symmetric(rng, n),
                                random_symmetric(rng, n), kTol)
              .pass);
  }
}

TEST_CASE("rank_w_bound") {
  const RankReport tri = rank_w_bound(unit_triangle(), kTol);
  CHECK(tri.rank == 3);  // W = -I_3
  CHECK(tri.rank_ok);
  CHECK(tri.positive_ok);

  const RankReport two = rank_w_bound(make_points(1, {0, 1}), kTol);
  CHECK(two.rank == 2);
  CHECK(two.max_allowed == 3);
  CHECK(two.rank_ok);

  Rng rng(1010);
  for (int trial = 0; trial < 100; ++trial) {
    const RankReport rep = rank_w_bound(random_points(rng, 8, 2), kTol);
    CHECK(rep.rank <= 4);
    CHECK(rep.positive_count <= 1);
  }
}

TEST_CASE("cubic_sum_check examples") {
  const CubicSumReport a = cubic_sum_check({1, 1, 1}, 1.0, kTol);
  CHECK(a.hypothesis);
  CHECK(a.l == doctest::Approx(0.0));
  CHECK(a.sum_cubes == doctest::Approx(3.0));
  CHECK(a.conclusion);

  const CubicSumReport b = cubic_sum_check({-1, 4}, 1.0, kTol);
  CHECK(b.hypothesis);
  CHECK(b.l == doctest::Approx(1.0));
  CHECK(b.sum_cubes == doctest::Approx(63.0));
  CHECK(b.required == doctest::Approx(5.0));
  CHECK(b.conclusion);

  const CubicSumReport c = cubic_sum_check({-1, 3}, 1.0, kTol);
  CHECK(c.hypothesis);
  CHECK(c.l == doctest::Approx(0.0));
  CHECK(c.sum_cubes == doctest::Approx(26.0));
  CHECK(c.conclusion);

  // x below -y violates the hypothesis.
  CHECK_FALSE(cubic_sum_check({-2.0, 5.0}, 1.0, kTol).hypothesis);
  CHECK_THROWS_AS(cubic_sum_check({1.0}, 0.0, kTol), std::invalid_argument);
}

TEST_CASE("cubic sum conclusion holds whenever the hypothesis does") {
  Rng rng(1111);
  int applicable = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int m = 1 + static_cast<int>(rng.below(10));
    const double y = rng.uniform(0.1, 3.0);
    std::vector<double> xs(m);
    for (double& x : xs) x = rng.uniform(-y, 10.0 * y);
    const CubicSumReport rep = cubic_sum_check(xs, y, kTol);
    if (rep.hypothesis) {
      ++applicable;
      CHECK(rep.conclusion);
    }
  }
  CHECK(applicable > 1000);  // the draw actually exercises the hypothesis
}

TEST_CASE("first_case_sums") {
  const FirstCaseReport tri = first_case_sums(unit_triangle(), kTol);
  CHECK(tri.applicable);
  CHECK(tri.k == 3);  // U = 0, all eigenvalues below 1
  CHECK(tri.sum_neg == doctest::Approx(0.0));
  CHECK(tri.pass);

  const FirstCaseReport sq = first_case_sums(unit_square(), kTol);
  CHECK(sq.applicable);
  CHECK(sq.k == 2);
  CHECK(sq.sum_neg == doctest::Approx(2.0));
  CHECK(sq.sum_neg3 == doctest::Approx(2.0));
  CHECK(sq.pass);

  const FirstCaseReport two = first_case_sums(make_points(2, {0, 0, 1, 0}), kTol);
  CHECK(two.applicable);
  CHECK(two.k == 2);
  CHECK(two.sum_neg == doctest::Approx(0.0));
  CHECK(two.pass);

  const FirstCaseReport bad = first_case_sums(collinear_024(), kTol);
  CHECK_FALSE(bad.applicable);
  CHECK(bad.failed_precondition == "input is not almost-equidistant");
}

TEST_CASE("full_certificate on constructions") {
  CHECK(full_certificate(moser_spindle(), kTol).all_pass());
  CHECK(full_certificate(unit_square(), kTol).all_pass());
  CHECK(full_certificate(two_simplex_union(3, 1), kTol).all_pass());

  const CertificateReport bad = full_certificate(collinear_024(), kTol);
  CHECK_FALSE(bad.all_pass());
  REQUIRE(bad.find("almost_equidistant") != nullptr);
  CHECK_FALSE(bad.find("almost_equidistant")->pass);
}
