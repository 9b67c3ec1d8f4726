#include "aeq/constructions.hpp"
#include "aeq/core.hpp"
#include "aeq/graph.hpp"
#include "aeq/spectral.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace aeq;
using namespace aeq::testutil;

namespace {
const Tolerance kTol{};
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("regular_unit_simplex closed forms") {
  const PointSet segment = regular_unit_simplex(1, 1);
  CHECK(segment.size() == 2);
  CHECK(segment.distance(0, 1) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(segment.coords().colwise().mean().norm() <= 1e-12);

  const PointSet triangle = regular_unit_simplex(2, 2);
  CHECK(triangle.point(0).norm() ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));

  const PointSet tetra = regular_unit_simplex(3, 3);
  CHECK(tetra.point(0).norm() ==
        doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-13));

  CHECK_THROWS_AS(regular_unit_simplex(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(regular_unit_simplex(0, 2), std::invalid_argument);
}

TEST_CASE("regular_unit_simplex invariants across orders") {
  for (int d = 1; d <= 8; ++d) {
    for (int m = 1; m <= d; ++m) {
      const PointSet simplex = regular_unit_simplex(m, d);
      CHECK(simplex.size() == m + 1);
      for (int i = 0; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
          CHECK(std::abs(simplex.distance(i, j) - 1.0) <= 1e-12);
        }
        CHECK(std::abs(simplex.point(i).norm() -
                       std::sqrt(m / (2.0 * (m + 1)))) <= 1e-12);
        // Embedded in the first m coordinates.
        for (int c = m; c < d; ++c) CHECK(simplex.coords()(i, c) == 0.0);
      }
      CHECK(simplex.coords().colwise().mean().norm() <= 1e-12);
    }
  }
}

TEST_CASE("alpha_d") {
  CHECK(alpha_d(1) == doctest::Approx(kPi));
  CHECK(alpha_d(2) == doctest::Approx(2.0 * kPi / 3.0));
  CHECK(alpha_d(100000) == doctest::Approx(kPi / 2.0).epsilon(1e-4));
  for (int d = 1; d <= 50; ++d) {
    CHECK(alpha_d(d) > kPi / 2.0);
    CHECK(alpha_d(d) <= kPi);
  }
  CHECK_THROWS_AS(alpha_d(0), std::invalid_argument);
}

TEST_CASE("scale_k") {
  CHECK(scale_k(kPi / 3.0) == doctest::Approx(1.0));
  CHECK(scale_k(kPi) == doctest::Approx(0.5));
  CHECK(scale_k(2.0 * kPi / 3.0) == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK_THROWS_AS(scale_k(0.0), std::invalid_argument);
  CHECK_THROWS_AS(scale_k(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(scale_k(3.2), std::invalid_argument);
}

TEST_CASE("scale and angle compose to unit chords") {
  for (int d = 1; d <= 20; ++d) {
    const double alpha = alpha_d(d);
    CHECK(2.0 * scale_k(alpha) * std::sin(alpha / 2.0) ==
          doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("unit-sphere simplex vertices pairwise at angle alpha_d") {
  for (int d = 2; d <= 10; ++d) {
    const PointSet simplex = regular_unit_simplex(d, d);
    Eigen::MatrixXd unit = simplex.coords();
    for (int i = 0; i <= d; ++i) unit.row(i) /= unit.row(i).norm();
    const double expected = std::cos(alpha_d(d));
    for (int i = 0; i <= d; ++i) {
      for (int j = i + 1; j <= d; ++j) {
        CHECK(std::abs(unit.row(i).dot(unit.row(j)) - expected) <= 1e-10);
      }
    }
  }
}

TEST_CASE("two_simplex_union d=2 closed form") {
  const PointSet six = two_simplex_union(2, 7);
  CHECK(six.size() == 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(six.point(i).norm() ==
          doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  }
  CHECK(is_almost_equidistant(six, kTol).holds);
}

TEST_CASE("two_simplex_union invariants across dimensions and seeds") {
  for (int d = 2; d <= 10; ++d) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const PointSet ps = two_simplex_union(d, seed);
      CHECK(ps.size() == 2 * d + 2);
      // Within-copy distances are exactly 1.
      for (int copy = 0; copy < 2; ++copy) {
        const int base = copy * (d + 1);
        for (int i = 0; i <= d; ++i) {
          for (int j = i + 1; j <= d; ++j) {
            CHECK(std::abs(ps.distance(base + i, base + j) - 1.0) <= 1e-9);
          }
        }
      }
      CHECK(is_almost_equidistant(ps, kTol).holds);
      CHECK(certify_distance_spectrum(ps, kTol).all_pass());
      CHECK(trace_conditions(ps, kTol).pass);
    }
  }
}

TEST_CASE("two_simplex_union is deterministic per seed") {
  CHECK(two_simplex_union(4, 11).coords() == two_simplex_union(4, 11).coords());
  CHECK(two_simplex_union(4, 11).coords() != two_simplex_union(4, 12).coords());
  CHECK_THROWS_AS(two_simplex_union(1, 0), std::invalid_argument);
}

TEST_CASE("moser_spindle") {
  const PointSet moser = moser_spindle();
  CHECK(moser.size() == 7);
  CHECK(moser.dim() == 2);

  const UnitDistanceGraph g = unit_distance_graph(moser, kTol);
  CHECK(g.edges().size() == 11);
  CHECK(is_almost_equidistant(moser, kTol).holds);
  CHECK(max_clique(g) == 3);
  CHECK(non_neighbor_violations(g, 2).empty());

  // Bit-stable coordinates across calls.
  CHECK(moser.coords() == moser_spindle().coords());
}
