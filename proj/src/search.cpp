#include "aeq/search.hpp"

#include "aeq/constructions.hpp"
#include "aeq/core.hpp"
#include "aeq/rng.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>

namespace aeq {

namespace {

constexpr double kGradNormStop = 1e-10;
constexpr double kMinStep = 1e-18;
constexpr double kTieTol = 1e-15;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + salt * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Eigen::MatrixXd deviations(const Eigen::MatrixXd& coords) {
  const int n = static_cast<int>(coords.rows());
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      e(i, j) = e(j, i) = (coords.row(i) - coords.row(j)).squaredNorm() - 1.0;
    }
  }
  return e;
}

/// Index of the triple's min-square pair in the order (ij, ik, jk),
/// ties to the lexicographically smallest.
int argmin_pair(double eij, double eik, double ejk) {
  const double sij = eij * eij, sik = eik * eik, sjk = ejk * ejk;
  double best = sij;
  int arg = 0;
  if (sik < best - kTieTol) { best = sik; arg = 1; }
  if (sjk < best - kTieTol) { best = sjk; arg = 2; }
  return arg;
}

}  // namespace

void SearchConfig::validate() const {
  if (d < 1 || target_n < 1 || restarts < 1 || max_iters < 1 ||
      !(step_init > 0) || !(penalty_accept > 0)) {
    throw std::invalid_argument("SearchConfig: invalid field");
  }
  if (budget_seconds && !(*budget_seconds > 0)) {
    throw std::invalid_argument("SearchConfig: budget_seconds must be positive");
  }
}

double penalty(const Eigen::MatrixXd& coords) {
  const int n = static_cast<int>(coords.rows());
  if (n < 3) return 0.0;
  const Eigen::MatrixXd e = deviations(coords);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double sij = e(i, j) * e(i, j);
      for (int k = j + 1; k < n; ++k) {
        const double sik = e(i, k) * e(i, k);
        const double sjk = e(j, k) * e(j, k);
        total += std::min({sij, sik, sjk});
      }
    }
  }
  return total;
}

double penalty(const PointSet& ps) { return penalty(ps.coords()); }

Eigen::MatrixXd penalty_gradient(const Eigen::MatrixXd& coords) {
  const int n = static_cast<int>(coords.rows());
  Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(n, coords.cols());
  if (n < 3) return grad;
  const Eigen::MatrixXd e = deviations(coords);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        int p = i, q = j;
        switch (argmin_pair(e(i, j), e(i, k), e(j, k))) {
          case 0: p = i; q = j; break;
          case 1: p = i; q = k; break;
          case 2: p = j; q = k; break;
        }
        // d/dv_p of (||v_p - v_q||^2 - 1)^2.
        const Eigen::RowVectorXd dir =
            4.0 * e(p, q) * (coords.row(p) - coords.row(q));
        grad.row(p) += dir;
        grad.row(q) -= dir;
      }
    }
  }
  return grad;
}

Eigen::MatrixXd penalty_gradient(const PointSet& ps) {
  return penalty_gradient(ps.coords());
}

namespace {

/// Backtracking gradient descent on an arbitrary objective/gradient pair.
/// The gradient may cover only a sub-block of the iterate (local phase).
template <class Obj, class Grad, class Apply>
OptimizeResult descend(Eigen::MatrixXd x, double step, int max_iters,
                       double accept, const Obj& obj, const Grad& grad,
                       const Apply& apply) {
  double p = obj(x);
  if (!std::isfinite(p)) throw NumericFailure("non-finite penalty", x);
  int iters = 0;
  while (p > accept && iters < max_iters) {
    const auto g = grad(x);
    if (g.norm() <= kGradNormStop) break;
    bool accepted = false;
    while (step >= kMinStep) {
      Eigen::MatrixXd xn = x;
      apply(xn, g, step);
      const double pn = obj(xn);
      if (!std::isfinite(pn)) throw NumericFailure("non-finite penalty", x);
      if (pn < p) {
        x = std::move(xn);
        p = pn;
        step *= 1.2;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    ++iters;
    if (!accepted) break;
  }
  return {std::move(x), p, iters};
}

/// Penalty restricted to triples that involve row m (the appended point).
double penalty_at(const Eigen::MatrixXd& coords, int m) {
  const int n = static_cast<int>(coords.rows());
  if (n < 3) return 0.0;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == m) continue;
    const double eim = (coords.row(i) - coords.row(m)).squaredNorm() - 1.0;
    for (int j = i + 1; j < n; ++j) {
      if (j == m) continue;
      const double ejm = (coords.row(j) - coords.row(m)).squaredNorm() - 1.0;
      const double eij = (coords.row(i) - coords.row(j)).squaredNorm() - 1.0;
      total += std::min({eij * eij, eim * eim, ejm * ejm});
    }
  }
  return total;
}

Eigen::RowVectorXd penalty_gradient_at(const Eigen::MatrixXd& coords, int m) {
  const int n = static_cast<int>(coords.rows());
  Eigen::RowVectorXd grad = Eigen::RowVectorXd::Zero(coords.cols());
  for (int i = 0; i < n; ++i) {
    if (i == m) continue;
    const double eim = (coords.row(i) - coords.row(m)).squaredNorm() - 1.0;
    for (int j = i + 1; j < n; ++j) {
      if (j == m) continue;
      const double ejm = (coords.row(j) - coords.row(m)).squaredNorm() - 1.0;
      const double eij = (coords.row(i) - coords.row(j)).squaredNorm() - 1.0;
      switch (argmin_pair(eij, eim, ejm)) {
        case 0:
          break;  // pair (i, j) does not touch m
        case 1:
          grad += 4.0 * eim * (coords.row(m) - coords.row(i));
          break;
        case 2:
          grad += 4.0 * ejm * (coords.row(m) - coords.row(j));
          break;
      }
    }
  }
  return grad;
}

/// Gauss-Newton refinement on the snapped unit-edge set. Returns the input
/// unchanged when it cannot improve the penalty.
Eigen::MatrixXd polish(const Eigen::MatrixXd& coords, double edge_tol) {
  const int n = static_cast<int>(coords.rows());
  const int d = static_cast<int>(coords.cols());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double e = (coords.row(i) - coords.row(j)).squaredNorm() - 1.0;
      if (std::abs(e) <= edge_tol) edges.emplace_back(i, j);
    }
  }
  if (edges.empty()) return coords;

  Eigen::MatrixXd x = coords;
  const double mu = 1e-10;
  for (int iter = 0; iter < 30; ++iter) {
    Eigen::MatrixXd jtj = Eigen::MatrixXd::Zero(n * d, n * d);
    Eigen::VectorXd jtr = Eigen::VectorXd::Zero(n * d);
    double sq = 0.0;
    for (auto [i, j] : edges) {
      const Eigen::RowVectorXd diff = x.row(i) - x.row(j);
      const double r = diff.squaredNorm() - 1.0;
      sq += r * r;
      const Eigen::RowVectorXd g = 2.0 * diff;
      const Eigen::MatrixXd gg = g.transpose() * g;
      jtj.block(i * d, i * d, d, d) += gg;
      jtj.block(j * d, j * d, d, d) += gg;
      jtj.block(i * d, j * d, d, d) -= gg;
      jtj.block(j * d, i * d, d, d) -= gg;
      jtr.segment(i * d, d) += g.transpose() * r;
      jtr.segment(j * d, d) -= g.transpose() * r;
    }
    if (sq < 1e-28) break;
    jtj.diagonal().array() += mu;
    const Eigen::VectorXd delta = jtj.ldlt().solve(-jtr);
    if (!delta.allFinite()) break;
    Eigen::MatrixXd xn = x;
    for (int i = 0; i < n; ++i) xn.row(i) += delta.segment(i * d, d).transpose();
    double sqn = 0.0;
    for (auto [i, j] : edges) {
      const double r = (xn.row(i) - xn.row(j)).squaredNorm() - 1.0;
      sqn += r * r;
    }
    if (sqn >= sq) break;
    x = std::move(xn);
  }
  return penalty(x) <= penalty(coords) ? x : coords;
}

/// A candidate counts as verified when it builds a valid distinct PointSet,
/// passes is_almost_equidistant at unit_eps 1e-6 and its penalty is at most
/// the acceptance threshold.
std::optional<PointSet> verify_candidate(const Eigen::MatrixXd& coords,
                                         double penalty_accept) {
  if (penalty(coords) > penalty_accept) return std::nullopt;
  try {
    PointSet ps(static_cast<int>(coords.cols()), coords);
    Tolerance tol;
    tol.unit_eps = 1e-6;
    if (!is_almost_equidistant(ps, tol).holds) return std::nullopt;
    return ps;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace

OptimizeResult optimize(const PointSet& ps0, const SearchConfig& cfg) {
  cfg.validate();
  if (ps0.dim() != cfg.d) {
    throw std::invalid_argument("optimize: point set dimension != cfg.d");
  }
  return descend(
      ps0.coords(), cfg.step_init, cfg.max_iters, cfg.penalty_accept,
      [](const Eigen::MatrixXd& x) { return penalty(x); },
      [](const Eigen::MatrixXd& x) { return penalty_gradient(x); },
      [](Eigen::MatrixXd& x, const Eigen::MatrixXd& g, double step) {
        x -= step * g;
      });
}

std::optional<PointSet> greedy_extend(const PointSet& ps,
                                      const SearchConfig& cfg) {
  cfg.validate();
  Tolerance tol;
  tol.unit_eps = 1e-6;
  if (!is_almost_equidistant(ps, tol).holds) {
    throw std::invalid_argument(
        "greedy_extend: input must be verified almost-equidistant");
  }
  const int n = ps.size();
  const int d = ps.dim();
  const int m = n;  // index of the appended point

  const Eigen::RowVectorXd center = ps.coords().colwise().mean();
  double radius = 0.0;
  for (int i = 0; i < n; ++i) {
    radius = std::max(radius, (ps.point(i) - center).norm());
  }
  radius += 1.0;  // inflated bounding ball

  for (int attempt = 0; attempt < cfg.restarts; ++attempt) {
    Rng rng(mix_seed(cfg.seed, 0x67656578ULL + attempt));
    Eigen::RowVectorXd dir(d);
    for (int c = 0; c < d; ++c) dir(c) = rng.normal();
    if (dir.norm() == 0.0) continue;
    dir /= dir.norm();
    const double rad = radius * std::pow(rng.uniform(), 1.0 / d);

    Eigen::MatrixXd coords(n + 1, d);
    coords.topRows(n) = ps.coords();
    coords.row(m) = center + rad * dir;

    // Phase 1: move only the new point against the triples it appears in.
    auto local = descend(
        coords, cfg.step_init, cfg.max_iters, cfg.penalty_accept,
        [m](const Eigen::MatrixXd& x) { return penalty_at(x, m); },
        [m](const Eigen::MatrixXd& x) { return penalty_gradient_at(x, m); },
        [m](Eigen::MatrixXd& x, const Eigen::RowVectorXd& g, double step) {
          x.row(m) -= step * g;
        });

    // Phase 2: global reoptimization, then snap-and-refine.
    auto global = descend(
        std::move(local.coords), cfg.step_init, cfg.max_iters,
        cfg.penalty_accept,
        [](const Eigen::MatrixXd& x) { return penalty(x); },
        [](const Eigen::MatrixXd& x) { return penalty_gradient(x); },
        [](Eigen::MatrixXd& x, const Eigen::MatrixXd& g, double step) {
          x -= step * g;
        });
    const Eigen::MatrixXd refined = polish(global.coords, 1e-3);
    if (auto verified = verify_candidate(refined, cfg.penalty_accept)) {
      return verified;
    }
  }
  return std::nullopt;
}

SearchResult search(const SearchConfig& cfg) {
  cfg.validate();
  const auto start_time = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_time)
        .count();
  };

  const PointSet fallback = two_simplex_union(cfg.d, cfg.seed);

  std::optional<PointSet> best;
  double best_penalty = std::numeric_limits<double>::infinity();
  std::vector<RestartTrace> trace;

  for (int r = 0; r < cfg.restarts; ++r) {
    if (cfg.budget_seconds && elapsed() > *cfg.budget_seconds) break;
    const std::uint64_t seed_r = cfg.seed + static_cast<std::uint64_t>(r);
    SearchConfig local_cfg = cfg;
    local_cfg.seed = mix_seed(cfg.seed, 0x72657374ULL + r);

    std::optional<PointSet> candidate;
    int iterations = 0;
    try {
      PointSet start = [&]() -> PointSet {
        if (r % 2 == 0) return two_simplex_union(cfg.d, seed_r);
        // From scratch: target_n points uniform in a ball of radius 1.5.
        Rng rng(mix_seed(cfg.seed, 0x73637261ULL + r));
        for (int tries = 0; tries < 16; ++tries) {
          Eigen::MatrixXd coords(cfg.target_n, cfg.d);
          for (int i = 0; i < cfg.target_n; ++i) {
            Eigen::RowVectorXd dir(cfg.d);
            for (int c = 0; c < cfg.d; ++c) dir(c) = rng.normal();
            const double norm = dir.norm();
            if (norm == 0.0) { --i; continue; }
            coords.row(i) =
                (1.5 * std::pow(rng.uniform(), 1.0 / cfg.d) / norm) * dir;
          }
          try {
            return PointSet(cfg.d, std::move(coords));
          } catch (const std::invalid_argument&) {
          }
        }
        return two_simplex_union(cfg.d, seed_r);
      }();

      auto opt = optimize(start, local_cfg);
      iterations = opt.iterations;
      candidate = verify_candidate(polish(opt.coords, 1e-3),
                                   cfg.penalty_accept);
    } catch (const NumericFailure&) {
      candidate.reset();
    }

    // Grow a verified candidate toward the target.
    while (candidate && candidate->size() < cfg.target_n) {
      if (cfg.budget_seconds && elapsed() > *cfg.budget_seconds) break;
      SearchConfig ext_cfg = local_cfg;
      ext_cfg.seed = mix_seed(local_cfg.seed, candidate->size());
      auto extended = greedy_extend(*candidate, ext_cfg);
      if (!extended) break;
      candidate = std::move(extended);
    }

    RestartTrace t;
    t.restart_index = r;
    t.seed = seed_r;
    t.iterations = iterations;
    t.n = candidate ? candidate->size() : 0;
    t.final_penalty =
        candidate ? penalty(*candidate) : std::numeric_limits<double>::quiet_NaN();
    trace.push_back(t);
    std::cerr << "restart " << r << " seed " << seed_r << " n " << t.n
              << " penalty " << t.final_penalty << "\n";

    if (candidate) {
      const double p = penalty(*candidate);
      const bool better =
          !best || candidate->size() > best->size() ||
          (candidate->size() == best->size() && p < best_penalty);
      if (better) {
        best = candidate;
        best_penalty = p;
      }
    }
  }

  if (!best) {
    best = fallback;
    best_penalty = penalty(*best);
  }

  Tolerance tol;
  tol.unit_eps = 1e-6;
  SearchResult result{*best, best->size(), best_penalty,
                      best_penalty <= cfg.penalty_accept &&
                          is_almost_equidistant(*best, tol).holds,
                      full_certificate(*best, tol), std::move(trace)};
  return result;
}

}  // namespace aeq
