#include "aeq/graph.hpp"

#include "aeq/core.hpp"

#include <algorithm>
#include <cmath>

namespace aeq {

std::vector<int> non_neighbor_violations(const UnitDistanceGraph& g, int d) {
  if (d < 1) throw std::invalid_argument("non_neighbor_violations: d >= 1");
  std::vector<int> out;
  const int n = g.size();
  for (int v = 0; v < n; ++v) {
    if (n - 1 - g.degree(v) > d + 1) out.push_back(v);
  }
  return out;
}

std::optional<TripleWitness> complement_triangle(const UnitDistanceGraph& g) {
  const int n = g.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!g.adjacent(i, k) && !g.adjacent(j, k)) {
          return TripleWitness{{i, j, k}};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

constexpr long kCliqueNodeBudget = 10'000'000;

struct CliqueSearch {
  const UnitDistanceGraph* g;
  std::vector<int> order;  // descending degree, ties by index
  int best = 0;
  long nodes = 0;

  // Greedy coloring of the candidate set; the color count bounds the
  // largest clique inside it.
  int color_bound(const std::vector<int>& cand) const {
    std::vector<int> color(cand.size(), -1);
    int colors = 0;
    for (size_t i = 0; i < cand.size(); ++i) {
      std::vector<char> used(colors, 0);
      for (size_t j = 0; j < i; ++j) {
        if (g->adjacent(cand[i], cand[j]) && color[j] >= 0) used[color[j]] = 1;
      }
      int c = 0;
      while (c < colors && used[c]) ++c;
      if (c == colors) ++colors;
      color[i] = c;
    }
    return colors;
  }

  void expand(std::vector<int>& clique, std::vector<int> cand) {
    if (++nodes > kCliqueNodeBudget) {
      throw std::runtime_error("max_clique: node budget exceeded");
    }
    if (cand.empty()) {
      best = std::max(best, static_cast<int>(clique.size()));
      return;
    }
    while (!cand.empty()) {
      if (static_cast<int>(clique.size()) + color_bound(cand) <= best) return;
      const int v = cand.back();
      cand.pop_back();
      std::vector<int> next;
      for (int u : cand) {
        if (g->adjacent(v, u)) next.push_back(u);
      }
      clique.push_back(v);
      expand(clique, std::move(next));
      clique.pop_back();
    }
  }
};

}  // namespace

int max_clique(const UnitDistanceGraph& g) {
  const int n = g.size();
  if (n > 200) throw std::invalid_argument("max_clique: n > 200");
  if (n == 0) return 0;
  CliqueSearch search;
  search.g = &g;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  // Candidates popped from the back; reverse so the highest-degree vertex
  // is branched on first.
  std::reverse(order.begin(), order.end());
  std::vector<int> clique;
  search.expand(clique, order);
  return search.best;
}

double bound_theorem(int d) {
  if (d < 1) throw std::invalid_argument("bound_theorem: d >= 1");
  return 5.0 * std::pow(static_cast<double>(d), 13.0 / 9.0);
}

double bound_ramsey(int d) {
  if (d < 1) throw std::invalid_argument("bound_ramsey: d >= 1");
  const double dp2 = d + 2.0;
  return 2.4 * dp2 * dp2 / std::log(dp2);
}

DiameterBoundReport diameter_bound_check(const PointSet& ps,
                                         const Tolerance& tol) {
  const auto verdict = is_almost_equidistant(ps, tol);
  if (!verdict.holds) {
    const auto& w = verdict.witness->indices;
    throw std::invalid_argument(
        "diameter_bound_check: input not almost-equidistant, witness triple (" +
        std::to_string(w[0] + 1) + "," + std::to_string(w[1] + 1) + "," +
        std::to_string(w[2] + 1) + ")");
  }
  DiameterBoundReport report;
  report.n = ps.size();
  report.limit = 4 * ps.dim() + 4;
  report.diameter = ps.size() >= 2 ? diameter(ps) : 0.0;
  report.applicable = report.diameter >= std::sqrt(2.0) - tol.unit_eps;
  report.pass = !report.applicable || report.n <= report.limit;
  return report;
}

}  // namespace aeq
