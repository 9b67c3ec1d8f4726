#pragma once

#include "aeq/types.hpp"

namespace aeq {

/// Closed-form cardinality bounds for dimension d.
struct BoundReport {
  int d = 0;
  double theorem_bound = 0.0;  // 5 d^{13/9}
  double ramsey_bound = 0.0;   // 2.4 (d+2)^2 / ln(d+2)
  std::optional<int> observed_n;
};

struct DiameterBoundReport {
  bool applicable = false;  // diameter >= sqrt(2) - unit_eps
  bool pass = false;        // n <= 4d + 4 (true when not applicable)
  double diameter = 0.0;
  int n = 0;
  int limit = 0;  // 4d + 4
};

/// Vertices with more than d+1 non-neighbors. Empty for any realizable
/// almost-equidistant input.
std::vector<int> non_neighbor_violations(const UnitDistanceGraph& g, int d);

/// Lexicographically smallest independent triple, or nullopt when the
/// complement is triangle-free.
std::optional<TripleWitness> complement_triangle(const UnitDistanceGraph& g);

/// Exact maximum clique size via branch-and-bound with a greedy coloring
/// bound. Requires n <= 200; throws on node budget exhaustion.
int max_clique(const UnitDistanceGraph& g);

/// 5 d^{13/9}.
double bound_theorem(int d);

/// 2.4 (d+2)^2 / ln(d+2).
double bound_ramsey(int d);

/// If diameter >= sqrt(2) - unit_eps, asserts n <= 4d + 4; otherwise
/// reports not-applicable. Requires an almost-equidistant input.
DiameterBoundReport diameter_bound_check(const PointSet& ps,
                                         const Tolerance& tol);

}  // namespace aeq
