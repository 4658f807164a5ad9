#pragma once

#include <vector>

#include "wcr/core.hpp"

namespace wcr::minsum {

/// Points on [0, length] to be moved so that intervals of half-width
/// `radius` around them cover [0, length].
struct Line1DInstance {
  std::vector<Rational> points;
  Rational radius;
  Rational length;
};

struct Line1DResult {
  std::vector<Rational> targets;  // aligned with the input points
  Rational cost;
};

/// Minimum total displacement, targets restricted to [0, length]. Among
/// optima the target vector (in sorted point order) is lexicographically
/// smallest. Error{infeasible} if the diameters cannot span the segment.
Line1DResult solve_minsum_1d(const Line1DInstance& inst);

/// Same with targets restricted to [lo, hi] within the segment.
Line1DResult solve_minsum_1d(const Line1DInstance& inst, const Rational& lo,
                             const Rational& hi);

struct MinSumResult {
  Solution solution;
  Rational x_cost;
  Rational y_cost;

  Rational cost() const { return x_cost + y_cost; }
};

/// One 1D solve per axis. Requires equal ranges (Error{heterogeneous_ranges})
/// and the Manhattan metric (Error{mode}). In integer mode targets stay on
/// the grid.
MinSumResult solve_minsum_manhattan(const Configuration& config);

/// The per-axis instances solve_minsum_manhattan works on, with the target
/// window. Integer mode is shifted by -1/2 so that the covered side is
/// [0, width].
struct AxisProblem {
  Line1DInstance line;
  Rational lo;
  Rational hi;
  Rational offset;  // added back to targets
};

AxisProblem axis_problem(const Configuration& config, bool x_axis);

}  // namespace wcr::minsum
