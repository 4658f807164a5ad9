#pragma once

#include <cstddef>

#include "wcr/core.hpp"

namespace wcr {

Length distance(Metric metric, const Point& a, const Point& b);

/// Objective values of a solution. `sum` is exact (lo == hi) under the
/// Manhattan metric and for axis-aligned Euclidean displacements; otherwise
/// it brackets the true sum of square roots to within 1e-9.
struct CostSummary {
  RationalInterval sum;
  Length max;
  std::size_t moved = 0;
};

CostSummary solution_costs(const Configuration& config, const Solution& sol);

}  // namespace wcr
