#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wcr/core.hpp"

namespace wcr::minmax {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Grid points within `bound` of `from` under `metric`, ordered by
/// (distance, row, column).
std::vector<GridPoint> move_domain(const Configuration& config, const GridPoint& from,
                                   const Length& bound);

struct Decision {
  bool feasible = false;
  std::optional<Solution> witness;
  std::uint64_t nodes = 0;
};

/// Whether integer destinations within the move bound block every required
/// line. Backtracks over unblocked lines, fewest candidate blockers first
/// (ties: vertical before horizontal, then by index); every placement is one
/// node. Error{search_limit} once `budget` nodes are spent.
Decision decide_vh(const VHInstance& inst, std::uint64_t budget = kDefaultNodeBudget);

/// Same with the bound given as a (possibly irrational) length.
Decision decide_lines(const Configuration& config, const std::vector<std::int64_t>& v_lines,
                      const std::vector<std::int64_t>& h_lines, const Length& bound,
                      std::uint64_t budget = kDefaultNodeBudget);

struct MinMaxResult {
  Length max_move;
  Solution solution;
  std::uint64_t nodes = 0;
};

/// Smallest achievable per-sensor distance that admits a blocking
/// configuration, searched over integer destinations only. Error{infeasible}
/// with fewer sensors than the longer side.
MinMaxResult solve_minmax(const Configuration& config,
                          std::uint64_t budget = kDefaultNodeBudget);

/// Sorted distinct distances from some sensor to some grid point.
std::vector<Length> distance_ladder(const Configuration& config);

/// Every column and row of the grid required.
VHInstance full_instance(const Configuration& config, const Rational& max_move);

}  // namespace wcr::minmax
