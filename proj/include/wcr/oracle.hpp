#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wcr/core.hpp"
#include "wcr/minnum.hpp"
#include "wcr/minsum.hpp"
#include "wcr/sat.hpp"

namespace wcr::oracle {

using minnum::brute_minnum;
using sat::sat_brute;

inline constexpr std::uint64_t kMinMaxProductLimit = 10'000'000;

/// Order-preserving chain over a fixed set of admissible target positions:
/// the smallest total displacement such that the first target is at most r,
/// the last at least length - r, and neighbours at most 2r apart.
/// Error{infeasible} if no chain exists.
Rational chain_cost(const minsum::Line1DInstance& inst, std::vector<Rational> positions);

/// Targets p_j + 2kr, r + 2kr and length - r - 2kr for |k| <= n, clamped to
/// [lo, hi].
std::vector<Rational> candidate_positions(const minsum::Line1DInstance& inst,
                                          const Rational& lo, const Rational& hi);

/// Multiples of delta in [lo, hi], plus hi.
std::vector<Rational> grid_positions(const Rational& lo, const Rational& hi,
                                     const Rational& delta);

struct MinSumBounds {
  Rational candidate;
  Rational grid;
};

/// Two independent reference costs for the 1D problem on [0, length].
/// Error{size_limit} above 6 points.
MinSumBounds oracle_minsum_1d(const minsum::Line1DInstance& inst, const Rational& delta);

/// Candidate-set optimum of each axis, added up. Same preconditions as
/// solve_minsum_manhattan.
Rational oracle_minsum(const Configuration& config);

/// Plain enumeration of every combination of destinations within the move
/// bound. Error{size_limit} when the product of domain sizes exceeds 10^7.
bool oracle_minmax(const VHInstance& inst);
bool oracle_lines(const Configuration& config, const std::vector<std::int64_t>& v_lines,
                  const std::vector<std::int64_t>& h_lines, const Length& bound);

/// First distance of the ladder at which enumeration finds a blocking
/// configuration; nullopt if none does.
std::optional<Length> oracle_minmax_value(const Configuration& config);

}  // namespace wcr::oracle
