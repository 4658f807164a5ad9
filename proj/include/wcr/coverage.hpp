#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wcr/core.hpp"

namespace wcr {

/// Maximal uncovered open interval (lo, hi).
struct Gap {
  Rational lo;
  Rational hi;

  friend bool operator==(const Gap&, const Gap&) = default;
};

struct CoverageReport {
  bool blocking = false;
  // Continuous mode: uncovered open intervals of each side.
  std::vector<Gap> x_gaps;
  std::vector<Gap> y_gaps;
  // Integer mode: empty column / row indices.
  std::vector<std::int64_t> x_gap_lines;
  std::vector<std::int64_t> y_gap_lines;
};

struct Rect {
  Rational x_lo, x_hi, y_lo, y_hi;
};

/// Uncovered parts of [lo, hi] under a union of closed intervals. Touching
/// endpoints count as covered.
std::vector<Gap> uncovered(std::vector<std::pair<Rational, Rational>> intervals,
                           const Rational& lo, const Rational& hi);

/// Closed-cover check of both axis projections against an arbitrary
/// rectangle.
CoverageReport projection_coverage(const std::vector<Sensor>& sensors,
                                   const Rect& rect);

/// Integer mode: every column and row hosts a sensor. Continuous mode: the
/// sensing intervals cover both sides of the rectangle.
CoverageReport is_blocking(const Configuration& config);

/// Whether the unit-width line centred at `line` is fully covered by the
/// given closed intervals.
bool line_blocked(const std::vector<std::pair<Rational, Rational>>& intervals,
                  std::int64_t line);

struct VHCoverage {
  std::vector<std::int64_t> unblocked_v;
  std::vector<std::int64_t> unblocked_h;

  bool blocking() const { return unblocked_v.empty() && unblocked_h.empty(); }
};

/// Which required lines of a (V,H) instance remain unblocked once the
/// sensors sit at `sol`. Positions may be fractional; a line counts as
/// blocked when the union of sensing intervals covers it entirely, which
/// for grid positions means some sensor sits on it.
VHCoverage vh_coverage(const VHInstance& inst, const Solution& sol);

}  // namespace wcr
