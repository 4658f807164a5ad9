#include "wcr/coverage.hpp"

#include <algorithm>
#include <set>

namespace wcr {

std::vector<Gap> uncovered(std::vector<std::pair<Rational, Rational>> intervals,
                           const Rational& lo, const Rational& hi) {
  std::sort(intervals.begin(), intervals.end());
  std::vector<Gap> gaps;
  Rational reach = lo;
  for (const auto& [start, end] : intervals) {
    if (end < lo || start > hi) continue;
    if (start > reach) gaps.push_back({reach, start});
    if (end > reach) reach = end;
    if (reach >= hi) break;
  }
  if (reach < hi) gaps.push_back({reach, hi});
  return gaps;
}

CoverageReport projection_coverage(const std::vector<Sensor>& sensors, const Rect& rect) {
  std::vector<std::pair<Rational, Rational>> xs, ys;
  xs.reserve(sensors.size());
  ys.reserve(sensors.size());
  for (const Sensor& s : sensors) {
    xs.emplace_back(s.center.x - s.range, s.center.x + s.range);
    ys.emplace_back(s.center.y - s.range, s.center.y + s.range);
  }
  CoverageReport report;
  report.x_gaps = uncovered(std::move(xs), rect.x_lo, rect.x_hi);
  report.y_gaps = uncovered(std::move(ys), rect.y_lo, rect.y_hi);
  report.blocking = report.x_gaps.empty() && report.y_gaps.empty();
  return report;
}

CoverageReport is_blocking(const Configuration& config) {
  if (config.mode == Mode::continuous) {
    return projection_coverage(
        config.sensors, {config.x_min(), config.x_max(), config.y_min(), config.y_max()});
  }
  std::set<Rational> cols, rows;
  for (const Sensor& s : config.sensors) {
    cols.insert(s.center.x);
    rows.insert(s.center.y);
  }
  CoverageReport report;
  for (std::int64_t c = 1; c <= grid_width(config); ++c) {
    if (!cols.contains(Rational(c))) report.x_gap_lines.push_back(c);
  }
  for (std::int64_t r = 1; r <= grid_height(config); ++r) {
    if (!rows.contains(Rational(r))) report.y_gap_lines.push_back(r);
  }
  report.blocking = report.x_gap_lines.empty() && report.y_gap_lines.empty();
  return report;
}

bool line_blocked(const std::vector<std::pair<Rational, Rational>>& intervals,
                  std::int64_t line) {
  const Rational half(1, 2);
  return uncovered(intervals, line - half, line + half).empty();
}

VHCoverage vh_coverage(const VHInstance& inst, const Solution& sol) {
  check_keys(inst.config, sol);
  std::vector<std::pair<Rational, Rational>> xs, ys;
  for (const Sensor& s : inst.config.sensors) {
    const Point& p = sol.positions.at(s.id);
    xs.emplace_back(p.x - s.range, p.x + s.range);
    ys.emplace_back(p.y - s.range, p.y + s.range);
  }
  VHCoverage out;
  for (std::int64_t v : inst.v_lines) {
    if (!line_blocked(xs, v)) out.unblocked_v.push_back(v);
  }
  for (std::int64_t h : inst.h_lines) {
    if (!line_blocked(ys, h)) out.unblocked_h.push_back(h);
  }
  return out;
}

}  // namespace wcr
