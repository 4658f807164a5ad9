#include "wcr/costs.hpp"

#include "wcr/error.hpp"

namespace wcr {

Length distance(Metric metric, const Point& a, const Point& b) {
  const Rational dx = abs(a.x - b.x);
  const Rational dy = abs(a.y - b.y);
  if (metric == Metric::manhattan) return Length::from_value(dx + dy);
  return Length::from_square(dx * dx + dy * dy);
}

CostSummary solution_costs(const Configuration& config, const Solution& sol) {
  check_keys(config, sol);
  CostSummary out;
  out.sum = {0, 0};

  std::vector<Rational> diagonal_squares;
  for (const Sensor& s : config.sensors) {
    const Point& to = sol.positions.at(s.id);
    if (to == s.center) continue;
    ++out.moved;
    const Length d = distance(config.metric, s.center, to);
    if (out.max < d) out.max = d;

    const Rational dx = abs(to.x - s.center.x);
    const Rational dy = abs(to.y - s.center.y);
    if (config.metric == Metric::manhattan || dx == 0 || dy == 0) {
      out.sum.lo += dx + dy;
      out.sum.hi += dx + dy;
    } else {
      diagonal_squares.push_back(d.square());
    }
  }
  if (!diagonal_squares.empty()) {
    const Rational width(BigInt(1), BigInt(1'000'000'000) * diagonal_squares.size());
    for (const Rational& sq : diagonal_squares) {
      const RationalInterval root = sqrt_bounds(sq, width);
      out.sum.lo += root.lo;
      out.sum.hi += root.hi;
    }
  }
  return out;
}

}  // namespace wcr
