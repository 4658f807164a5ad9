#include "wcr/oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>

#include "wcr/error.hpp"
#include "wcr/minmax.hpp"

namespace wcr::oracle {

Rational chain_cost(const minsum::Line1DInstance& inst, std::vector<Rational> positions) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  std::vector<Rational> points = inst.points;
  std::sort(points.begin(), points.end());
  const Rational& r = inst.radius;
  const std::size_t n = points.size();
  const std::size_t m = positions.size();
  if (n == 0) fail(ErrorKind::infeasible, "no points");

  std::vector<std::optional<Rational>> cost(m);
  for (std::size_t c = 0; c < m; ++c) {
    if (positions[c] <= r) cost[c] = abs(points[0] - positions[c]);
  }
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<std::optional<Rational>> next(m);
    for (std::size_t c = 0; c < m; ++c) {
      if (!cost[c]) continue;
      for (std::size_t d = c; d < m && positions[d] - positions[c] <= 2 * r; ++d) {
        const Rational total = *cost[c] + abs(points[i] - positions[d]);
        if (!next[d] || total < *next[d]) next[d] = total;
      }
    }
    cost = std::move(next);
  }
  std::optional<Rational> best;
  for (std::size_t c = 0; c < m; ++c) {
    if (cost[c] && positions[c] >= inst.length - r && (!best || *cost[c] < *best)) best = cost[c];
  }
  if (!best) fail(ErrorKind::infeasible, "no covering chain of targets");
  return *best;
}

std::vector<Rational> candidate_positions(const minsum::Line1DInstance& inst,
                                          const Rational& lo, const Rational& hi) {
  const auto n = static_cast<long long>(inst.points.size());
  const Rational step = 2 * inst.radius;
  std::set<Rational> out;
  auto add = [&](const Rational& t) { out.insert(std::clamp(t, lo, hi)); };
  for (long long k = -n; k <= n; ++k) {
    for (const Rational& p : inst.points) add(p + k * step);
    add(inst.radius + k * step);
    add(inst.length - inst.radius - k * step);
  }
  return {out.begin(), out.end()};
}

std::vector<Rational> grid_positions(const Rational& lo, const Rational& hi,
                                     const Rational& delta) {
  std::vector<Rational> out;
  for (Rational t = lo; t < hi; t += delta) out.push_back(t);
  out.push_back(hi);
  return out;
}

MinSumBounds oracle_minsum_1d(const minsum::Line1DInstance& inst, const Rational& delta) {
  if (inst.points.size() > 6) fail(ErrorKind::size_limit, "oracle_minsum_1d handles at most 6 points");
  if (delta <= 0) fail(ErrorKind::validation, "grid step must be positive");
  return {chain_cost(inst, candidate_positions(inst, 0, inst.length)),
          chain_cost(inst, grid_positions(0, inst.length, delta))};
}

Rational oracle_minsum(const Configuration& config) {
  validate(config);
  if (config.metric != Metric::manhattan) fail(ErrorKind::mode, "MinSum oracle is Manhattan only");
  if (!is_homogeneous(config)) fail(ErrorKind::heterogeneous_ranges, "sensor ranges differ");
  Rational total = 0;
  for (bool x_axis : {true, false}) {
    const minsum::AxisProblem ap = minsum::axis_problem(config, x_axis);
    total += chain_cost(ap.line, candidate_positions(ap.line, ap.lo, ap.hi));
  }
  return total;
}

bool oracle_lines(const Configuration& config, const std::vector<std::int64_t>& v_lines,
                  const std::vector<std::int64_t>& h_lines, const Length& bound) {
  require_integer_mode(config);
  validate(config);
  const std::int64_t a = grid_width(config);
  const std::int64_t b = grid_height(config);
  std::vector<std::vector<GridPoint>> domains;
  double product = 1;
  for (const Sensor& s : config.sensors) {
    domains.push_back(minmax::move_domain(config, to_grid(s.center), bound));
    product *= static_cast<double>(domains.back().size());
    if (product > static_cast<double>(kMinMaxProductLimit)) {
      fail(ErrorKind::size_limit, "destination product exceeds 10^7");
    }
  }
  const std::size_t n = domains.size();
  std::vector<int> col_count(a + 1, 0);
  std::vector<int> row_count(b + 1, 0);
  std::vector<std::size_t> pick(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    ++col_count[domains[i][0].col];
    ++row_count[domains[i][0].row];
  }
  auto blocked = [&] {
    for (std::int64_t v : v_lines) {
      if (col_count[v] == 0) return false;
    }
    for (std::int64_t h : h_lines) {
      if (row_count[h] == 0) return false;
    }
    return true;
  };
  for (;;) {
    if (blocked()) return true;
    std::size_t i = 0;
    for (; i < n; ++i) {
      const GridPoint& old = domains[i][pick[i]];
      --col_count[old.col];
      --row_count[old.row];
      pick[i] = (pick[i] + 1) % domains[i].size();
      const GridPoint& now = domains[i][pick[i]];
      ++col_count[now.col];
      ++row_count[now.row];
      if (pick[i] != 0) break;
    }
    if (i == n) return false;
  }
}

bool oracle_minmax(const VHInstance& inst) {
  validate(inst);
  return oracle_lines(inst.config, inst.v_lines, inst.h_lines, Length::from_value(inst.max_move));
}

std::optional<Length> oracle_minmax_value(const Configuration& config) {
  const VHInstance full = minmax::full_instance(config, 0);
  for (const Length& d : minmax::distance_ladder(config)) {
    if (oracle_lines(config, full.v_lines, full.h_lines, d)) return d;
  }
  return std::nullopt;
}

}  // namespace wcr::oracle
