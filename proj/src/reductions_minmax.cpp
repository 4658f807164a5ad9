#include <algorithm>
#include <set>

#include "wcr/coverage.hpp"
#include "wcr/error.hpp"
#include "wcr/reductions.hpp"

namespace wcr::reductions {

namespace {

std::vector<std::int64_t> missing_lines(const std::vector<std::int64_t>& required,
                                        std::int64_t count) {
  const std::set<std::int64_t> req(required.begin(), required.end());
  std::vector<std::int64_t> out;
  for (std::int64_t i = 1; i <= count; ++i) {
    if (!req.contains(i)) out.push_back(i);
  }
  return out;
}

}  // namespace

MinMaxReduction gen_minmax(const VHInstance& vh) {
  validate(vh);
  const Configuration& src = vh.config;
  const std::int64_t a = grid_width(src);
  const std::int64_t b = grid_height(src);
  if (vh.max_move != 1) fail(ErrorKind::property_violation, "the padding construction needs D = 1");
  const std::set<std::int64_t> v_set(vh.v_lines.begin(), vh.v_lines.end());
  const std::set<std::int64_t> h_set(vh.h_lines.begin(), vh.h_lines.end());
  if (v_set.contains(a) || h_set.contains(b)) {
    fail(ErrorKind::property_violation, "the last column and row must not be required");
  }
  for (const Sensor& s : src.sensors) {
    if (s.center.x == a || s.center.y == b) {
      fail(ErrorKind::property_violation,
           "sensor " + std::to_string(s.id) + " lies on the last column or row");
    }
  }

  const auto nv = static_cast<std::int64_t>(v_set.size());
  const auto nh = static_cast<std::int64_t>(h_set.size());
  MinMaxReduction red;
  MinMaxMeta& meta = red.meta;
  meta.source = vh;
  meta.dx = b - nh + 4;
  meta.dy = a - nv + 4;

  Configuration& c = red.config;
  c.mode = Mode::integer;
  c.metric = src.metric;
  c.width = a + b - nh + 7;
  c.height = b + a - nv + 7;
  const std::int64_t width = grid_width(c);
  const std::int64_t height = grid_height(c);
  for (const Sensor& s : src.sensors) {
    c.sensors.push_back({s.id, {s.center.x + meta.dx, s.center.y + meta.dy}, Rational(1, 2)});
  }

  SensorId next = 0;
  for (const Sensor& s : src.sensors) next = std::max(next, s.id + 1);
  auto add = [&](std::vector<SensorId>& roles, std::int64_t col, std::int64_t row) {
    roles.push_back(next);
    c.sensors.push_back({next++, to_point({col, row}), Rational(1, 2)});
  };

  const auto free_cols = missing_lines(vh.v_lines, a);
  const auto free_rows = missing_lines(vh.h_lines, b);
  const auto fc = static_cast<std::int64_t>(free_cols.size());
  const auto fr = static_cast<std::int64_t>(free_rows.size());
  for (std::int64_t i = 1; i <= fc; ++i) add(meta.v_border, free_cols[i - 1] + meta.dx, fc + 1 - i);
  add(meta.v_border, free_cols.back() + meta.dx, 1);
  for (int k = 0; k < 3; ++k) add(meta.v_border, width, fc + 3);
  for (std::int64_t j = 1; j <= fr; ++j) add(meta.h_border, fr + 1 - j, free_rows[j - 1] + meta.dy);
  add(meta.h_border, 1, free_rows.back() + meta.dy);
  for (int k = 0; k < 3; ++k) add(meta.h_border, fr + 3, height);
  validate(c);

  if (width != a + b - nh + 7 || height != b + a - nv + 7) {
    fail(ErrorKind::property_violation, "internal: padded grid has the wrong size");
  }
  return red;
}

Solution embed_minmax(const MinMaxReduction& red, const Solution& vh_solution) {
  const MinMaxMeta& meta = red.meta;
  check_keys(meta.source.config, vh_solution);
  if (Length::from_value(1) < max_move(meta.source.config, vh_solution) ||
      !vh_coverage(meta.source, vh_solution).blocking()) {
    fail(ErrorKind::not_a_solution, "input is not a unit-move (V,H)-blocking solution");
  }

  Solution sol = identity_solution(red.config);
  for (const auto& [id, p] : vh_solution.positions) {
    sol.positions[id] = {p.x + meta.dx, p.y + meta.dy};
  }
  auto shift = [&](SensorId id, std::int64_t dc, std::int64_t dr) {
    Point& p = sol.positions.at(id);
    p = {p.x + dc, p.y + dr};
  };
  const std::size_t nv = meta.v_border.size() - 4;
  for (std::size_t i = 0; i < nv; ++i) shift(meta.v_border[i], 0, 1);
  shift(meta.v_border[nv], 1, 0);
  shift(meta.v_border[nv + 1], -1, 0);
  shift(meta.v_border[nv + 2], 0, -1);
  shift(meta.v_border[nv + 3], 0, 1);
  const std::size_t nh = meta.h_border.size() - 4;
  for (std::size_t j = 0; j < nh; ++j) shift(meta.h_border[j], 1, 0);
  shift(meta.h_border[nh], 0, 1);
  shift(meta.h_border[nh + 1], 0, -1);
  shift(meta.h_border[nh + 2], -1, 0);
  shift(meta.h_border[nh + 3], 1, 0);

  if (!is_blocking(apply(red.config, sol)).blocking ||
      Length::from_value(1) < max_move(red.config, sol)) {
    fail(ErrorKind::property_violation, "internal: padded solution does not block");
  }
  return sol;
}

Solution extract_minmax(const MinMaxReduction& red, const Solution& sol) {
  const MinMaxMeta& meta = red.meta;
  check_keys(red.config, sol);
  if (Length::from_value(1) < max_move(red.config, sol)) {
    fail(ErrorKind::not_a_solution, "some sensor moves farther than 1");
  }
  if (!is_blocking(apply(red.config, sol)).blocking) {
    fail(ErrorKind::not_a_solution, "solution does not block the padded grid");
  }
  Solution out;
  for (const Sensor& s : meta.source.config.sensors) {
    const Point& p = sol.positions.at(s.id);
    out.positions.emplace(s.id, Point{p.x - meta.dx, p.y - meta.dy});
  }
  for (const auto& [id, p] : out.positions) {
    if (!meta.source.config.contains(p)) {
      fail(ErrorKind::not_a_solution, "sensor " + std::to_string(id) + " leaves the source grid");
    }
  }
  if (!vh_coverage(meta.source, out).blocking()) {
    fail(ErrorKind::not_a_solution, "extracted solution is not (V,H)-blocking");
  }
  return out;
}

}  // namespace wcr::reductions
