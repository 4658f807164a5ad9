#include "wcr/core.hpp"

#include <algorithm>
#include <set>

#include "wcr/error.hpp"

namespace wcr {

const char* to_string(Mode mode) {
  return mode == Mode::integer ? "integer" : "continuous";
}

const char* to_string(Metric metric) {
  return metric == Metric::manhattan ? "manhattan" : "euclidean";
}

namespace {

const Rational kHalf(1, 2);

}  // namespace

Rational Configuration::x_min() const {
  return mode == Mode::integer ? kHalf : Rational(0);
}
Rational Configuration::x_max() const {
  return mode == Mode::integer ? Rational(width + kHalf) : width;
}
Rational Configuration::y_min() const {
  return mode == Mode::integer ? kHalf : Rational(0);
}
Rational Configuration::y_max() const {
  return mode == Mode::integer ? Rational(height + kHalf) : height;
}

bool Configuration::contains(const Point& p) const {
  if (mode == Mode::integer) {
    return is_integer(p.x) && is_integer(p.y) && p.x >= 1 && p.x <= width &&
           p.y >= 1 && p.y <= height;
  }
  return p.x >= 0 && p.x <= width && p.y >= 0 && p.y <= height;
}

void validate(const Configuration& config) {
  if (config.width <= 0 || config.height <= 0) {
    fail(ErrorKind::validation, "rectangle dimensions must be positive");
  }
  if (config.mode == Mode::integer &&
      (!is_integer(config.width) || !is_integer(config.height))) {
    fail(ErrorKind::validation, "integer mode requires integer width and height");
  }
  std::set<SensorId> seen;
  for (const Sensor& s : config.sensors) {
    const std::string where = "sensor " + std::to_string(s.id);
    if (s.id < 0) fail(ErrorKind::validation, where + ": negative id");
    if (!seen.insert(s.id).second) {
      fail(ErrorKind::validation, where + ": duplicate id");
    }
    if (s.range <= 0) fail(ErrorKind::validation, where + ": range must be positive");
    if (config.mode == Mode::integer) {
      if (s.range != kHalf) {
        fail(ErrorKind::validation, where + ": integer mode requires range 1/2");
      }
      if (!is_integer(s.center.x) || !is_integer(s.center.y)) {
        fail(ErrorKind::validation, where + ": integer mode requires integer coordinates");
      }
    }
    if (!config.contains(s.center)) {
      fail(ErrorKind::validation, where + ": centre outside the rectangle");
    }
  }
}

void validate(const VHInstance& inst) {
  validate(inst.config);
  require_integer_mode(inst.config);
  const std::int64_t a = grid_width(inst.config);
  const std::int64_t b = grid_height(inst.config);
  for (std::int64_t v : inst.v_lines) {
    if (v < 1 || v > a) fail(ErrorKind::validation, "v_line out of range: " + std::to_string(v));
  }
  for (std::int64_t h : inst.h_lines) {
    if (h < 1 || h > b) fail(ErrorKind::validation, "h_line out of range: " + std::to_string(h));
  }
  if (inst.max_move < 0) fail(ErrorKind::validation, "max_move must be non-negative");
}

bool has_sufficient_diameter(const Configuration& config) {
  Rational total = 0;
  for (const Sensor& s : config.sensors) total += s.diameter();
  return total >= std::max(config.width, config.height);
}

bool is_homogeneous(const Configuration& config) {
  return std::all_of(config.sensors.begin(), config.sensors.end(), [&](const Sensor& s) {
    return s.range == config.sensors.front().range;
  });
}

Solution identity_solution(const Configuration& config) {
  Solution sol;
  for (const Sensor& s : config.sensors) sol.positions.emplace(s.id, s.center);
  return sol;
}

void check_keys(const Configuration& config, const Solution& sol) {
  if (sol.positions.size() != config.sensors.size()) {
    fail(ErrorKind::key_mismatch, "solution has " + std::to_string(sol.positions.size()) +
                                      " positions for " +
                                      std::to_string(config.sensors.size()) + " sensors");
  }
  for (const Sensor& s : config.sensors) {
    if (!sol.positions.contains(s.id)) {
      fail(ErrorKind::key_mismatch, "solution lacks sensor " + std::to_string(s.id));
    }
  }
}

Configuration apply(const Configuration& config, const Solution& sol) {
  check_keys(config, sol);
  Configuration out = config;
  for (Sensor& s : out.sensors) s.center = sol.positions.at(s.id);
  return out;
}

void require_integer_mode(const Configuration& config) {
  if (config.mode != Mode::integer) {
    fail(ErrorKind::mode, "operation requires an integer-mode configuration");
  }
}

std::int64_t grid_width(const Configuration& config) { return to_int64(config.width); }
std::int64_t grid_height(const Configuration& config) { return to_int64(config.height); }

GridPoint to_grid(const Point& p) { return {to_int64(p.x), to_int64(p.y)}; }
Point to_point(const GridPoint& g) { return {Rational(g.col), Rational(g.row)}; }

Configuration transpose(const Configuration& config) {
  Configuration out = config;
  std::swap(out.width, out.height);
  for (Sensor& s : out.sensors) std::swap(s.center.x, s.center.y);
  return out;
}

Solution transpose(const Solution& sol) {
  Solution out;
  for (const auto& [id, p] : sol.positions) out.positions.emplace(id, Point{p.y, p.x});
  return out;
}

namespace {

Rational mirror(const Rational& v, const Rational& lo, const Rational& hi) {
  return lo + hi - v;
}

}  // namespace

Configuration mirror_x(const Configuration& config) {
  Configuration out = config;
  for (Sensor& s : out.sensors) s.center.x = mirror(s.center.x, config.x_min(), config.x_max());
  return out;
}

Configuration mirror_y(const Configuration& config) {
  Configuration out = config;
  for (Sensor& s : out.sensors) s.center.y = mirror(s.center.y, config.y_min(), config.y_max());
  return out;
}

Solution mirror_x(const Configuration& config, const Solution& sol) {
  Solution out;
  for (const auto& [id, p] : sol.positions) {
    out.positions.emplace(id, Point{mirror(p.x, config.x_min(), config.x_max()), p.y});
  }
  return out;
}

Solution mirror_y(const Configuration& config, const Solution& sol) {
  Solution out;
  for (const auto& [id, p] : sol.positions) {
    out.positions.emplace(id, Point{p.x, mirror(p.y, config.y_min(), config.y_max())});
  }
  return out;
}

}  // namespace wcr
