#pragma once

#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "wcr/core.hpp"
#include "wcr/error.hpp"

namespace wcr::test {

/// Integer-mode grid with unit-diameter sensors at the given (col, row)
/// cells; ids follow list order.
inline Configuration grid(std::int64_t a, std::int64_t b,
                          const std::vector<std::pair<std::int64_t, std::int64_t>>& cells,
                          Metric metric = Metric::manhattan) {
  Configuration c;
  c.width = a;
  c.height = b;
  c.mode = Mode::integer;
  c.metric = metric;
  SensorId id = 0;
  for (const auto& [col, row] : cells) {
    c.sensors.push_back({id++, {Rational(col), Rational(row)}, Rational(1, 2)});
  }
  return c;
}

/// Identity solution with a few sensors relocated.
inline Solution relocate(const Configuration& c, const std::map<SensorId, Point>& moves) {
  Solution s = identity_solution(c);
  for (const auto& [id, p] : moves) s.positions.at(id) = p;
  return s;
}

inline Point pt(const Rational& x, const Rational& y) { return {x, y}; }

template <typename F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no wcr::Error raised";
  return ErrorKind::property_violation;
}

}  // namespace wcr::test
