#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "wcr/rational.hpp"

namespace wcr {

using SensorId = std::int64_t;

enum class Mode { integer, continuous };
enum class Metric { manhattan, euclidean };

const char* to_string(Mode mode);
const char* to_string(Metric metric);

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Sensor {
  SensorId id = 0;
  Point center;
  Rational range;

  Rational diameter() const { return 2 * range; }
};

/// A rectangle plus sensors. In integer mode sensors sit on grid points
/// 1..width x 1..height with range 1/2 and the covered rectangle is
/// [1/2, width+1/2] x [1/2, height+1/2]; in continuous mode it is
/// [0, width] x [0, height].
struct Configuration {
  Rational width;
  Rational height;
  std::vector<Sensor> sensors;
  Mode mode = Mode::continuous;
  Metric metric = Metric::manhattan;

  Rational x_min() const;
  Rational x_max() const;
  Rational y_min() const;
  Rational y_max() const;
  bool contains(const Point& p) const;
};

/// Final positions keyed by sensor id.
struct Solution {
  std::map<SensorId, Point> positions;

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// A configuration in which only the listed vertical lines (columns) and
/// horizontal lines (rows) must be blocked, each sensor moving at most
/// `max_move`.
struct VHInstance {
  Configuration config;
  std::vector<std::int64_t> v_lines;
  std::vector<std::int64_t> h_lines;
  Rational max_move;
};

/// Integer grid coordinate; `row` grows downward in the gadget constructions
/// but nothing in the core depends on that orientation.
struct GridPoint {
  std::int64_t col = 0;
  std::int64_t row = 0;

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// Throws Error{validation} on any broken invariant: duplicate ids,
/// non-positive ranges or dimensions, integer-mode grid violations, or
/// sensors outside the covered rectangle.
void validate(const Configuration& config);
void validate(const VHInstance& inst);

/// Sum of diameters reaches max(width, height).
bool has_sufficient_diameter(const Configuration& config);

bool is_homogeneous(const Configuration& config);

Solution identity_solution(const Configuration& config);

/// Throws Error{key_mismatch} unless `sol` is keyed by exactly the ids of
/// `config`.
void check_keys(const Configuration& config, const Solution& sol);

/// The configuration with every sensor moved to its final position.
Configuration apply(const Configuration& config, const Solution& sol);

/// Throws Error{mode} unless integer mode.
void require_integer_mode(const Configuration& config);

std::int64_t grid_width(const Configuration& config);
std::int64_t grid_height(const Configuration& config);
GridPoint to_grid(const Point& p);
Point to_point(const GridPoint& g);

/// Swaps the axes of the rectangle, every sensor, and every solution point.
Configuration transpose(const Configuration& config);
Solution transpose(const Solution& sol);

/// Mirror across the vertical (x) or horizontal (y) centre line of the
/// covered rectangle.
Configuration mirror_x(const Configuration& config);
Configuration mirror_y(const Configuration& config);
Solution mirror_x(const Configuration& config, const Solution& sol);
Solution mirror_y(const Configuration& config, const Solution& sol);

}  // namespace wcr
