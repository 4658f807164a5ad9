#include "wcr/minsum.hpp"

#include <algorithm>
#include <numeric>

#include "wcr/error.hpp"

namespace wcr::minsum {

namespace {

/// Convex piecewise-linear function given by its breakpoints; linear in
/// between, undefined outside [front.x, back.x].
class Convex {
 public:
  struct Knot {
    Rational x;
    Rational v;
  };

  explicit Convex(std::vector<Knot> knots) : knots_(std::move(knots)) {}

  bool empty() const { return knots_.empty(); }
  const Rational& lo() const { return knots_.front().x; }
  const Rational& hi() const { return knots_.back().x; }

  Rational operator()(const Rational& x) const {
    auto it = std::lower_bound(knots_.begin(), knots_.end(), x,
                               [](const Knot& k, const Rational& t) { return k.x < t; });
    if (it->x == x) return it->v;
    const Knot& b = *it;
    const Knot& a = *(it - 1);
    return a.v + (b.v - a.v) * (x - a.x) / (b.x - a.x);
  }

  /// Restriction to [a, b]; empty if disjoint.
  Convex restricted(const Rational& a, const Rational& b) const {
    const Rational from = std::max(a, lo());
    const Rational to = std::min(b, hi());
    if (from > to) return Convex({});
    std::vector<Knot> out{{from, (*this)(from)}};
    for (const Knot& k : knots_) {
      if (k.x > from && k.x < to) out.push_back(k);
    }
    if (to > from) out.push_back({to, (*this)(to)});
    return Convex(std::move(out));
  }

  /// Adds |p - t|.
  void add_distance(const Rational& p) {
    if (p > lo() && p < hi()) {
      auto it = std::lower_bound(knots_.begin(), knots_.end(), p,
                                 [](const Knot& k, const Rational& t) { return k.x < t; });
      if (it->x != p) knots_.insert(it, Knot{p, (*this)(p)});
    }
    for (Knot& k : knots_) k.v += abs(p - k.x);
  }

  /// Leftmost point attaining the minimum; always a knot by convexity.
  const Knot& argmin() const {
    const Knot* best = &knots_.front();
    for (const Knot& k : knots_) {
      if (k.v < best->v) best = &k;
    }
    return *best;
  }

  /// t -> min of this function over [t, t + w].
  Convex window_min(const Rational& w) const {
    const Knot m = argmin();
    std::vector<Knot> out;
    for (const Knot& k : knots_) {
      if (k.x <= m.x) out.push_back({k.x - w, k.v});
    }
    if (w > 0) out.push_back(m);
    for (const Knot& k : knots_) {
      if (k.x > m.x) out.push_back(k);
    }
    return Convex(std::move(out));
  }

 private:
  std::vector<Knot> knots_;
};

}  // namespace

Line1DResult solve_minsum_1d(const Line1DInstance& inst) {
  return solve_minsum_1d(inst, 0, inst.length);
}

Line1DResult solve_minsum_1d(const Line1DInstance& inst, const Rational& lo,
                             const Rational& hi) {
  const std::size_t n = inst.points.size();
  const Rational& r = inst.radius;
  const Rational& len = inst.length;
  if (r <= 0 || len <= 0) fail(ErrorKind::validation, "radius and length must be positive");
  for (const Rational& p : inst.points) {
    if (p < 0 || p > len) fail(ErrorKind::validation, "point outside the segment");
  }
  if (Rational(static_cast<long long>(n)) * 2 * r < len) {
    fail(ErrorKind::infeasible, "total diameter is shorter than the segment");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return inst.points[a] < inst.points[b]; });
  auto point = [&](std::size_t i) -> const Rational& { return inst.points[order[i]]; };

  // cost_to_go[i](t): cheapest placement of sorted points i..n-1 when point
  // i sits at t and coverage of [t, len] is still owed by them.
  const Rational step = 2 * r;
  std::vector<Convex> cost_to_go;
  cost_to_go.reserve(n);
  const Rational right = std::max(lo, len - r);
  if (right > hi) fail(ErrorKind::infeasible, "no target can cover the right end");
  Convex last = right == hi ? Convex({{right, 0}}) : Convex({{right, 0}, {hi, 0}});
  last.add_distance(point(n - 1));
  cost_to_go.push_back(last);
  for (std::size_t i = n - 1; i-- > 0;) {
    Convex next = cost_to_go.back().window_min(step).restricted(lo, hi);
    if (next.empty()) fail(ErrorKind::infeasible, "targets cannot be chained");
    next.add_distance(point(i));
    cost_to_go.push_back(std::move(next));
  }
  std::reverse(cost_to_go.begin(), cost_to_go.end());

  Line1DResult out;
  out.targets.resize(n);
  Convex first = cost_to_go[0].restricted(lo, std::min(r, hi));
  if (first.empty()) fail(ErrorKind::infeasible, "no target can cover the left end");
  Rational t = first.argmin().x;
  out.cost = first.argmin().v;
  out.targets[order[0]] = t;
  for (std::size_t i = 1; i < n; ++i) {
    t = cost_to_go[i].restricted(t, t + step).argmin().x;
    out.targets[order[i]] = t;
  }
  return out;
}

AxisProblem axis_problem(const Configuration& config, bool x_axis) {
  AxisProblem out;
  const Rational side = x_axis ? config.width : config.height;
  out.line.length = side;
  out.line.radius = config.sensors.empty() ? Rational(0) : config.sensors.front().range;
  const bool grid = config.mode == Mode::integer;
  out.offset = grid ? Rational(1, 2) : Rational(0);
  for (const Sensor& s : config.sensors) {
    out.line.points.push_back((x_axis ? s.center.x : s.center.y) - out.offset);
  }
  out.lo = grid ? out.line.radius : Rational(0);
  out.hi = grid ? Rational(side - out.line.radius) : side;
  return out;
}

MinSumResult solve_minsum_manhattan(const Configuration& config) {
  validate(config);
  if (config.metric != Metric::manhattan) {
    fail(ErrorKind::mode, "MinSum is solved for the Manhattan metric only");
  }
  if (!is_homogeneous(config)) {
    fail(ErrorKind::heterogeneous_ranges,
         "sensor ranges differ; this case is NP-hard, use the brute-force oracle");
  }
  if (config.sensors.empty() || !has_sufficient_diameter(config)) {
    fail(ErrorKind::infeasible, "total diameter is shorter than the longer side");
  }

  MinSumResult out;
  const AxisProblem xp = axis_problem(config, true);
  const AxisProblem yp = axis_problem(config, false);
  const Line1DResult xs = solve_minsum_1d(xp.line, xp.lo, xp.hi);
  const Line1DResult ys = solve_minsum_1d(yp.line, yp.lo, yp.hi);
  out.x_cost = xs.cost;
  out.y_cost = ys.cost;
  for (std::size_t i = 0; i < config.sensors.size(); ++i) {
    out.solution.positions.emplace(
        config.sensors[i].id, Point{xs.targets[i] + xp.offset, ys.targets[i] + yp.offset});
  }
  return out;
}

}  // namespace wcr::minsum
