#include "wcr/random_instances.hpp"

#include <algorithm>
#include <cstdlib>

#include "wcr/error.hpp"

namespace wcr::random {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Configuration grid_configuration(Rng& rng, std::int64_t a, std::int64_t b, std::size_t n,
                                 Metric metric) {
  Configuration c;
  c.mode = Mode::integer;
  c.metric = metric;
  c.width = a;
  c.height = b;
  for (std::size_t i = 0; i < n; ++i) {
    c.sensors.push_back({static_cast<SensorId>(i),
                         {Rational(uniform(rng, 1, a)), Rational(uniform(rng, 1, b))},
                         Rational(1, 2)});
  }
  return c;
}

Configuration coverable_grid(Rng& rng, std::int64_t max_grid, std::size_t max_sensors,
                             Metric metric) {
  const std::int64_t cap = std::min<std::int64_t>(max_grid, static_cast<std::int64_t>(max_sensors));
  const std::int64_t a = uniform(rng, 1, cap);
  const std::int64_t b = uniform(rng, 1, cap);
  const auto n = static_cast<std::size_t>(
      uniform(rng, std::max(a, b), static_cast<std::int64_t>(max_sensors)));
  return grid_configuration(rng, a, b, n, metric);
}

minsum::Line1DInstance line_instance(Rng& rng, std::size_t max_points, std::int64_t max_length,
                                     std::int64_t diameter) {
  minsum::Line1DInstance inst;
  inst.radius = Rational(diameter, 2);
  const auto n = uniform(rng, 1, static_cast<std::int64_t>(max_points));
  inst.length = uniform(rng, 1, std::min(max_length, n * diameter));
  for (std::int64_t i = 0; i < n; ++i) {
    inst.points.push_back(uniform(rng, 0, static_cast<std::int64_t>(inst.length)));
  }
  return inst;
}

Configuration homogeneous_configuration(Rng& rng, std::size_t max_sensors,
                                        std::int64_t max_side) {
  Configuration c;
  c.mode = Mode::continuous;
  c.metric = Metric::manhattan;
  const std::int64_t diameter = uniform(rng, 1, 4);
  const auto n = uniform(rng, 1, static_cast<std::int64_t>(max_sensors));
  const std::int64_t cap = std::min(max_side, n * diameter);
  const std::int64_t a = uniform(rng, 1, cap);
  const std::int64_t b = uniform(rng, 1, cap);
  c.width = a;
  c.height = b;
  for (std::int64_t i = 0; i < n; ++i) {
    c.sensors.push_back({static_cast<SensorId>(i),
                         {Rational(uniform(rng, 0, a)), Rational(uniform(rng, 0, b))},
                         Rational(diameter, 2)});
  }
  return c;
}

VHInstance vh_instance(Rng& rng, std::int64_t max_grid, std::size_t max_sensors,
                       std::int64_t max_move) {
  const std::int64_t a = uniform(rng, 1, max_grid);
  const std::int64_t b = uniform(rng, 1, max_grid);
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_sensors)));
  VHInstance inst;
  inst.config = grid_configuration(rng, a, b, n);
  inst.max_move = uniform(rng, 0, max_move);
  for (std::int64_t c = 1; c <= a; ++c) {
    if (uniform(rng, 0, 2) > 0) inst.v_lines.push_back(c);
  }
  for (std::int64_t r = 1; r <= b; ++r) {
    if (uniform(rng, 0, 2) > 0) inst.h_lines.push_back(r);
  }
  return inst;
}

matching::Graph graph(Rng& rng, int max_vertices) {
  matching::Graph g;
  g.vertex_count = static_cast<int>(uniform(rng, 2, max_vertices));
  const auto extra = uniform(rng, 0, g.vertex_count * 2);
  for (std::int64_t e = 0; e < extra; ++e) {
    const auto u = static_cast<int>(uniform(rng, 0, g.vertex_count - 1));
    const auto v = static_cast<int>(uniform(rng, 0, g.vertex_count - 1));
    if (u != v) g.add_edge(u, v, static_cast<SensorId>(g.edges.size()));
  }
  std::vector<bool> touched(g.vertex_count, false);
  for (const auto& e : g.edges) touched[e.u] = touched[e.v] = true;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (touched[v]) continue;
    int u = static_cast<int>(uniform(rng, 0, g.vertex_count - 2));
    if (u >= v) ++u;
    g.add_edge(v, u, static_cast<SensorId>(g.edges.size()));
    touched[v] = touched[u] = true;
  }
  return g;
}

sat::Formula sat22_formula(Rng& rng, int n) {
  if (n <= 0 || n % 3 != 0) fail(ErrorKind::dialect, "3sat22 needs a positive multiple of 3 variables");
  std::vector<sat::Literal> pool;
  for (int v = 1; v <= n; ++v) {
    pool.insert(pool.end(), {v, v, -v, -v});
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  sat::Formula f;
  f.dialect = sat::Dialect::sat3_22;
  f.variables = n;
  for (std::size_t i = 0; i < pool.size(); i += 3) {
    f.clauses.push_back({pool[i], pool[i + 1], pool[i + 2]});
  }
  return f;
}

sat::Formula max2sat_formula(Rng& rng, int n) {
  if (n <= 0 || n % 2 != 0) fail(ErrorKind::dialect, "max2sat-3occ needs a positive even variable count");
  std::vector<sat::Literal> pool;
  for (int v = 1; v <= n; ++v) {
    const int sign = uniform(rng, 0, 1) == 0 ? 1 : -1;
    pool.insert(pool.end(), {sign * v, sign * v, -sign * v});
  }
  for (;;) {
    std::shuffle(pool.begin(), pool.end(), rng);
    bool distinct = true;
    for (std::size_t i = 0; i < pool.size(); i += 2) {
      distinct &= std::abs(pool[i]) != std::abs(pool[i + 1]);
    }
    if (distinct) break;
  }
  sat::Formula f;
  f.dialect = sat::Dialect::max2sat_3occ;
  f.variables = n;
  for (std::size_t i = 0; i < pool.size(); i += 2) f.clauses.push_back({pool[i], pool[i + 1]});
  return f;
}

}  // namespace wcr::random
