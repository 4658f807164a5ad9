#include <cstdlib>
#include <set>

#include "wcr/costs.hpp"
#include "wcr/coverage.hpp"
#include "wcr/error.hpp"
#include "wcr/reductions.hpp"

namespace wcr::reductions {

MinNumReduction gen_minnum(const sat::Formula& f) {
  if (f.dialect != sat::Dialect::max2sat_3occ) {
    fail(ErrorKind::dialect, "the MinNum construction takes a max2sat-3occ formula");
  }
  sat::validate_dialect(f);
  const int n = f.variables;
  const auto m = static_cast<std::int64_t>(f.clauses.size());

  MinNumReduction red;
  MinNumMeta& meta = red.meta;
  meta.formula = f;
  meta.side = 6 * n + 2 * f.target;

  std::vector<std::vector<std::size_t>> occurrences(n + 1);
  for (std::size_t k = 0; k < f.clauses.size(); ++k) {
    for (std::size_t l = 0; l < 2; ++l) {
      const sat::Literal lit = f.clauses[k][l];
      occurrences[std::abs(lit)].push_back(meta.literals.size());
      meta.literals.push_back({k, l, lit, static_cast<SensorId>(2 * k + l)});
    }
  }

  // Literal sensors sit in their clause column; rows come from the variable
  // band: the two same-sign occurrences around the odd one.
  std::vector<Rational> literal_y(meta.literals.size());
  for (int i = 1; i <= n; ++i) {
    const auto& occ = occurrences[i];
    const std::int64_t z = 6 * (i - 1);
    std::size_t odd = 0;
    for (std::size_t o = 0; o < 3; ++o) {
      const bool sign = meta.literals[occ[o]].literal > 0;
      int same = 0;
      for (std::size_t p = 0; p < 3; ++p) same += (meta.literals[occ[p]].literal > 0) == sign;
      if (same == 1) odd = o;
    }
    std::vector<std::size_t> pair;
    for (std::size_t o = 0; o < 3; ++o) {
      if (o != odd) pair.push_back(occ[o]);
    }
    literal_y[pair[0]] = z + 2;
    literal_y[occ[odd]] = z + 3;
    literal_y[pair[1]] = z + 4;
  }

  Configuration& c = red.config;
  c.mode = Mode::continuous;
  c.metric = Metric::manhattan;
  c.width = c.height = meta.side;
  for (std::size_t s = 0; s < meta.literals.size(); ++s) {
    const auto k = static_cast<std::int64_t>(meta.literals[s].clause) + 1;
    c.sensors.push_back({meta.literals[s].id, {Rational(2 * k - 1), literal_y[s]}, 1});
  }
  for (int i = 1; i <= n; ++i) {
    const std::int64_t z = 6 * (i - 1);
    const std::int64_t x = 2 * m + 3 * (i - 1);
    const SensorId id = 3 * n + 2 * (i - 1);
    meta.alpha.push_back(id);
    meta.beta.push_back(id + 1);
    c.sensors.push_back({id, {Rational(x + 1), Rational(z + 1)}, 1});
    c.sensors.push_back({id + 1, {Rational(x + 2), Rational(z + 5)}, 1});
  }
  validate(c);

  if (c.sensors.size() != static_cast<std::size_t>(5 * n) || 2 * m + 3 * n != 6 * n) {
    fail(ErrorKind::property_violation, "internal: MinNum construction has the wrong shape");
  }
  return red;
}

Solution embed_minnum(const MinNumReduction& red, const sat::Assignment& value) {
  const MinNumMeta& meta = red.meta;
  const std::size_t t = static_cast<std::size_t>(meta.formula.target);
  const std::size_t satisfied = sat::satisfied_count(meta.formula, value);
  if (satisfied < t) {
    fail(ErrorKind::not_enough_satisfied, "assignment satisfies " + std::to_string(satisfied) +
                                              " clauses, " + std::to_string(t) + " required");
  }

  Solution sol = identity_solution(red.config);
  const std::int64_t base = 6 * meta.formula.variables;
  std::size_t placed = 0;
  for (std::size_t k = 0; k < meta.formula.clauses.size() && placed < t; ++k) {
    for (const LiteralSensor& ls : meta.literals) {
      if (ls.clause != k || !sat::literal_true(ls.literal, value)) continue;
      const Rational at(base + 2 * static_cast<std::int64_t>(placed) + 1);
      sol.positions[ls.id] = {at, at};
      ++placed;
      break;
    }
  }
  if (!is_blocking(apply(red.config, sol)).blocking) {
    fail(ErrorKind::property_violation, "internal: embedded MinNum solution does not block");
  }
  return sol;
}

sat::Assignment extract_minnum(const MinNumReduction& red, const Solution& sol) {
  check_keys(red.config, sol);
  const MinNumMeta& meta = red.meta;
  const Solution start = identity_solution(red.config);
  auto moved = [&](SensorId id) { return !(sol.positions.at(id) == start.positions.at(id)); };

  for (std::size_t i = 0; i < meta.alpha.size(); ++i) {
    if (moved(meta.alpha[i]) || moved(meta.beta[i])) {
      fail(ErrorKind::inconsistent_solution,
           "anchor sensor of x" + std::to_string(i + 1) + " moved");
    }
  }
  std::set<std::size_t> clauses_used;
  const int n = meta.formula.variables;
  std::vector<int> forced(n + 1, 0);  // +1 true, -1 false
  for (const LiteralSensor& ls : meta.literals) {
    if (!moved(ls.id)) continue;
    if (!clauses_used.insert(ls.clause).second) {
      fail(ErrorKind::inconsistent_solution,
           "both sensors of clause " + std::to_string(ls.clause + 1) + " moved");
    }
    const int v = std::abs(ls.literal);
    const int want = ls.literal > 0 ? 1 : -1;
    if (forced[v] == -want) {
      fail(ErrorKind::inconsistent_solution, "x" + std::to_string(v) + " forced both ways");
    }
    forced[v] = want;
  }

  const CostSummary costs = solution_costs(red.config, sol);
  if (costs.moved > static_cast<std::size_t>(meta.formula.target)) {
    fail(ErrorKind::not_a_solution, "solution moves " + std::to_string(costs.moved) +
                                        " sensors, at most " +
                                        std::to_string(meta.formula.target) + " allowed");
  }
  if (!is_blocking(apply(red.config, sol)).blocking) {
    fail(ErrorKind::not_a_solution, "solution does not block the square");
  }

  sat::Assignment value(n, false);
  for (int v = 1; v <= n; ++v) value[v - 1] = forced[v] > 0;
  if (sat::satisfied_count(meta.formula, value) < static_cast<std::size_t>(meta.formula.target)) {
    fail(ErrorKind::property_violation, "internal: extracted assignment satisfies too few clauses");
  }
  return value;
}

}  // namespace wcr::reductions
