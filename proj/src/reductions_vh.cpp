#include <algorithm>
#include <cstdlib>
#include <map>

#include "wcr/costs.hpp"
#include "wcr/coverage.hpp"
#include "wcr/error.hpp"
#include "wcr/reductions.hpp"

namespace wcr::reductions {

namespace {

// Variable gadget layout, local (col, row) with rows growing downward.
constexpr std::array<std::int64_t, 8> kLocalRows{3, 4, 9, 10, 15, 16, 21, 22};
constexpr std::array<std::int64_t, 4> kLocalVCols{2, 6, 10, 14};
constexpr std::array<GridPoint, 8> kLocalSensors{{
    {3, 4}, {3, 10}, {7, 16}, {7, 22}, {11, 2}, {11, 14}, {15, 8}, {15, 20}}};

// Destinations for x = true and x = false.
constexpr std::array<GridPoint, 8> kMoveTrue{{
    {3, 3}, {2, 10}, {6, 16}, {7, 21}, {10, 2}, {11, 15}, {15, 9}, {14, 20}}};
constexpr std::array<GridPoint, 8> kMoveFalse{{
    {2, 4}, {3, 9}, {7, 15}, {6, 22}, {11, 3}, {10, 14}, {14, 8}, {15, 21}}};

// (p, q, slot of r): a 2-clause sensor, the switch sensor two rows below it,
// and the row of the 3-clause sensor one further row down.
struct Triple {
  VariableRole p;
  VariableRole q;
  RowRole slot;
};
constexpr std::array<Triple, 4> kTriples{{
    {kF, kA, kA3}, {kJ, kB, kA2}, {kG, kC, kA3p}, {kK, kE, kA2p}}};

GridPoint global(const VariableGadget& g, const GridPoint& local) {
  return {g.col0 + local.col, g.row0 + local.row};
}

std::map<SensorId, GridPoint> start_grid(const VHInstance& inst) {
  std::map<SensorId, GridPoint> out;
  for (const Sensor& s : inst.config.sensors) out.emplace(s.id, to_grid(s.center));
  return out;
}

/// The clause sensor owning a slot row.
SensorId slot_owner(const VHMeta& meta, std::int64_t slot_row) {
  for (const ClauseGadget& cg : meta.clauses) {
    for (const ClauseLiteral& cl : cg.literals) {
      if (cl.slot_row == slot_row) return cl.id;
    }
  }
  fail(ErrorKind::not_gadget_instance, "no clause sensor on slot row " + std::to_string(slot_row));
}

void require_unit_blocking(const VHReduction& red, const Solution& sol, bool integer) {
  const Configuration& c = red.instance.config;
  check_keys(c, sol);
  for (const auto& [id, p] : sol.positions) {
    if (integer && (!is_integer(p.x) || !is_integer(p.y))) {
      fail(ErrorKind::not_a_solution, "sensor " + std::to_string(id) + " is off the grid");
    }
  }
  if (Length::from_value(1) < max_move(c, sol)) {
    fail(ErrorKind::not_a_solution, "some sensor moves farther than 1");
  }
  const VHCoverage cov = vh_coverage(red.instance, sol);
  if (!cov.blocking()) {
    fail(ErrorKind::not_a_solution,
         std::to_string(cov.unblocked_v.size() + cov.unblocked_h.size()) +
             " required lines are unblocked");
  }
}

}  // namespace

Length max_move(const Configuration& config, const Solution& sol) {
  return solution_costs(config, sol).max;
}

VHReduction gen_vh(const sat::Formula& f) {
  if (f.dialect != sat::Dialect::sat3_22) {
    fail(ErrorKind::dialect, "the (V,H) construction takes a 3sat22 formula");
  }
  sat::validate_dialect(f);
  const int n = f.variables;
  const auto m = static_cast<std::int64_t>(f.clauses.size());

  VHReduction red;
  VHMeta& meta = red.meta;
  meta.formula = f;
  VHInstance& inst = red.instance;
  Configuration& c = inst.config;
  c.mode = Mode::integer;
  c.metric = Metric::manhattan;
  c.width = 16 * n + 4 * m;
  c.height = 24 * n;
  inst.max_move = 1;

  for (int v = 1; v <= n; ++v) {
    VariableGadget g;
    g.variable = v;
    g.col0 = 16 * (v - 1);
    g.row0 = 24 * (v - 1);
    for (std::size_t i = 0; i < 8; ++i) g.rows[i] = g.row0 + kLocalRows[i];
    for (std::size_t i = 0; i < 4; ++i) g.v_cols[i] = g.col0 + kLocalVCols[i];
    for (std::size_t i = 0; i < 8; ++i) {
      g.sensors[i] = 8 * (v - 1) + static_cast<SensorId>(i);
      c.sensors.push_back({g.sensors[i], to_point(global(g, kLocalSensors[i])), Rational(1, 2)});
    }
    inst.v_lines.insert(inst.v_lines.end(), g.v_cols.begin(), g.v_cols.end());
    inst.h_lines.insert(inst.h_lines.end(), g.rows.begin(), g.rows.end());
    meta.variables.push_back(g);
  }

  // Positive occurrences take rows a2 then a3', negative ones a3 then a2'.
  std::vector<std::size_t> next_pos(n + 1, 0);
  std::vector<std::size_t> next_neg(n + 1, 0);
  for (std::int64_t j = 0; j < m; ++j) {
    ClauseGadget cg;
    cg.col0 = 16 * n + 4 * j;
    cg.v_col = cg.col0 + 2;
    inst.v_lines.push_back(cg.v_col);
    for (std::size_t l = 0; l < 3; ++l) {
      const sat::Literal lit = f.clauses[j][l];
      const VariableGadget& g = meta.variables[std::abs(lit) - 1];
      const std::int64_t slot =
          lit > 0 ? g.rows[next_pos[std::abs(lit)]++ == 0 ? kA2 : kA3p]
                  : g.rows[next_neg[std::abs(lit)]++ == 0 ? kA3 : kA2p];
      const SensorId id = 8 * n + 3 * j + static_cast<SensorId>(l);
      cg.literals.push_back({lit, slot, id});
      c.sensors.push_back({id, to_point({cg.col0 + 3, slot + 1}), Rational(1, 2)});
    }
    meta.clauses.push_back(cg);
  }
  std::sort(inst.v_lines.begin(), inst.v_lines.end());
  std::sort(inst.h_lines.begin(), inst.h_lines.end());
  validate(inst);

  const std::int64_t a = grid_width(c);
  const std::int64_t b = grid_height(c);
  bool edge_free = true;
  for (const Sensor& s : c.sensors) edge_free &= s.center.x != a && s.center.y != b;
  if (static_cast<std::int64_t>(inst.v_lines.size()) != 4 * n + m ||
      static_cast<std::int64_t>(inst.h_lines.size()) != 8 * n ||
      static_cast<std::int64_t>(c.sensors.size()) != 8 * n + 3 * m || !edge_free ||
      inst.v_lines.back() == a || inst.h_lines.back() == b) {
    fail(ErrorKind::property_violation, "internal: (V,H) construction has the wrong shape");
  }
  return red;
}

void check_gadget_instance(const VHInstance& inst, const VHMeta& meta) {
  const VHReduction expected = gen_vh(meta.formula);
  auto same = [](const VHInstance& x, const VHInstance& y) {
    if (x.config.width != y.config.width || x.config.height != y.config.height ||
        x.config.mode != y.config.mode || x.v_lines != y.v_lines || x.h_lines != y.h_lines ||
        x.max_move != y.max_move || x.config.sensors.size() != y.config.sensors.size()) {
      return false;
    }
    const Solution sx = identity_solution(x.config);
    const Solution sy = identity_solution(y.config);
    return sx == sy;
  };
  if (!same(inst, expected.instance)) {
    fail(ErrorKind::not_gadget_instance, "instance differs from the construction of its formula");
  }
}

Solution embed_vh(const VHReduction& red, const sat::Assignment& value) {
  const VHMeta& meta = red.meta;
  for (std::size_t j = 0; j < meta.formula.clauses.size(); ++j) {
    if (!sat::clause_satisfied(meta.formula.clauses[j], value)) {
      fail(ErrorKind::unsatisfied_clause, "clause " + std::to_string(j + 1) + " is not satisfied");
    }
  }
  Solution sol = identity_solution(red.instance.config);
  for (const VariableGadget& g : meta.variables) {
    const auto& table = value.at(g.variable - 1) ? kMoveTrue : kMoveFalse;
    for (std::size_t i = 0; i < 8; ++i) sol.positions[g.sensors[i]] = to_point(global(g, table[i]));
  }
  for (const ClauseGadget& cg : meta.clauses) {
    bool chosen = false;
    for (const ClauseLiteral& cl : cg.literals) {
      GridPoint p = to_grid(sol.positions.at(cl.id));
      if (!chosen && sat::literal_true(cl.literal, value)) {
        --p.col;
        chosen = true;
      } else {
        --p.row;
      }
      sol.positions[cl.id] = to_point(p);
    }
  }
  require_unit_blocking(red, sol, true);
  return sol;
}

sat::Assignment extract_vh(const VHReduction& red, const Solution& sol) {
  require_unit_blocking(red, sol, true);
  const VHMeta& meta = red.meta;
  const auto start = start_grid(red.instance);
  const int n = meta.formula.variables;
  std::vector<bool> pos_true(n + 1, false);
  std::vector<bool> neg_true(n + 1, false);
  for (const ClauseGadget& cg : meta.clauses) {
    for (const ClauseLiteral& cl : cg.literals) {
      const GridPoint from = start.at(cl.id);
      const GridPoint to = to_grid(sol.positions.at(cl.id));
      if (to.col == from.col - 1 && to.row == from.row) {
        (cl.literal > 0 ? pos_true : neg_true)[std::abs(cl.literal)] = true;
      }
    }
  }
  sat::Assignment value(n, false);
  for (int v = 1; v <= n; ++v) {
    if (pos_true[v] && neg_true[v]) {
      fail(ErrorKind::inconsistent_solution,
           "x" + std::to_string(v) + " has a true positive and a true negated literal");
    }
    value[v - 1] = pos_true[v];
  }
  for (std::size_t j = 0; j < meta.formula.clauses.size(); ++j) {
    if (!sat::clause_satisfied(meta.formula.clauses[j], value)) {
      fail(ErrorKind::property_violation,
           "internal: extracted assignment leaves clause " + std::to_string(j + 1) + " unsatisfied");
    }
  }
  return value;
}

Solution integerize_passes(const VHReduction& red, const Solution& sol) {
  const VHMeta& meta = red.meta;
  std::map<SensorId, Point> start;
  for (const Sensor& s : red.instance.config.sensors) start.emplace(s.id, s.center);
  Solution out = sol;
  auto at = [&](SensorId id) -> Point& { return out.positions.at(id); };
  auto dy = [&](SensorId id) { return at(id).y - start.at(id).y; };
  auto fractional = [](const Rational& d) { return !is_integer(d); };
  auto reset_y = [&](SensorId id) { at(id).y = start.at(id).y; };

  // Every sensor has exactly one required column within reach, one to its
  // left. Horizontal movement that does not land on it is dropped.
  for (auto& [id, p] : out.positions) {
    if (p.x != start.at(id).x - 1) p.x = start.at(id).x;
  }

  struct Roles {
    SensorId p, q, r;
  };
  std::vector<Roles> triples;
  for (const VariableGadget& g : meta.variables) {
    for (const Triple& t : kTriples) {
      triples.push_back({g.sensors[t.p], g.sensors[t.q], slot_owner(meta, g.rows[t.slot])});
    }
  }

  for (const Roles& t : triples) {
    const Rational d = dy(t.p);
    if (!fractional(d)) continue;
    if (d < 0) {
      reset_y(t.p);
    } else {
      at(t.p).y = start.at(t.p).y + 1;
      reset_y(t.q);
      reset_y(t.r);
    }
  }
  for (const Roles& t : triples) {
    const Rational d = dy(t.q);
    if (!fractional(d)) continue;
    if (d < 0) {
      at(t.p).y = start.at(t.p).y + 1;
      at(t.p).x = start.at(t.p).x;
      reset_y(t.r);
    }
    reset_y(t.q);
  }
  for (const Roles& t : triples) {
    if (fractional(dy(t.r))) reset_y(t.r);
  }
  return out;
}

Solution integerize(const VHReduction& red, const Solution& sol) {
  check_gadget_instance(red.instance, red.meta);
  require_unit_blocking(red, sol, false);
  Solution out = integerize_passes(red, sol);
  require_unit_blocking(red, out, true);
  return out;
}

}  // namespace wcr::reductions
