#include "wcr/minnum.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

#include "wcr/coverage.hpp"
#include "wcr/error.hpp"

namespace wcr::minnum {

const char* to_string(SensorType type) {
  switch (type) {
    case SensorType::type0: return "type0";
    case SensorType::type1: return "type1";
    case SensorType::type2: return "type2";
    case SensorType::type3: return "type3";
    case SensorType::type4: return "type4";
  }
  return "?";
}

bool is_free(SensorType type) {
  return type == SensorType::type2 || type == SensorType::type3 || type == SensorType::type4;
}

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::jump: return "jump";
    case MoveKind::slide_row: return "slide-row";
    case MoveKind::slide_col: return "slide-col";
  }
  return "?";
}

namespace {

struct Placed {
  SensorId id;
  GridPoint at;
};

/// Sensors ordered by (row, column, id).
std::vector<Placed> placed_sensors(const Configuration& config) {
  std::vector<Placed> out;
  for (const Sensor& s : config.sensors) out.push_back({s.id, to_grid(s.center)});
  std::sort(out.begin(), out.end(), [](const Placed& a, const Placed& b) {
    return std::tie(a.at.row, a.at.col, a.id) < std::tie(b.at.row, b.at.col, b.id);
  });
  return out;
}

struct Occupancy {
  std::map<std::int64_t, std::size_t> rows;
  std::map<std::int64_t, std::size_t> cols;

  void add(const GridPoint& p) {
    ++rows[p.row];
    ++cols[p.col];
  }
  void remove(const GridPoint& p) {
    if (--rows[p.row] == 0) rows.erase(p.row);
    if (--cols[p.col] == 0) cols.erase(p.col);
  }
  std::size_t in_row(std::int64_t r) const {
    auto it = rows.find(r);
    return it == rows.end() ? 0 : it->second;
  }
  std::size_t in_col(std::int64_t c) const {
    auto it = cols.find(c);
    return it == cols.end() ? 0 : it->second;
  }
};

Occupancy occupancy_of(const std::vector<Placed>& sensors) {
  Occupancy occ;
  for (const Placed& p : sensors) occ.add(p.at);
  return occ;
}

std::vector<std::int64_t> empty_lines(const std::map<std::int64_t, std::size_t>& used,
                                      std::int64_t count) {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 1; i <= count; ++i) {
    if (!used.contains(i)) out.push_back(i);
  }
  return out;
}

void check_unit_grid(const Configuration& config) {
  require_integer_mode(config);
  validate(config);
}

}  // namespace

std::map<SensorId, SensorType> classify(const Configuration& config) {
  check_unit_grid(config);
  const auto sensors = placed_sensors(config);
  const Occupancy occ = occupancy_of(sensors);

  std::map<SensorId, SensorType> out;
  std::set<std::int64_t> rows_with_type1;
  std::set<std::int64_t> cols_with_type1;
  for (const Placed& p : sensors) {
    const bool row_shared = occ.in_row(p.at.row) > 1;
    const bool col_shared = occ.in_col(p.at.col) > 1;
    if (!row_shared && !col_shared) {
      out[p.id] = SensorType::type0;
    } else if (row_shared != col_shared) {
      out[p.id] = SensorType::type1;
      rows_with_type1.insert(p.at.row);
      cols_with_type1.insert(p.at.col);
    }
  }
  for (const Placed& p : sensors) {
    if (out.contains(p.id)) continue;
    const bool row_t1 = rows_with_type1.contains(p.at.row);
    const bool col_t1 = cols_with_type1.contains(p.at.col);
    if (row_t1 && col_t1) {
      out[p.id] = SensorType::type2;
    } else if (row_t1 || col_t1) {
      out[p.id] = SensorType::type3;
    } else {
      out[p.id] = SensorType::type4;
    }
  }
  return out;
}

GapReport find_gaps(const Configuration& config) {
  check_unit_grid(config);
  const Occupancy occ = occupancy_of(placed_sensors(config));
  return {empty_lines(occ.rows, grid_height(config)), empty_lines(occ.cols, grid_width(config))};
}

FreeGraph build_free_graph(const Configuration& config) {
  const auto types = classify(config);
  const auto sensors = placed_sensors(config);

  std::set<std::int64_t> rows;
  std::set<std::int64_t> cols;
  std::set<std::int64_t> mixed_rows;
  std::set<std::int64_t> mixed_cols;
  for (const Placed& p : sensors) {
    if (is_free(types.at(p.id))) {
      rows.insert(p.at.row);
      cols.insert(p.at.col);
    } else {
      mixed_rows.insert(p.at.row);
      mixed_cols.insert(p.at.col);
    }
  }
  for (std::int64_t r : mixed_rows) rows.erase(r);
  for (std::int64_t c : mixed_cols) cols.erase(c);

  FreeGraph fg;
  std::map<std::int64_t, int> row_vertex;
  std::map<std::int64_t, int> col_vertex;
  for (std::int64_t r : rows) {
    row_vertex[r] = static_cast<int>(fg.legend.size());
    fg.legend.push_back("r" + std::to_string(r));
  }
  for (std::int64_t c : cols) {
    col_vertex[c] = static_cast<int>(fg.legend.size());
    fg.legend.push_back("c" + std::to_string(c));
  }
  fg.x = static_cast<int>(fg.legend.size());
  fg.legend.push_back("x");
  fg.y = fg.x + 1;
  fg.legend.push_back("y");
  fg.graph.vertex_count = static_cast<int>(fg.legend.size());

  for (const Placed& p : sensors) {
    const SensorType t = types.at(p.id);
    if (t == SensorType::type4) {
      fg.graph.add_edge(row_vertex.at(p.at.row), col_vertex.at(p.at.col), p.id);
    } else if (t == SensorType::type3) {
      const auto r = row_vertex.find(p.at.row);
      const int line = r != row_vertex.end() ? r->second : col_vertex.at(p.at.col);
      fg.graph.add_edge(line, fg.x, p.id);
    }
  }
  fg.graph.add_edge(fg.x, fg.y);
  return fg;
}

std::set<SensorId> max_free_set(const Configuration& config) {
  const auto types = classify(config);
  const FreeGraph fg = build_free_graph(config);
  std::set<SensorId> blocking;
  for (std::size_t e : matching::minimum_edge_cover(fg.graph)) {
    if (fg.graph.edges[e].label) blocking.insert(*fg.graph.edges[e].label);
  }
  std::set<SensorId> out;
  for (const auto& [id, t] : types) {
    if (is_free(t) && !blocking.contains(id)) out.insert(id);
  }
  return out;
}

namespace {

MinNumPlan solve_oriented(const Configuration& config) {
  MinNumPlan plan;
  plan.free_set = max_free_set(config);
  plan.k = plan.free_set.size();

  auto sensors = placed_sensors(config);
  Occupancy occ = occupancy_of(sensors);
  auto row_gaps = empty_lines(occ.rows, grid_height(config));
  auto col_gaps = empty_lines(occ.cols, grid_width(config));
  plan.r = row_gaps.size();
  plan.c = col_gaps.size();

  std::set<SensorId> moved;
  auto relocate = [&](Placed& p, GridPoint to, MoveKind kind) {
    plan.moves.push_back({p.id, kind, p.at, to});
    occ.remove(p.at);
    occ.add(to);
    p.at = to;
    moved.insert(p.id);
  };

  std::vector<Placed*> pool;
  for (Placed& p : sensors) {
    if (plan.free_set.contains(p.id)) pool.push_back(&p);
  }
  std::size_t next_row = 0;
  std::size_t next_col = 0;
  std::size_t used = 0;
  for (; used < pool.size() && next_col < col_gaps.size() && next_row < row_gaps.size(); ++used) {
    relocate(*pool[used], {col_gaps[next_col++], row_gaps[next_row++]}, MoveKind::jump);
  }
  for (; used < pool.size() && next_row < row_gaps.size(); ++used) {
    Placed& p = *pool[used];
    relocate(p, {p.at.col, row_gaps[next_row++]}, MoveKind::slide_row);
  }

  // Remaining gaps are filled by sliding a sensor out of a line that keeps
  // another occupant. Candidates are scanned in (row, column, id) order.
  auto slide = [&](bool fill_row, std::int64_t gap) {
    Placed* best = nullptr;
    for (bool allow_moved : {false, true}) {
      for (Placed& p : sensors) {
        if (!allow_moved && moved.contains(p.id)) continue;
        const std::size_t sharing = fill_row ? occ.in_row(p.at.row) : occ.in_col(p.at.col);
        if (sharing < 2) continue;
        best = &p;
        break;
      }
      if (best) break;
    }
    if (!best) {
      fail(ErrorKind::property_violation,
           "internal: no sensor can slide into " + std::string(fill_row ? "row " : "column ") +
               std::to_string(gap));
    }
    if (fill_row) {
      relocate(*best, {best->at.col, gap}, MoveKind::slide_row);
    } else {
      relocate(*best, {gap, best->at.row}, MoveKind::slide_col);
    }
  };
  for (; next_row < row_gaps.size(); ++next_row) slide(true, row_gaps[next_row]);
  for (; next_col < col_gaps.size(); ++next_col) slide(false, col_gaps[next_col]);

  for (const Placed& p : sensors) plan.solution.positions.emplace(p.id, to_point(p.at));
  // A sensor that slid twice is one relocation.
  std::map<SensorId, Move> merged;
  for (const Move& m : plan.moves) {
    auto [it, inserted] = merged.emplace(m.id, m);
    if (!inserted) {
      it->second.to = m.to;
      it->second.kind = MoveKind::jump;
    }
  }
  if (merged.size() != plan.moves.size()) {
    plan.moves.clear();
    for (const auto& [id, m] : merged) plan.moves.push_back(m);
  }
  return plan;
}

}  // namespace

MinNumPlan solve_minnum(const Configuration& config) {
  check_unit_grid(config);
  const std::int64_t longer = std::max(grid_width(config), grid_height(config));
  if (static_cast<std::int64_t>(config.sensors.size()) < longer) {
    fail(ErrorKind::infeasible, std::to_string(config.sensors.size()) +
                                    " sensors cannot block a side of length " +
                                    std::to_string(longer));
  }

  const GapReport gaps = find_gaps(config);
  const bool flip = gaps.col_gaps.size() > gaps.row_gaps.size();
  MinNumPlan plan = solve_oriented(flip ? transpose(config) : config);
  if (flip) {
    plan.transposed = true;
    plan.solution = transpose(plan.solution);
    for (Move& m : plan.moves) {
      std::swap(m.from.col, m.from.row);
      std::swap(m.to.col, m.to.row);
      if (m.kind == MoveKind::slide_row) {
        m.kind = MoveKind::slide_col;
      } else if (m.kind == MoveKind::slide_col) {
        m.kind = MoveKind::slide_row;
      }
    }
  }

  const std::size_t expected = plan.k >= plan.c ? plan.r : plan.r + plan.c - plan.k;
  if (plan.moved() != expected) {
    fail(ErrorKind::property_violation, "internal: moved " + std::to_string(plan.moved()) +
                                            " sensors, expected " + std::to_string(expected));
  }
  if (!is_blocking(apply(config, plan.solution)).blocking) {
    fail(ErrorKind::property_violation, "internal: plan does not block");
  }
  return plan;
}

std::size_t brute_minnum(const Configuration& config) {
  check_unit_grid(config);
  const std::size_t n = config.sensors.size();
  if (n > 14) fail(ErrorKind::size_limit, "brute_minnum handles at most 14 sensors");
  const std::int64_t a = grid_width(config);
  const std::int64_t b = grid_height(config);

  std::size_t best = n + 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    std::vector<bool> row_used(b + 1, false);
    std::vector<bool> col_used(a + 1, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) continue;
      const GridPoint g = to_grid(config.sensors[i].center);
      row_used[g.row] = col_used[g.col] = true;
    }
    const auto r = static_cast<std::size_t>(std::count(row_used.begin() + 1, row_used.end(), false));
    const auto c = static_cast<std::size_t>(std::count(col_used.begin() + 1, col_used.end(), false));
    if (size >= std::max(r, c)) best = size;
  }
  if (best > n) fail(ErrorKind::infeasible, "no relocation set blocks the rectangle");
  return best;
}

}  // namespace wcr::minnum
