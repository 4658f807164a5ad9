#include "wcr/minmax.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>

#include "wcr/costs.hpp"
#include "wcr/error.hpp"

namespace wcr::minmax {

std::vector<GridPoint> move_domain(const Configuration& config, const GridPoint& from,
                                   const Length& bound) {
  const std::int64_t a = grid_width(config);
  const std::int64_t b = grid_height(config);
  // Neither coordinate can change by more than the bound.
  std::int64_t reach = 0;
  while (Rational((reach + 1) * (reach + 1)) <= bound.square()) ++reach;
  std::vector<std::pair<Length, GridPoint>> found;
  for (std::int64_t row = std::max<std::int64_t>(1, from.row - reach);
       row <= std::min(b, from.row + reach); ++row) {
    for (std::int64_t col = std::max<std::int64_t>(1, from.col - reach);
         col <= std::min(a, from.col + reach); ++col) {
      const GridPoint to{col, row};
      const Length d = distance(config.metric, to_point(from), to_point(to));
      if (d <= bound) found.emplace_back(d, to);
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return std::tie(x.first, x.second.row, x.second.col) <
           std::tie(y.first, y.second.row, y.second.col);
  });
  std::vector<GridPoint> out;
  for (const auto& [d, p] : found) out.push_back(p);
  return out;
}

namespace {

class Search {
 public:
  Search(const Configuration& config, const std::vector<std::int64_t>& v_lines,
         const std::vector<std::int64_t>& h_lines, const Length& bound, std::uint64_t budget)
      : config_(config), budget_(budget) {
    std::vector<std::size_t> order(config.sensors.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return config.sensors[x].id < config.sensors[y].id;
    });
    for (std::size_t i : order) {
      const GridPoint from = to_grid(config.sensors[i].center);
      sensors_.push_back({config.sensors[i].id, from, move_domain(config, from, bound)});
    }
    v_lines_.assign(v_lines.begin(), v_lines.end());
    h_lines_.assign(h_lines.begin(), h_lines.end());
    std::sort(v_lines_.begin(), v_lines_.end());
    v_lines_.erase(std::unique(v_lines_.begin(), v_lines_.end()), v_lines_.end());
    std::sort(h_lines_.begin(), h_lines_.end());
    h_lines_.erase(std::unique(h_lines_.begin(), h_lines_.end()), h_lines_.end());
    v_count_.assign(v_lines_.size(), 0);
    h_count_.assign(h_lines_.size(), 0);
    placed_.assign(sensors_.size(), std::nullopt);
  }

  Decision run() {
    Decision out;
    out.feasible = recurse();
    out.nodes = nodes_;
    if (out.feasible) {
      Solution sol;
      for (std::size_t i = 0; i < sensors_.size(); ++i) {
        sol.positions.emplace(sensors_[i].id, to_point(placed_[i].value_or(sensors_[i].from)));
      }
      out.witness = std::move(sol);
    }
    return out;
  }

 private:
  struct Mobile {
    SensorId id;
    GridPoint from;
    std::vector<GridPoint> domain;
  };

  struct Choice {
    std::size_t sensor;
    GridPoint to;
  };

  static std::ptrdiff_t index_of(const std::vector<std::int64_t>& lines, std::int64_t line) {
    auto it = std::lower_bound(lines.begin(), lines.end(), line);
    return it != lines.end() && *it == line ? it - lines.begin() : -1;
  }

  void place(std::size_t i, const GridPoint& to, int delta) {
    if (auto v = index_of(v_lines_, to.col); v >= 0) v_count_[v] += delta;
    if (auto h = index_of(h_lines_, to.row); h >= 0) h_count_[h] += delta;
    placed_[i] = delta > 0 ? std::optional<GridPoint>(to) : std::nullopt;
  }

  bool recurse() {
    // Candidate blockers per unblocked line.
    std::vector<std::size_t> v_cand(v_lines_.size(), 0);
    std::vector<std::size_t> h_cand(h_lines_.size(), 0);
    std::size_t open_v = 0;
    std::size_t open_h = 0;
    for (std::size_t l = 0; l < v_lines_.size(); ++l) open_v += v_count_[l] == 0;
    for (std::size_t l = 0; l < h_lines_.size(); ++l) open_h += h_count_[l] == 0;
    if (open_v == 0 && open_h == 0) return true;

    std::size_t free_sensors = 0;
    for (std::size_t i = 0; i < sensors_.size(); ++i) {
      if (placed_[i]) continue;
      ++free_sensors;
      std::set<std::ptrdiff_t> cols;
      std::set<std::ptrdiff_t> rows;
      for (const GridPoint& p : sensors_[i].domain) {
        if (auto v = index_of(v_lines_, p.col); v >= 0 && v_count_[v] == 0) cols.insert(v);
        if (auto h = index_of(h_lines_, p.row); h >= 0 && h_count_[h] == 0) rows.insert(h);
      }
      for (auto v : cols) ++v_cand[v];
      for (auto h : rows) ++h_cand[h];
    }
    // One placement blocks at most one vertical and one horizontal line.
    if (open_v > free_sensors || open_h > free_sensors) return false;

    bool vertical = true;
    std::size_t line = 0;
    std::size_t fewest = SIZE_MAX;
    for (std::size_t l = 0; l < v_lines_.size(); ++l) {
      if (v_count_[l] == 0 && v_cand[l] < fewest) {
        fewest = v_cand[l];
        vertical = true;
        line = l;
      }
    }
    for (std::size_t l = 0; l < h_lines_.size(); ++l) {
      if (h_count_[l] == 0 && h_cand[l] < fewest) {
        fewest = h_cand[l];
        vertical = false;
        line = l;
      }
    }
    if (fewest == 0) return false;

    const std::int64_t target = vertical ? v_lines_[line] : h_lines_[line];
    std::vector<Choice> choices;
    for (std::size_t i = 0; i < sensors_.size(); ++i) {
      if (placed_[i]) continue;
      for (const GridPoint& p : sensors_[i].domain) {
        if ((vertical ? p.col : p.row) == target) choices.push_back({i, p});
      }
    }
    std::stable_sort(choices.begin(), choices.end(), [&](const Choice& x, const Choice& y) {
      const Length dx = distance(config_.metric, to_point(sensors_[x.sensor].from), to_point(x.to));
      const Length dy = distance(config_.metric, to_point(sensors_[y.sensor].from), to_point(y.to));
      return std::tie(dx, sensors_[x.sensor].id, x.to.row, x.to.col) <
             std::tie(dy, sensors_[y.sensor].id, y.to.row, y.to.col);
    });

    for (const Choice& c : choices) {
      if (++nodes_ > budget_) {
        fail(ErrorKind::search_limit,
             "node budget of " + std::to_string(budget_) + " exhausted");
      }
      place(c.sensor, c.to, +1);
      if (recurse()) return true;
      place(c.sensor, c.to, -1);
    }
    return false;
  }

  const Configuration& config_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Mobile> sensors_;
  std::vector<std::int64_t> v_lines_;
  std::vector<std::int64_t> h_lines_;
  std::vector<int> v_count_;
  std::vector<int> h_count_;
  std::vector<std::optional<GridPoint>> placed_;
};

}  // namespace

Decision decide_lines(const Configuration& config, const std::vector<std::int64_t>& v_lines,
                      const std::vector<std::int64_t>& h_lines, const Length& bound,
                      std::uint64_t budget) {
  require_integer_mode(config);
  validate(config);
  return Search(config, v_lines, h_lines, bound, budget).run();
}

Decision decide_vh(const VHInstance& inst, std::uint64_t budget) {
  validate(inst);
  return decide_lines(inst.config, inst.v_lines, inst.h_lines,
                      Length::from_value(inst.max_move), budget);
}

std::vector<Length> distance_ladder(const Configuration& config) {
  std::set<Rational> squares;
  const std::int64_t a = grid_width(config);
  const std::int64_t b = grid_height(config);
  for (const Sensor& s : config.sensors) {
    for (std::int64_t row = 1; row <= b; ++row) {
      for (std::int64_t col = 1; col <= a; ++col) {
        squares.insert(distance(config.metric, s.center, to_point({col, row})).square());
      }
    }
  }
  std::vector<Length> out;
  for (const Rational& sq : squares) out.push_back(Length::from_square(sq));
  return out;
}

VHInstance full_instance(const Configuration& config, const Rational& max_move) {
  VHInstance inst{config, {}, {}, max_move};
  for (std::int64_t c = 1; c <= grid_width(config); ++c) inst.v_lines.push_back(c);
  for (std::int64_t r = 1; r <= grid_height(config); ++r) inst.h_lines.push_back(r);
  return inst;
}

MinMaxResult solve_minmax(const Configuration& config, std::uint64_t budget) {
  require_integer_mode(config);
  validate(config);
  const std::int64_t longer = std::max(grid_width(config), grid_height(config));
  if (static_cast<std::int64_t>(config.sensors.size()) < longer) {
    fail(ErrorKind::infeasible, std::to_string(config.sensors.size()) +
                                    " sensors cannot block a side of length " +
                                    std::to_string(longer));
  }
  const VHInstance full = full_instance(config, 0);
  const std::vector<Length> ladder = distance_ladder(config);

  MinMaxResult out;
  std::size_t lo = 0;
  std::size_t hi = ladder.size() - 1;
  std::optional<Decision> at_hi;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    Decision d = decide_lines(config, full.v_lines, full.h_lines, ladder[mid], budget);
    out.nodes += d.nodes;
    if (d.feasible) {
      hi = mid;
      at_hi = std::move(d);
    } else {
      lo = mid + 1;
    }
  }
  if (!at_hi) {
    at_hi = decide_lines(config, full.v_lines, full.h_lines, ladder[lo], budget);
    out.nodes += at_hi->nodes;
    if (!at_hi->feasible) {
      fail(ErrorKind::property_violation, "internal: widest move bound is infeasible");
    }
  }
  out.max_move = ladder[lo];
  out.solution = std::move(*at_hi->witness);
  return out;
}

}  // namespace wcr::minmax
