// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failures.

#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "gadget_cases.hpp"
#include "wcr/costs.hpp"
#include "wcr/coverage.hpp"
#include "wcr/differential.hpp"
#include "wcr/error.hpp"
#include "wcr/matching.hpp"
#include "wcr/minmax.hpp"
#include "wcr/minnum.hpp"
#include "wcr/minsum.hpp"
#include "wcr/oracle.hpp"
#include "wcr/reductions.hpp"
#include "wcr/sat.hpp"

namespace {

using namespace wcr;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later ones only bump the count.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome done(std::string detail) const {
    if (failures_ == 0) return {true, std::move(detail)};
    return {false, std::to_string(failures_) + " violation(s), first: " + first_ + "; " + detail};
  }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double v, int digits = 1) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

Configuration grid_of(std::int64_t a, std::int64_t b, const std::vector<GridPoint>& cells) {
  Configuration c;
  c.width = a;
  c.height = b;
  c.mode = Mode::integer;
  SensorId id = 0;
  for (const GridPoint& g : cells) c.sensors.push_back({id++, to_point(g), Rational(1, 2)});
  return c;
}

std::size_t formula_moved(const minnum::MinNumPlan& p) { return p.k >= p.c ? p.r : p.r + p.c - p.k; }

// ---------------------------------------------------------------------------
// 1 and 2 share their instances.

std::vector<Configuration> minnum_instances(std::size_t& exhaustive) {
  std::vector<Configuration> out;
  for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
    const int n = std::popcount(mask);
    if (n < 3 || n > 6) continue;
    std::vector<GridPoint> cells;
    for (int i = 0; i < 9; ++i) {
      if (mask >> i & 1) cells.push_back({i % 3 + 1, i / 3 + 1});
    }
    out.push_back(grid_of(3, 3, cells));
  }
  exhaustive = out.size();
  random::Rng rng(101);
  for (int i = 0; i < 1000; ++i) {
    const auto n = static_cast<std::size_t>(random::uniform(rng, 6, 12));
    out.push_back(random::grid_configuration(rng, 6, 6, n));
  }
  return out;
}

Outcome minnum_optimality() {
  std::size_t exhaustive = 0;
  const auto t0 = Clock::now();
  const auto instances = minnum_instances(exhaustive);
  Check check;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Configuration& c = instances[i];
    const auto plan = minnum::solve_minnum(c);
    check.expect(plan.moved() == minnum::brute_minnum(c), "instance " + std::to_string(i));
    check.expect(is_blocking(apply(c, plan.solution)).blocking, "blocking, instance " + std::to_string(i));
  }
  const double s = seconds_since(t0);
  check.expect(s < 60, "runtime " + fixed(s) + " s");
  return check.done(std::to_string(exhaustive) + " exhaustive 3x3 + 1000 random 6x6, " + fixed(s) + " s");
}

Outcome minnum_formula() {
  std::size_t exhaustive = 0;
  const auto instances = minnum_instances(exhaustive);
  Check check;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto plan = minnum::solve_minnum(instances[i]);
    check.expect(plan.r >= plan.c, "orientation, instance " + std::to_string(i));
    check.expect(plan.moved() == formula_moved(plan), "instance " + std::to_string(i));
  }
  return check.done(std::to_string(instances.size()) + " instances");
}

// ---------------------------------------------------------------------------

std::size_t brute_free_set(const Configuration& c) {
  const auto types = minnum::classify(c);
  std::vector<const Sensor*> free;
  std::map<Rational, int> cols, rows;
  for (const Sensor& s : c.sensors) {
    if (minnum::is_free(types.at(s.id))) free.push_back(&s);
    ++cols[s.center.x];
    ++rows[s.center.y];
  }
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
    auto cc = cols, rr = rows;
    bool ok = true;
    for (std::size_t j = 0; j < free.size(); ++j) {
      if (!(mask >> j & 1)) continue;
      ok = ok && --cc[free[j]->center.x] > 0;
      ok = ok && --rr[free[j]->center.y] > 0;
    }
    if (ok) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

std::size_t brute_matching(const matching::Graph& g) {
  std::size_t best = 0;
  std::vector<bool> used(g.vertex_count);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t size) {
    best = std::max(best, size);
    if (i == g.edges.size() || size + (g.edges.size() - i) <= best) return;
    const auto& e = g.edges[i];
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = true;
      go(i + 1, size + 1);
      used[e.u] = used[e.v] = false;
    }
    go(i + 1, size);
  };
  go(0, 0);
  return best;
}

Outcome free_set_and_gallai() {
  Check check;
  random::Rng rng(103);
  std::size_t most_free = 0;
  for (int i = 0; i < 500; ++i) {
    const Configuration c = random::coverable_grid(rng, 6, 12);
    const auto types = minnum::classify(c);
    most_free = std::max<std::size_t>(
        most_free, std::count_if(types.begin(), types.end(), [](auto& t) { return minnum::is_free(t.second); }));
    check.expect(minnum::max_free_set(c).size() == brute_free_set(c), "free set, instance " + std::to_string(i));
  }
  for (int i = 0; i < 500; ++i) {
    const matching::Graph g = random::graph(rng, 10);
    const auto m = matching::maximum_matching(g);
    const auto cover = matching::minimum_edge_cover(g);
    check.expect(matching::is_matching(g, m) && matching::is_edge_cover(g, cover), "graph " + std::to_string(i));
    check.expect(m.size() == brute_matching(g), "matching size, graph " + std::to_string(i));
    check.expect(m.size() + cover.size() == static_cast<std::size_t>(g.vertex_count),
                 "Gallai, graph " + std::to_string(i));
  }
  return check.done("500 free-set instances (at most " + std::to_string(most_free) +
                    " free sensors), 500 graphs");
}

// ---------------------------------------------------------------------------

Outcome minsum_optimality() {
  Check check;
  random::Rng rng(107);
  for (int i = 0; i < 300; ++i) {
    const auto inst = random::line_instance(rng, 6, 20, random::uniform(rng, 2, 4));
    const auto r = minsum::solve_minsum_1d(inst);
    const auto b = oracle::oracle_minsum_1d(inst, Rational(1, 8));
    const Rational slack(static_cast<long>(inst.points.size()), 8);
    check.expect(r.cost == b.candidate, "1D candidate oracle, instance " + std::to_string(i));
    check.expect(r.cost <= b.grid && b.grid <= r.cost + slack, "1D grid oracle, instance " + std::to_string(i));
    std::vector<std::pair<Rational, Rational>> cover;
    for (const Rational& t : r.targets) cover.emplace_back(t - inst.radius, t + inst.radius);
    check.expect(uncovered(cover, 0, inst.length).empty(), "1D coverage, instance " + std::to_string(i));
  }
  for (int i = 0; i < 200; ++i) {
    const Configuration c = random::homogeneous_configuration(rng, 6, 10);
    const auto r = minsum::solve_minsum_manhattan(c);
    Rational axes = 0;
    for (bool x : {true, false}) {
      const auto ap = minsum::axis_problem(c, x);
      axes += minsum::solve_minsum_1d(ap.line, ap.lo, ap.hi).cost;
    }
    check.expect(r.cost() == axes && r.cost() == r.x_cost + r.y_cost, "2D separability, instance " + std::to_string(i));
    check.expect(r.cost() == oracle::oracle_minsum(c), "2D oracle, instance " + std::to_string(i));
    check.expect(is_blocking(apply(c, r.solution)).blocking, "2D blocking, instance " + std::to_string(i));
    const auto cost = solution_costs(c, r.solution).sum;
    check.expect(cost.lo == r.cost() && cost.hi == r.cost(), "2D reported cost, instance " + std::to_string(i));
  }
  return check.done("300 1D instances, 200 2D instances");
}

// ---------------------------------------------------------------------------

Outcome minmax_decision() {
  Check check;
  random::Rng rng(109);
  std::size_t feasible = 0, resampled = 0;
  int done = 0;
  while (done < 1000) {
    VHInstance inst = random::vh_instance(rng, 4, 8, 2);
    bool agree = false;
    try {
      agree = minmax::decide_vh(inst).feasible == oracle::oracle_minmax(inst);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::size_limit) throw;
      ++resampled;
      continue;
    }
    check.expect(agree, "instance " + std::to_string(done));
    bool before = false;
    for (int d = 0; d <= 2; ++d) {
      inst.max_move = d;
      const minmax::Decision dec = minmax::decide_vh(inst);
      check.expect(!before || dec.feasible, "monotonicity, instance " + std::to_string(done));
      if (dec.feasible) {
        check.expect(vh_coverage(inst, *dec.witness).blocking() &&
                         reductions::max_move(inst.config, *dec.witness) <= Length::from_value(d),
                     "witness, instance " + std::to_string(done));
      }
      before = dec.feasible;
    }
    feasible += before;
    ++done;
  }
  return check.done("1000 instances, " + std::to_string(resampled) + " redrawn over the size limit, " +
                    std::to_string(feasible) + " feasible at D=2");
}

// ---------------------------------------------------------------------------

const sat::Formula kUnsat22{sat::Dialect::sat3_22, 3, {{-3, -2, -2}, {-3, 2, 2}, {-1, -1, 3}, {1, 1, 3}}, 0};

std::vector<sat::Formula> sat22_sample() {
  random::Rng rng(113);
  std::vector<sat::Formula> out;
  for (int i = 0; i < 30; ++i) out.push_back(random::sat22_formula(rng, 3));
  out.push_back(kUnsat22);
  return out;
}

Outcome vh_end_to_end() {
  Check check;
  std::size_t sat_count = 0, unsat_count = 0;
  double slowest = 0;
  const auto sample = sat22_sample();
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const sat::Formula& f = sample[i];
    const std::string tag = "formula " + std::to_string(i);
    const bool satisfiable = sat::sat_brute(f).satisfied == f.clauses.size();
    const auto red = reductions::gen_vh(f);
    const auto t0 = Clock::now();
    const minmax::Decision d = minmax::decide_vh(red.instance);
    const double s = seconds_since(t0);
    slowest = std::max(slowest, s);
    check.expect(s < 120, tag + " took " + fixed(s) + " s");
    check.expect(d.feasible == satisfiable, tag + " decision");
    if (!satisfiable) {
      ++unsat_count;
      continue;
    }
    ++sat_count;
    for (const sat::Assignment& a : test::satisfying(f)) {
      const Solution sol = reductions::embed_vh(red, a);
      check.expect(test::unit_blocking(red.instance, sol) && test::all_integer(sol), tag + " embed");
      const sat::Assignment back = reductions::extract_vh(red, sol);
      check.expect(sat::satisfied_count(f, back) == f.clauses.size(), tag + " extract");
      check.expect(test::unit_blocking(red.instance, reductions::embed_vh(red, back)), tag + " round trip");
    }
  }
  check.expect(sat_count >= 25, "only " + std::to_string(sat_count) + " satisfiable formulas");
  return check.done(std::to_string(sat_count) + " satisfiable, " + std::to_string(unsat_count) +
                    " unsatisfiable, slowest decide " + fixed(slowest, 2) + " s");
}

// ---------------------------------------------------------------------------

Outcome minmax_padding() {
  Check check;
  std::size_t built = 0;
  for (const sat::Formula& f : sat22_sample()) {
    const auto assignments = test::satisfying(f);
    if (assignments.empty()) continue;
    const auto vh = reductions::gen_vh(f);
    const auto red = reductions::gen_minmax(vh.instance);
    const std::int64_t a = grid_width(vh.instance.config), b = grid_height(vh.instance.config);
    const auto nv = static_cast<std::int64_t>(vh.instance.v_lines.size());
    const auto nh = static_cast<std::int64_t>(vh.instance.h_lines.size());
    check.expect(red.config.width == a + b - nh + 7 && red.config.height == b + a - nv + 7, "dimensions");
    check.expect(red.config.width == 119 && red.config.height == 127, "119 x 127");
    const Solution inner = reductions::embed_vh(vh, assignments.front());
    const Solution full = reductions::embed_minmax(red, inner);
    check.expect(is_blocking(apply(red.config, full)).blocking, "full-grid blocking");
    check.expect(reductions::max_move(red.config, full) <= Length::from_value(1), "max move");
    check.expect(reductions::extract_minmax(red, full) == inner, "extract after embed");
    ++built;
  }
  return check.done(std::to_string(built) + " constructions, 119 x 127");
}

// ---------------------------------------------------------------------------

Outcome minnum_construction() {
  Check check;
  random::Rng rng(127);
  std::size_t runs = 0, guards = 0;
  for (int n : {2, 4}) {
    for (int trial = 0; trial < 10; ++trial) {
      sat::Formula f = random::max2sat_formula(rng, n);
      const sat::BruteResult best = sat::sat_brute(f);
      for (std::int64_t t = 1; t <= static_cast<std::int64_t>(best.satisfied); ++t) {
        const std::string tag = "n=" + std::to_string(n) + " t=" + std::to_string(t);
        f.target = t;
        const auto red = reductions::gen_minnum(f);
        const Solution sol = reductions::embed_minnum(red, best.best);
        check.expect(solution_costs(red.config, sol).moved == static_cast<std::size_t>(t), tag + " moved");
        check.expect(is_blocking(apply(red.config, sol)).blocking, tag + " blocking");
        check.expect(sat::satisfied_count(f, reductions::extract_minnum(red, sol)) >= static_cast<std::size_t>(t),
                     tag + " extract");
        ++runs;

        auto raises = [&](const Solution& bad, ErrorKind kind) {
          try {
            reductions::extract_minnum(red, bad);
          } catch (const Error& e) {
            return e.kind() == kind;
          }
          return false;
        };
        Solution anchor = sol;
        anchor.positions.at(red.meta.beta[trial % n]).y += 1;
        check.expect(raises(anchor, ErrorKind::inconsistent_solution), tag + " anchor guard");
        // Move the unmoved partner of some mover as well.
        Solution both = sol;
        const Solution start = identity_solution(red.config);
        for (const auto& l : red.meta.literals) {
          if (sol.positions.at(l.id) == start.positions.at(l.id)) continue;
          for (const auto& other : red.meta.literals) {
            if (other.clause == l.clause && other.id != l.id) both.positions.at(other.id) = {1, 1};
          }
          break;
        }
        check.expect(raises(both, ErrorKind::inconsistent_solution), tag + " clause guard");
        check.expect(raises(start, ErrorKind::not_a_solution), tag + " identity");
        guards += 3;
      }
    }
  }
  return check.done(std::to_string(runs) + " (formula, t) pairs, " + std::to_string(guards) + " guard checks");
}

// ---------------------------------------------------------------------------

Outcome integerize_branches() {
  Check check;
  std::set<std::string> seen;
  std::vector<std::string> partial;
  for (const test::BranchCase& bc : test::branch_cases()) {
    seen.insert(bc.name);
    const auto before = test::blocked_lines(bc.red.instance, bc.input);
    check.expect(!test::all_integer(bc.input), bc.name + " input is integer");
    if (bc.verifying) {
      const Solution out = reductions::integerize(bc.red, bc.input);
      check.expect(test::all_integer(out), bc.name + " integer");
      check.expect(test::unit_blocking(bc.red.instance, out), bc.name + " re-verifies");
      check.expect(reductions::integerize(bc.red, out) == out, bc.name + " fixpoint");
    } else {
      partial.push_back(bc.name);
      const Solution out = reductions::integerize_passes(bc.red, bc.input);
      const auto after = test::blocked_lines(bc.red.instance, out);
      check.expect(test::all_integer(out), bc.name + " integer");
      check.expect(std::includes(after.begin(), after.end(), before.begin(), before.end()),
                   bc.name + " lost a line");
      check.expect(reductions::max_move(bc.red.instance.config, out) <= Length::from_value(1), bc.name + " move");
      check.expect(reductions::integerize_passes(bc.red, out) == out, bc.name + " fixpoint");
    }
  }
  check.expect(seen.size() == 6, "only " + std::to_string(seen.size()) + " branches built");
  std::string names;
  for (const auto& p : partial) names += (names.empty() ? "" : ", ") + p;
  return check.done(std::to_string(seen.size()) + " branches; " + names +
                    " unreachable from a blocking input, checked on partial solutions "
                    "(integer, no blocked line lost, move <= 1, fixpoint)");
}

// ---------------------------------------------------------------------------

struct Objectives {
  bool blocking;
  std::size_t minnum;
  Rational minsum;
  std::optional<Length> minmax;
  bool operator==(const Objectives&) const = default;
};

Objectives objectives(const Configuration& c) {
  return {is_blocking(c).blocking, minnum::brute_minnum(c), oracle::oracle_minsum(c),
          oracle::oracle_minmax_value(c)};
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(WCR_BINARY) + " " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "popen failed";
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return out + "\nexit " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
}

Outcome invariance() {
  Check check;
  random::Rng rng(131);
  std::size_t checked = 0, redrawn = 0;
  while (checked < 150) {
    const Configuration c = random::coverable_grid(rng, 5, 7);
    const std::string tag = "instance " + std::to_string(checked);
    std::vector<Objectives> seen;
    try {
      for (const Configuration& v : {c, transpose(c), mirror_x(c), mirror_y(c), mirror_x(mirror_y(transpose(c)))}) {
        seen.push_back(objectives(v));
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::size_limit) throw;
      ++redrawn;
      continue;
    }
    for (const Objectives& o : seen) check.expect(o == seen.front(), tag + " objectives differ");

    // Translation moves the rectangle with the sensors.
    const Rect rect{c.x_min(), c.x_max(), c.y_min(), c.y_max()};
    const Rational dx(random::uniform(rng, -7, 7), 2), dy(random::uniform(rng, -7, 7), 3);
    std::vector<Sensor> shifted = c.sensors;
    for (Sensor& s : shifted) s.center = {s.center.x + dx, s.center.y + dy};
    check.expect(projection_coverage(shifted, {rect.x_lo + dx, rect.x_hi + dx, rect.y_lo + dy, rect.y_hi + dy})
                         .blocking == seen.front().blocking,
                 tag + " translated blocking");
    ++checked;
  }

  std::size_t runs = 0;
  for (const auto problem : {oracle::Problem::minnum, oracle::Problem::minsum, oracle::Problem::minmax,
                             oracle::Problem::vh}) {
    oracle::DiffBounds bounds;
    bounds.max_grid = 4;
    bounds.max_sensors = 8;
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
      std::string text;
      for (const auto& r : oracle::differential_suite(problem, 17, 40, bounds)) text += io::dump(oracle::to_json(r));
      if (rep == 0) first = text;
      check.expect(text == first, std::string("library rerun of ") + oracle::to_string(problem));
      ++runs;
    }
    const std::string args = std::string("diff ") + oracle::to_string(problem) + " --seed 17 --count 30 --max-grid 4";
    check.expect(run_cli(args) == run_cli(args), "cli rerun of " + args);
    runs += 2;
  }
  return check.done(std::to_string(checked) + " instances x 5 symmetries (" + std::to_string(redrawn) +
                    " redrawn over size limits), " + std::to_string(runs) + " repeated runs identical");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"MinNum optimality", minnum_optimality},
      {"MinNum moved-count formula", minnum_formula},
      {"Max free set and Gallai identity", free_set_and_gallai},
      {"MinSum optimality", minsum_optimality},
      {"MinMax decision vs oracle", minmax_decision},
      {"VH reduction end to end", vh_end_to_end},
      {"MinMax padding construction", minmax_padding},
      {"MinNum hardness construction", minnum_construction},
      {"Integerize branches", integerize_branches},
      {"Invariance and determinism", invariance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << ' ' << criteria[i].first << ": " << o.detail << " ["
              << fixed(seconds_since(t0), 2) << " s]" << std::endl;
  }
  return failed;
}
