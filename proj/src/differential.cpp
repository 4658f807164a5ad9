#include "wcr/differential.hpp"

#include <cstdio>

#include "wcr/error.hpp"
#include "wcr/minmax.hpp"
#include "wcr/minnum.hpp"
#include "wcr/minsum.hpp"
#include "wcr/oracle.hpp"
#include "wcr/random_instances.hpp"

namespace wcr::oracle {

Problem problem_from(const std::string& name) {
  if (name == "minnum") return Problem::minnum;
  if (name == "minsum") return Problem::minsum;
  if (name == "minmax") return Problem::minmax;
  if (name == "vh") return Problem::vh;
  fail(ErrorKind::validation, "unknown problem \"" + name + "\"");
}

const char* to_string(Problem problem) {
  switch (problem) {
    case Problem::minnum: return "minnum";
    case Problem::minsum: return "minsum";
    case Problem::minmax: return "minmax";
    case Problem::vh: return "vh";
  }
  return "?";
}

std::string digest(const io::Json& value) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : io::dump(value)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

io::Json line_json(const minsum::Line1DInstance& inst) {
  io::Json points = io::Json::array();
  for (const Rational& p : inst.points) points.push_back(io::rational_json(p));
  return {{"points", points},
          {"radius", io::rational_json(inst.radius)},
          {"length", io::rational_json(inst.length)}};
}

}  // namespace

std::vector<DiffReport> differential_suite(Problem problem, std::uint64_t seed, std::size_t count,
                                           const DiffBounds& bounds) {
  random::Rng rng(seed);
  std::vector<DiffReport> out;
  for (std::size_t i = 0; i < count; ++i) {
    DiffReport r;
    r.seed = seed;
    r.index = i;
    for (;;) {
      try {
        switch (problem) {
          case Problem::minnum: {
            const Configuration c = random::coverable_grid(rng, bounds.max_grid, bounds.max_sensors);
            r.instance = io::to_json(c);
            r.solver = std::to_string(minnum::solve_minnum(c).moved());
            r.oracle = std::to_string(brute_minnum(c));
            break;
          }
          case Problem::minsum: {
            const auto d = random::uniform(rng, 2, 4);
            const auto inst = random::line_instance(
                rng, std::min<std::size_t>(bounds.max_sensors, 6), bounds.max_length, d);
            r.instance = line_json(inst);
            r.solver = wcr::to_string(minsum::solve_minsum_1d(inst).cost);
            r.oracle = wcr::to_string(oracle_minsum_1d(inst, Rational(1, 8)).candidate);
            break;
          }
          case Problem::minmax: {
            const Configuration c = random::coverable_grid(rng, bounds.max_grid, bounds.max_sensors);
            r.instance = io::to_json(c);
            r.solver = minmax::solve_minmax(c).max_move.to_string();
            const auto best = oracle_minmax_value(c);
            r.oracle = best ? best->to_string() : "infeasible";
            break;
          }
          case Problem::vh: {
            const VHInstance inst =
                random::vh_instance(rng, bounds.max_grid, bounds.max_sensors, bounds.max_move);
            r.instance = io::to_json(inst);
            r.solver = minmax::decide_vh(inst).feasible ? "feasible" : "infeasible";
            r.oracle = oracle_minmax(inst) ? "feasible" : "infeasible";
            break;
          }
        }
        break;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::size_limit || ++r.resampled > 10000) throw;
      }
    }
    r.digest = digest(r.instance);
    r.agree = r.solver == r.oracle;
    out.push_back(std::move(r));
  }
  return out;
}

io::Json to_json(const DiffReport& report) {
  return {{"digest", report.digest},
          {"solver", report.solver},
          {"oracle", report.oracle},
          {"agree", report.agree},
          {"seed", report.seed},
          {"index", report.index},
          {"resampled", report.resampled}};
}

}  // namespace wcr::oracle
