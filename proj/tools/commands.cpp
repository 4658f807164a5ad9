#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "wcr/costs.hpp"
#include "wcr/coverage.hpp"
#include "wcr/io.hpp"
#include "wcr/minmax.hpp"
#include "wcr/minnum.hpp"
#include "wcr/minsum.hpp"
#include "wcr/oracle.hpp"
#include "wcr/random_instances.hpp"
#include "wcr/reductions.hpp"
#include "wcr/reductions_io.hpp"

namespace wcr::cli {

using io::Json;
using io::JsonReader;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::infeasible:
      return 1;
    case ErrorKind::size_limit:
    case ErrorKind::search_limit:
      return 3;
    default:
      return 2;
  }
}

std::uint64_t node_budget(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("WCR_NODE_BUDGET")) {
    const std::string text(env);
    if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit) || text.size() > 19) {
      fail(ErrorKind::validation, "WCR_NODE_BUDGET must be a non-negative integer");
    }
    return std::stoull(text);
  }
  return minmax::kDefaultNodeBudget;
}

Metric metric_from(const std::string& name) {
  if (name == "manhattan") return Metric::manhattan;
  if (name == "euclidean") return Metric::euclidean;
  fail(ErrorKind::validation, "unknown metric \"" + name + "\"");
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::parse, "cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) fail(ErrorKind::validation, "cannot write " + path);
}

void emit(const Context& ctx, Json value) {
  if (ctx.metric) value["metric_override"] = to_string(*ctx.metric);
  *ctx.out << io::dump(value);
}

io::Instance load_instance(const Context& ctx, const std::string& path) {
  io::Instance inst = io::read_instance(read_file(path));
  if (ctx.metric) {
    std::visit(
        [&](auto& v) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Configuration>) {
            v.metric = *ctx.metric;
          } else {
            v.config.metric = *ctx.metric;
          }
        },
        inst);
  }
  return inst;
}

Configuration load_configuration(const Context& ctx, const std::string& path) {
  io::Instance inst = load_instance(ctx, path);
  if (!std::holds_alternative<Configuration>(inst)) {
    fail(ErrorKind::validation, path + ": expected a configuration without v_lines/h_lines/max_move");
  }
  Configuration config = std::get<Configuration>(std::move(inst));
  validate(config);
  return config;
}

VHInstance load_vh(const Context& ctx, const std::string& path) {
  io::Instance inst = load_instance(ctx, path);
  if (!std::holds_alternative<VHInstance>(inst)) {
    fail(ErrorKind::validation, path + ": expected a (V,H) instance");
  }
  VHInstance vh = std::get<VHInstance>(std::move(inst));
  validate(vh);
  return vh;
}

Json load_json(const std::string& path) { return io::parse_json(read_file(path)); }

/// Accepts a bare literal array or an object with an "assignment" field.
sat::Assignment load_assignment(const std::string& path, int variables) {
  const Json doc = load_json(path);
  const JsonReader in(doc);
  if (doc.is_object()) return io::assignment_from(in.at("assignment"), variables);
  return io::assignment_from(in, variables);
}

Json gaps_json(const std::vector<Gap>& gaps) {
  Json out = Json::array();
  for (const Gap& g : gaps) out.push_back({{"lo", io::rational_json(g.lo)}, {"hi", io::rational_json(g.hi)}});
  return out;
}

Json coverage_json(const Configuration& config, const CoverageReport& report) {
  Json out = {{"blocking", report.blocking}};
  if (config.mode == Mode::integer) {
    out["x_gap_lines"] = report.x_gap_lines;
    out["y_gap_lines"] = report.y_gap_lines;
  } else {
    out["x_gaps"] = gaps_json(report.x_gaps);
    out["y_gaps"] = gaps_json(report.y_gaps);
  }
  return out;
}

Json costs_json(const Configuration& config, const Solution& sol) {
  const CostSummary c = solution_costs(config, sol);
  Json sum;
  if (c.sum.exact()) {
    sum = io::rational_json(c.sum.lo);
  } else {
    sum = {{"lo", io::rational_json(c.sum.lo)}, {"hi", io::rational_json(c.sum.hi)}};
  }
  return {{"moved", c.moved}, {"max", c.max.to_string()}, {"sum", sum}};
}

bool on_grid(const Point& p) {
  return denominator(p.x) == 1 && denominator(p.y) == 1;
}

Json ids_json(const std::vector<SensorId>& ids) { return ids; }

void require_construction(const std::string& expected, const JsonReader& meta) {
  const std::string found = io::construction_of(meta);
  if (found != expected) {
    fail(ErrorKind::validation, "meta file describes a " + found + " construction, not " + expected);
  }
}

Json assignment_report(const sat::Formula& f, const sat::Assignment& value) {
  return {{"assignment", io::assignment_json(value)},
          {"satisfied", sat::satisfied_count(f, value)},
          {"clauses", f.clauses.size()}};
}

}  // namespace

int run_verify(const Context& ctx, const std::string& instance, const std::string& solution) {
  const io::Instance inst = load_instance(ctx, instance);
  const Configuration& config = io::configuration_of(inst);
  if (const auto* vh = std::get_if<VHInstance>(&inst)) {
    validate(*vh);
  } else {
    validate(config);
  }
  const Solution sol =
      solution.empty() ? identity_solution(config) : io::read_solution(read_file(solution));
  check_keys(config, sol);

  std::vector<SensorId> outside, off_grid;
  for (const auto& [id, p] : sol.positions) {
    if (!config.contains(p)) outside.push_back(id);
    if (config.mode == Mode::integer && !on_grid(p)) off_grid.push_back(id);
  }

  Json out = {{"mode", to_string(config.mode)},
              {"metric", to_string(config.metric)},
              {"sensors", config.sensors.size()},
              {"outside", ids_json(outside)},
              {"costs", costs_json(config, sol)}};
  bool ok = outside.empty();
  if (const auto* vh = std::get_if<VHInstance>(&inst)) {
    // Fractional positions are legal input to integerize, so they are only
    // reported here.
    const VHCoverage cov = vh_coverage(*vh, sol);
    const bool within = reductions::max_move(config, sol) <= Length::from_value(vh->max_move);
    out["off_grid"] = ids_json(off_grid);
    out["unblocked_v"] = cov.unblocked_v;
    out["unblocked_h"] = cov.unblocked_h;
    out["within_move_bound"] = within;
    ok = ok && cov.blocking() && within;
  } else {
    out["off_grid"] = ids_json(off_grid);
    if (off_grid.empty()) {
      out["coverage"] = coverage_json(config, is_blocking(apply(config, sol)));
      ok = ok && out["coverage"]["blocking"].get<bool>();
    } else {
      ok = false;
    }
  }
  out["blocking"] = ok;
  emit(ctx, out);
  return ok ? 0 : 1;
}

int run_solve(const Context& ctx, const std::string& problem, const std::string& instance,
              const std::string& output) {
  const Configuration config = load_configuration(ctx, instance);
  Json out = {{"problem", problem}, {"metric", to_string(config.metric)}};
  Solution sol;
  if (problem == "minnum") {
    const minnum::MinNumPlan plan = minnum::solve_minnum(config);
    out["moved"] = plan.moved();
    out["free_set"] = plan.free_set;
    out["k"] = plan.k;
    out["r"] = plan.r;
    out["c"] = plan.c;
    out["transposed"] = plan.transposed;
    Json moves = Json::array();
    for (const minnum::Move& m : plan.moves) {
      moves.push_back({{"id", m.id},
                       {"kind", minnum::to_string(m.kind)},
                       {"from", {m.from.col, m.from.row}},
                       {"to", {m.to.col, m.to.row}}});
    }
    out["moves"] = moves;
    sol = plan.solution;
  } else if (problem == "minsum") {
    const minsum::MinSumResult r = minsum::solve_minsum_manhattan(config);
    out["cost"] = io::rational_json(r.cost());
    out["x_cost"] = io::rational_json(r.x_cost);
    out["y_cost"] = io::rational_json(r.y_cost);
    sol = r.solution;
  } else if (problem == "minmax") {
    const minmax::MinMaxResult r = minmax::solve_minmax(config, ctx.budget);
    out["max_move"] = r.max_move.to_string();
    out["nodes"] = r.nodes;
    sol = r.solution;
  } else {
    fail(ErrorKind::validation, "unknown problem \"" + problem + "\"");
  }
  out["solution"] = io::to_json(sol);
  if (!output.empty()) write_file(output, io::write_solution(sol));
  emit(ctx, out);
  return 0;
}

int run_decide(const Context& ctx, const std::string& instance) {
  const VHInstance inst = load_vh(ctx, instance);
  const minmax::Decision d = minmax::decide_vh(inst, ctx.budget);
  Json out = {{"feasible", d.feasible},
              {"nodes", d.nodes},
              {"max_move", io::rational_json(inst.max_move)},
              {"metric", to_string(inst.config.metric)}};
  out["witness"] = d.witness ? io::to_json(*d.witness) : Json(nullptr);
  emit(ctx, out);
  return d.feasible ? 0 : 1;
}

int run_gen(const Context& ctx, const std::string& construction, const std::string& input,
            const std::string& output, const std::string& meta) {
  Json instance, meta_doc;
  if (construction == "minnum") {
    const auto red = reductions::gen_minnum(io::read_formula(read_file(input)));
    instance = io::to_json(red.config);
    meta_doc = io::meta_json(red.meta);
  } else if (construction == "vh") {
    const auto red = reductions::gen_vh(io::read_formula(read_file(input)));
    instance = io::to_json(red.instance);
    meta_doc = io::meta_json(red.meta);
  } else if (construction == "minmax") {
    const auto red = reductions::gen_minmax(load_vh(ctx, input));
    instance = io::to_json(red.config);
    meta_doc = io::meta_json(red.meta);
  } else {
    fail(ErrorKind::validation, "unknown construction \"" + construction + "\"");
  }
  if (output.empty()) {
    emit(ctx, {{"instance", instance}, {"meta", meta_doc}});
    return 0;
  }
  write_file(output, io::dump(instance));
  if (!meta.empty()) write_file(meta, io::dump(meta_doc));
  emit(ctx, {{"construction", construction},
             {"width", instance["rect"]["width"]},
             {"height", instance["rect"]["height"]},
             {"sensors", instance["sensors"].size()},
             {"instance", output},
             {"meta", meta.empty() ? Json(nullptr) : Json(meta)}});
  return 0;
}

int run_embed(const Context& ctx, const std::string& construction, const std::string& meta,
              const std::string& input, const std::string& output) {
  const Json doc = load_json(meta);
  const JsonReader in(doc);
  require_construction(construction, in);
  Solution sol;
  Json out = {{"construction", construction}};
  if (construction == "minnum") {
    const auto red = io::minnum_reduction_from(in);
    sol = reductions::embed_minnum(red, load_assignment(input, red.meta.formula.variables));
    out["moved"] = solution_costs(red.config, sol).moved;
  } else if (construction == "vh") {
    const auto red = io::vh_reduction_from(in);
    sol = reductions::embed_vh(red, load_assignment(input, red.meta.formula.variables));
    out["max_move"] = reductions::max_move(red.instance.config, sol).to_string();
  } else if (construction == "minmax") {
    const auto red = io::minmax_reduction_from(in);
    sol = reductions::embed_minmax(red, io::read_solution(read_file(input)));
    out["max_move"] = reductions::max_move(red.config, sol).to_string();
  } else {
    fail(ErrorKind::validation, "unknown construction \"" + construction + "\"");
  }
  out["solution"] = io::to_json(sol);
  if (!output.empty()) write_file(output, io::write_solution(sol));
  emit(ctx, out);
  return 0;
}

int run_extract(const Context& ctx, const std::string& construction, const std::string& meta,
                const std::string& solution, const std::string& output) {
  const Json doc = load_json(meta);
  const JsonReader in(doc);
  require_construction(construction, in);
  const Solution sol = io::read_solution(read_file(solution));
  Json out = {{"construction", construction}};
  if (construction == "minnum") {
    const auto red = io::minnum_reduction_from(in);
    const sat::Assignment value = reductions::extract_minnum(red, sol);
    out.update(assignment_report(red.meta.formula, value));
    if (!output.empty()) write_file(output, io::dump(assignment_report(red.meta.formula, value)));
  } else if (construction == "vh") {
    const auto red = io::vh_reduction_from(in);
    const sat::Assignment value = reductions::extract_vh(red, sol);
    out.update(assignment_report(red.meta.formula, value));
    if (!output.empty()) write_file(output, io::dump(assignment_report(red.meta.formula, value)));
  } else if (construction == "minmax") {
    const auto red = io::minmax_reduction_from(in);
    const Solution vh = reductions::extract_minmax(red, sol);
    out["solution"] = io::to_json(vh);
    if (!output.empty()) write_file(output, io::write_solution(vh));
  } else {
    fail(ErrorKind::validation, "unknown construction \"" + construction + "\"");
  }
  emit(ctx, out);
  return 0;
}

int run_integerize(const Context& ctx, const std::string& meta, const std::string& solution,
                   const std::string& output) {
  const Json doc = load_json(meta);
  const JsonReader in(doc);
  require_construction("vh", in);
  const auto red = io::vh_reduction_from(in);
  const Solution before = io::read_solution(read_file(solution));
  const Solution after = reductions::integerize(red, before);
  std::size_t changed = 0;
  for (const auto& [id, p] : after.positions) changed += before.positions.at(id) == p ? 0 : 1;
  if (!output.empty()) write_file(output, io::write_solution(after));
  emit(ctx, {{"changed", changed}, {"solution", io::to_json(after)}});
  return 0;
}

int run_oracle(const Context& ctx, const std::string& problem, const std::string& input) {
  if (problem == "minnum") {
    const Configuration config = load_configuration(ctx, input);
    emit(ctx, {{"problem", problem}, {"moved", oracle::brute_minnum(config)}});
    return 0;
  }
  if (problem == "minsum") {
    const Configuration config = load_configuration(ctx, input);
    emit(ctx, {{"problem", problem}, {"cost", io::rational_json(oracle::oracle_minsum(config))}});
    return 0;
  }
  if (problem == "minmax") {
    const Configuration config = load_configuration(ctx, input);
    const auto best = oracle::oracle_minmax_value(config);
    if (!best) fail(ErrorKind::infeasible, "no destination within any distance blocks the grid");
    emit(ctx, {{"problem", problem}, {"max_move", best->to_string()}});
    return 0;
  }
  if (problem == "vh") {
    const bool feasible = oracle::oracle_minmax(load_vh(ctx, input));
    emit(ctx, {{"problem", problem}, {"feasible", feasible}});
    return feasible ? 0 : 1;
  }
  if (problem == "sat") {
    const sat::Formula f = io::read_formula(read_file(input));
    const sat::BruteResult r = oracle::sat_brute(f);
    const std::size_t needed =
        f.dialect == sat::Dialect::max2sat_3occ ? static_cast<std::size_t>(f.target) : f.clauses.size();
    Json out = assignment_report(f, r.best);
    out["problem"] = problem;
    out["satisfiable"] = r.satisfied >= needed;
    emit(ctx, out);
    return r.satisfied >= needed ? 0 : 1;
  }
  fail(ErrorKind::validation, "unknown problem \"" + problem + "\"");
}

int run_diff(const Context& ctx, const std::string& problem, std::size_t count,
             const oracle::DiffBounds& bounds) {
  const auto reports =
      oracle::differential_suite(oracle::problem_from(problem), ctx.seed, count, bounds);
  bool all = true;
  for (const auto& r : reports) {
    Json line = oracle::to_json(r);
    if (!r.agree) line["instance"] = r.instance;
    *ctx.out << line.dump() << '\n';
    all = all && r.agree;
  }
  return all ? 0 : 1;
}

int run_bench(const Context& ctx, const std::string& suite) {
  if (suite != "small") fail(ErrorKind::validation, "unknown suite \"" + suite + "\"");
  struct Workload {
    std::string name;
    std::size_t instances;
    std::function<void(random::Rng&)> run;
  };
  const std::uint64_t budget = ctx.budget;
  const std::vector<Workload> workloads = {
      {"minnum-6x6", 200,
       [](random::Rng& rng) { minnum::solve_minnum(random::coverable_grid(rng, 6, 12)); }},
      {"minsum-1d", 300,
       [](random::Rng& rng) {
         const auto d = random::uniform(rng, 2, 4);
         minsum::solve_minsum_1d(random::line_instance(rng, 6, 20, d));
       }},
      {"minsum-2d", 200,
       [](random::Rng& rng) {
         minsum::solve_minsum_manhattan(random::homogeneous_configuration(rng, 8, 12));
       }},
      {"decide-vh-4x4", 1000,
       [budget](random::Rng& rng) { minmax::decide_vh(random::vh_instance(rng, 4, 8, 2), budget); }},
      {"vh-gadget-n3", 1,
       [budget](random::Rng& rng) {
         const auto red = reductions::gen_vh(random::sat22_formula(rng, 3));
         minmax::decide_vh(red.instance, budget);
       }},
  };
  Json rows = Json::array();
  for (const Workload& w : workloads) {
    std::vector<double> ms;
    for (int rep = 0; rep < 5; ++rep) {
      random::Rng rng(ctx.seed);
      const auto start = std::chrono::steady_clock::now();
      for (std::size_t i = 0; i < w.instances; ++i) w.run(rng);
      const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
      ms.push_back(took.count());
    }
    std::sort(ms.begin(), ms.end());
    rows.push_back({{"workload", w.name}, {"instances", w.instances}, {"median_ms", ms[2]}});
  }
  emit(ctx, {{"suite", suite}, {"seed", ctx.seed}, {"repetitions", 5}, {"rows", rows}});
  return 0;
}

}  // namespace wcr::cli
