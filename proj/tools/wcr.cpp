// wcr: weak barrier coverage solvers, verifiers and gadget generators.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

constexpr const char* kMinMaxNote =
    "MinMax and (V,H) decisions search integer destinations only; fractional\n"
    "optima of general instances are not explored.";

}  // namespace

int main(int argc, char** argv) {
  using namespace wcr::cli;

  CLI::App app{"Movement optimisation for weak barrier coverage of a rectangle."};
  app.footer(kMinMaxNote);
  app.require_subcommand(1);
  // Global options may also follow the subcommand.
  app.fallthrough();

  std::string metric;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  app.add_option("--metric", metric, "Override the instance metric")
      ->check(CLI::IsMember({"manhattan", "euclidean"}));
  app.add_option("--seed", seed, "Seed for every random choice");
  app.add_option("--budget", budget, "Search node budget (also WCR_NODE_BUDGET)");

  std::string problem, construction, instance, solution, output, meta, input, suite = "small";
  std::size_t count = 100;
  wcr::oracle::DiffBounds bounds;

  auto* verify = app.add_subcommand("verify", "Coverage report and costs of a solution");
  verify->add_option("instance", instance)->required();
  verify->add_option("--solution", solution, "Final positions (default: unmoved)");

  auto* solve = app.add_subcommand("solve", "Optimal relocation");
  solve->add_option("problem", problem)->required()->check(CLI::IsMember({"minnum", "minsum", "minmax"}));
  solve->add_option("instance", instance)->required();
  solve->add_option("-o,--output", output, "Write the solution file");

  auto* decide = app.add_subcommand("decide", "(V,H)-blocking decision");
  decide->add_option("problem", problem)->required()->check(CLI::IsMember({"vh"}));
  decide->add_option("instance", instance)->required();

  auto* gen = app.add_subcommand("gen", "Build a gadget instance");
  gen->add_option("construction", construction)->required()->check(CLI::IsMember({"minnum", "vh", "minmax"}));
  gen->add_option("--formula", input, "Formula file (minnum, vh)");
  gen->add_option("--vh", input, "(V,H) instance file (minmax)");
  gen->add_option("-o,--output", output, "Instance file");
  gen->add_option("--meta", meta, "Meta file for embed/extract");

  auto* embed = app.add_subcommand("embed", "Map an assignment or solution into a construction");
  embed->add_option("construction", construction)->required()->check(CLI::IsMember({"minnum", "vh", "minmax"}));
  embed->add_option("--meta", meta)->required();
  embed->add_option("--assignment", input, "Assignment file (minnum, vh)");
  embed->add_option("--solution", input, "(V,H) solution file (minmax)");
  embed->add_option("-o,--output", output, "Write the solution file");

  auto* extract = app.add_subcommand("extract", "Map a construction solution back");
  extract->add_option("construction", construction)->required()->check(CLI::IsMember({"minnum", "vh", "minmax"}));
  extract->add_option("--meta", meta)->required();
  extract->add_option("--solution", solution)->required();
  extract->add_option("-o,--output", output, "Write the assignment or solution file");

  auto* integerize = app.add_subcommand("integerize", "Round a fractional unit-move gadget solution");
  integerize->add_option("--meta", meta)->required();
  integerize->add_option("--solution", solution)->required();
  integerize->add_option("-o,--output", output, "Write the solution file");

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference answer");
  oracle->add_option("problem", problem)->required()->check(
      CLI::IsMember({"minnum", "minsum", "minmax", "vh", "sat"}));
  oracle->add_option("input", input)->required();

  auto* diff = app.add_subcommand("diff", "Solver against oracle on seeded random instances");
  diff->add_option("problem", problem)->required()->check(CLI::IsMember({"minnum", "minsum", "minmax", "vh"}));
  diff->add_option("--count", count);
  diff->add_option("--max-grid", bounds.max_grid)->check(CLI::PositiveNumber);
  diff->add_option("--max-sensors", bounds.max_sensors)->check(CLI::PositiveNumber);
  diff->add_option("--max-move", bounds.max_move)->check(CLI::NonNegativeNumber);

  auto* bench = app.add_subcommand("bench", "Median-of-5 timings of the acceptance workloads");
  bench->add_option("--suite", suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Context ctx;
    if (!metric.empty()) ctx.metric = metric_from(metric);
    ctx.seed = seed;
    ctx.budget = node_budget(budget);
    ctx.out = &std::cout;

    if (*verify) return run_verify(ctx, instance, solution);
    if (*solve) return run_solve(ctx, problem, instance, output);
    if (*decide) return run_decide(ctx, instance);
    if (*gen) {
      if (input.empty()) throw CLI::RequiredError(construction == "minmax" ? "--vh" : "--formula");
      return run_gen(ctx, construction, input, output, meta);
    }
    if (*embed) {
      if (input.empty()) {
        throw CLI::RequiredError(construction == "minmax" ? "--solution" : "--assignment");
      }
      return run_embed(ctx, construction, meta, input, output);
    }
    if (*extract) return run_extract(ctx, construction, meta, solution, output);
    if (*integerize) return run_integerize(ctx, meta, solution, output);
    if (*oracle) return run_oracle(ctx, problem, input);
    if (*diff) return run_diff(ctx, problem, count, bounds);
    if (*bench) return run_bench(ctx, suite);
  } catch (const CLI::Error& e) {
    std::cerr << "wcr: " << e.what() << '\n';
    return 2;
  } catch (const wcr::Error& e) {
    std::cerr << "wcr: " << wcr::to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "wcr: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
