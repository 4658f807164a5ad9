#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "wcr/core.hpp"
#include "wcr/differential.hpp"
#include "wcr/error.hpp"

namespace wcr::cli {

struct Context {
  std::optional<Metric> metric;  // --metric override
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::ostream* out = nullptr;
};

int exit_code(ErrorKind kind);

/// --budget when given, else WCR_NODE_BUDGET, else the library default.
std::uint64_t node_budget(std::optional<std::uint64_t> flag);

Metric metric_from(const std::string& name);

int run_verify(const Context& ctx, const std::string& instance, const std::string& solution);
int run_solve(const Context& ctx, const std::string& problem, const std::string& instance,
              const std::string& output);
int run_decide(const Context& ctx, const std::string& instance);
int run_gen(const Context& ctx, const std::string& construction, const std::string& input,
            const std::string& output, const std::string& meta);
int run_embed(const Context& ctx, const std::string& construction, const std::string& meta,
              const std::string& input, const std::string& output);
int run_extract(const Context& ctx, const std::string& construction, const std::string& meta,
                const std::string& solution, const std::string& output);
int run_integerize(const Context& ctx, const std::string& meta, const std::string& solution,
                   const std::string& output);
int run_oracle(const Context& ctx, const std::string& problem, const std::string& input);
int run_diff(const Context& ctx, const std::string& problem, std::size_t count,
             const oracle::DiffBounds& bounds);
int run_bench(const Context& ctx, const std::string& suite);

}  // namespace wcr::cli
