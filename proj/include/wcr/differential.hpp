#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wcr/io.hpp"

namespace wcr::oracle {

enum class Problem { minnum, minsum, minmax, vh };

Problem problem_from(const std::string& name);
const char* to_string(Problem problem);

struct DiffBounds {
  std::int64_t max_grid = 6;
  std::size_t max_sensors = 12;
  std::int64_t max_length = 20;
  std::int64_t max_move = 2;
};

struct DiffReport {
  std::string digest;  // FNV-1a 64 of the canonical instance JSON
  std::string solver;
  std::string oracle;
  bool agree = false;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  std::uint64_t resampled = 0;  // draws discarded for exceeding the oracle's size limit
  io::Json instance;
};

/// 16 hex digits.
std::string digest(const io::Json& value);

/// `count` instances drawn from one generator seeded with `seed`; each is
/// solved and checked against its reference solver. Draws the oracle refuses
/// as too large are replaced by the next draw.
std::vector<DiffReport> differential_suite(Problem problem, std::uint64_t seed, std::size_t count,
                                           const DiffBounds& bounds);

io::Json to_json(const DiffReport& report);

}  // namespace wcr::oracle
