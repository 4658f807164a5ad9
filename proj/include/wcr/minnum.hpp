#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wcr/core.hpp"
#include "wcr/matching.hpp"

namespace wcr::minnum {

/// Types 2-4 are the free sensors: each shares its row and its column with
/// some other sensor.
enum class SensorType { type0, type1, type2, type3, type4 };

const char* to_string(SensorType type);
bool is_free(SensorType type);

/// Requires an integer-mode configuration (Error{mode} otherwise).
std::map<SensorId, SensorType> classify(const Configuration& config);

struct GapReport {
  std::vector<std::int64_t> row_gaps;
  std::vector<std::int64_t> col_gaps;
};

GapReport find_gaps(const Configuration& config);

/// Rows and columns holding only free sensors, plus hubs x and y. Vertices
/// are numbered rows first, then columns, then x, then y.
struct FreeGraph {
  matching::Graph graph;
  std::vector<std::string> legend;  // "r3", "c1", "x", "y"
  int x = 0;
  int y = 0;
};

FreeGraph build_free_graph(const Configuration& config);

/// Largest set of free sensors whose simultaneous removal leaves every
/// occupied row and column occupied.
std::set<SensorId> max_free_set(const Configuration& config);

enum class MoveKind { jump, slide_row, slide_col };

const char* to_string(MoveKind kind);

/// slide_row fills a row gap by moving along the column; slide_col fills a
/// column gap by moving along the row.
struct Move {
  SensorId id = 0;
  MoveKind kind = MoveKind::jump;
  GridPoint from;
  GridPoint to;
};

struct MinNumPlan {
  std::set<SensorId> free_set;
  std::size_t k = 0;
  // Gap counts in the orientation used by the solver (rows >= cols).
  std::size_t r = 0;
  std::size_t c = 0;
  bool transposed = false;
  std::vector<Move> moves;
  Solution solution;

  std::size_t moved() const { return moves.size(); }
};

/// Minimum number of relocations reaching a blocking configuration for unit
/// diameter sensors on the grid. Error{infeasible} if there are fewer
/// sensors than the longer side.
MinNumPlan solve_minnum(const Configuration& config);

/// Exhaustive reference: the smallest removable set whose size reaches the
/// row and column gap counts it leaves. Error{size_limit} above 14 sensors.
std::size_t brute_minnum(const Configuration& config);

}  // namespace wcr::minnum
