#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "wcr/core.hpp"
#include "wcr/sat.hpp"

namespace wcr::reductions {

// ---------------------------------------------------------------------------
// 3-Occ-Max-2SAT -> MinNum with diameter-2 sensors.

struct LiteralSensor {
  std::size_t clause = 0;    // 0-based clause index
  std::size_t position = 0;  // 0-based literal index within the clause
  sat::Literal literal = 0;
  SensorId id = 0;
};

struct MinNumMeta {
  sat::Formula formula;
  std::int64_t side = 0;
  std::vector<LiteralSensor> literals;  // clause-major
  std::vector<SensorId> alpha;          // per variable
  std::vector<SensorId> beta;
};

struct MinNumReduction {
  Configuration config;
  MinNumMeta meta;
};

/// Square of side 6n + 2t, one sensor per literal occurrence plus an
/// anchor pair per variable, all of range 1. Error{dialect} unless the
/// formula is a valid 3-Occ-Max-2SAT instance.
MinNumReduction gen_minnum(const sat::Formula& f);

/// Moves one satisfying literal sensor of each of the first t satisfied
/// clauses onto the diagonal of the uncovered corner.
/// Error{not_enough_satisfied} if fewer than t clauses are satisfied.
Solution embed_minnum(const MinNumReduction& red, const sat::Assignment& value);

/// Reads an assignment off a blocking solution moving at most t sensors.
/// Error{inconsistent_solution} if an anchor moved, both sensors of a clause
/// moved, or a variable would be forced both ways; Error{not_a_solution} if
/// the solution does not block or moves too many sensors.
sat::Assignment extract_minnum(const MinNumReduction& red, const Solution& sol);

// ---------------------------------------------------------------------------
// 3-SAT(2,2) -> MinMax (V,H)-blocking with D = 1.

/// Sensor roles inside a variable gadget, in id order.
enum VariableRole { kA, kB, kC, kE, kF, kG, kJ, kK };

/// Required rows of a variable gadget, in layout order.
enum RowRole { kA1, kA3, kA4, kA2, kA1p, kA3p, kA4p, kA2p };

struct VariableGadget {
  int variable = 0;
  std::int64_t col0 = 0;  // global = local + offset
  std::int64_t row0 = 0;
  std::array<std::int64_t, 8> rows{};   // by RowRole, global
  std::array<std::int64_t, 4> v_cols{};  // global
  std::array<SensorId, 8> sensors{};     // by VariableRole
};

struct ClauseLiteral {
  sat::Literal literal = 0;
  std::int64_t slot_row = 0;  // the variable-gadget row this sensor can block
  SensorId id = 0;
};

struct ClauseGadget {
  std::int64_t col0 = 0;
  std::int64_t v_col = 0;
  std::vector<ClauseLiteral> literals;
};

struct VHMeta {
  sat::Formula formula;
  std::vector<VariableGadget> variables;
  std::vector<ClauseGadget> clauses;
};

struct VHReduction {
  VHInstance instance;
  VHMeta meta;
};

/// Grid a = 16n + 4m by b = 24n with rows growing downward.
/// Error{dialect} unless the formula is a valid 3-SAT(2,2) instance.
VHReduction gen_vh(const sat::Formula& f);

/// The integer unit-move solution for a satisfying assignment.
/// Error{unsatisfied_clause} otherwise.
Solution embed_vh(const VHReduction& red, const sat::Assignment& value);

/// A literal is true when its clause sensor moved one column left; x is
/// true when one of its positive literals is. Error{not_a_solution} unless
/// `sol` is integer, (V,H)-blocking and moves each sensor at most 1;
/// Error{inconsistent_solution} if both signs of a variable are true.
sat::Assignment extract_vh(const VHReduction& red, const Solution& sol);

/// Rewrites a fractional unit-move (V,H)-blocking solution into an integer
/// one. Error{not_a_solution} if the input or output fails verification.
Solution integerize(const VHReduction& red, const Solution& sol);

/// The rewriting passes alone, without verifying input or output.
Solution integerize_passes(const VHReduction& red, const Solution& sol);

/// Error{not_gadget_instance} unless `inst` is what gen_vh builds from
/// `meta.formula`.
void check_gadget_instance(const VHInstance& inst, const VHMeta& meta);

// ---------------------------------------------------------------------------
// (V,H)-blocking -> MinMax blocking by padding.

struct MinMaxMeta {
  VHInstance source;
  std::int64_t dx = 0;
  std::int64_t dy = 0;
  std::vector<SensorId> v_border;  // v_1 .. v_{a-|V|+4}
  std::vector<SensorId> h_border;  // h_1 .. h_{b-|H|+4}
};

struct MinMaxReduction {
  Configuration config;
  MinMaxMeta meta;
};

/// Error{property_violation} unless D = 1 and neither the last column nor
/// the last row is required or occupied.
MinMaxReduction gen_minmax(const VHInstance& vh);

/// Shifts a (V,H)-blocking unit-move solution into the padded grid and
/// moves the border sensors so that every line is blocked.
Solution embed_minmax(const MinMaxReduction& red, const Solution& vh_solution);

/// Undoes the shift. Error{not_a_solution} unless the input blocks the whole
/// padded grid with unit moves and the result is (V,H)-blocking.
Solution extract_minmax(const MinMaxReduction& red, const Solution& sol);

/// Max move under the configuration's metric.
Length max_move(const Configuration& config, const Solution& sol);

}  // namespace wcr::reductions
