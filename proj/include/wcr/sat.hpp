#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wcr::sat {

enum class Dialect { max2sat_3occ, sat3_22 };

const char* to_string(Dialect dialect);

/// Non-zero signed variable index: 3 is x3, -3 its negation.
using Literal = int;
using Clause = std::vector<Literal>;

/// `target` is the number of clauses to satisfy (3-Occ-Max-2SAT only).
struct Formula {
  Dialect dialect = Dialect::sat3_22;
  int variables = 0;
  std::vector<Clause> clauses;
  std::int64_t target = 0;
};

/// value[v - 1] is the truth value of x_v.
using Assignment = std::vector<bool>;

bool literal_true(Literal lit, const Assignment& value);
bool clause_satisfied(const Clause& clause, const Assignment& value);
std::size_t satisfied_count(const Formula& f, const Assignment& value);

/// Error{dialect} on any violation. 3-Occ-Max-2SAT: two distinct variables
/// per clause, each variable in exactly three clauses with both signs, and
/// 0 <= target <= clause count. 3-SAT(2,2): three literals per clause, each
/// variable exactly twice positive and twice negated.
void validate_dialect(const Formula& f);

struct BruteResult {
  Assignment best;
  std::size_t satisfied = 0;
};

/// Exhaustive over all 2^n assignments, x1 most significant and false
/// before true, so the first maximum found is lexicographically smallest.
/// Error{size_limit} above 24 variables.
BruteResult sat_brute(const Formula& f);

}  // namespace wcr::sat
