#include "wcr/sat.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "wcr/error.hpp"

namespace wcr::sat {

const char* to_string(Dialect dialect) {
  return dialect == Dialect::max2sat_3occ ? "max2sat-3occ" : "3sat22";
}

bool literal_true(Literal lit, const Assignment& value) {
  const bool v = value.at(static_cast<std::size_t>(std::abs(lit)) - 1);
  return lit > 0 ? v : !v;
}

bool clause_satisfied(const Clause& clause, const Assignment& value) {
  for (Literal lit : clause) {
    if (literal_true(lit, value)) return true;
  }
  return false;
}

std::size_t satisfied_count(const Formula& f, const Assignment& value) {
  std::size_t count = 0;
  for (const Clause& c : f.clauses) count += clause_satisfied(c, value);
  return count;
}

void validate_dialect(const Formula& f) {
  auto bad = [&](const std::string& why) {
    fail(ErrorKind::dialect, std::string(to_string(f.dialect)) + ": " + why);
  };
  if (f.variables < 1) bad("at least one variable is required");
  std::vector<int> positive(f.variables + 1, 0);
  std::vector<int> negative(f.variables + 1, 0);
  const std::size_t width = f.dialect == Dialect::max2sat_3occ ? 2 : 3;
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const Clause& c = f.clauses[j];
    const std::string where = "clause " + std::to_string(j + 1);
    if (c.size() != width) bad(where + " must have " + std::to_string(width) + " literals");
    for (Literal lit : c) {
      if (lit == 0 || std::abs(lit) > f.variables) bad(where + " has an invalid literal");
      ++(lit > 0 ? positive : negative)[std::abs(lit)];
    }
    if (width == 2 && std::abs(c[0]) == std::abs(c[1])) {
      bad(where + " repeats a variable");
    }
  }
  for (int v = 1; v <= f.variables; ++v) {
    const std::string var = "x" + std::to_string(v);
    if (f.dialect == Dialect::max2sat_3occ) {
      if (positive[v] + negative[v] != 3) bad(var + " must occur in exactly three clauses");
      if (positive[v] == 0 || negative[v] == 0) bad(var + " must occur with both signs");
    } else if (positive[v] != 2 || negative[v] != 2) {
      bad(var + " must occur twice positive and twice negated");
    }
  }
  if (f.dialect == Dialect::max2sat_3occ &&
      (f.target < 0 || f.target > static_cast<std::int64_t>(f.clauses.size()))) {
    bad("target must lie between 0 and the clause count");
  }
}

BruteResult sat_brute(const Formula& f) {
  if (f.variables > 24) fail(ErrorKind::size_limit, "sat_brute handles at most 24 variables");
  const int n = std::max(f.variables, 0);
  BruteResult out;
  out.best.assign(n, false);
  bool first = true;
  Assignment value(n, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (int v = 0; v < n; ++v) value[v] = (mask >> (n - 1 - v)) & 1u;
    const std::size_t count = satisfied_count(f, value);
    if (first || count > out.satisfied) {
      out.best = value;
      out.satisfied = count;
      first = false;
    }
  }
  return out;
}

}  // namespace wcr::sat
