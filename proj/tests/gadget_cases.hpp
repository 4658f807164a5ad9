#pragma once

// Fractional solutions of (V,H) gadget instances that drive each rewriting
// case of integerize, plus helpers shared by the unit and acceptance tests.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wcr/coverage.hpp"
#include "wcr/random_instances.hpp"
#include "wcr/reductions.hpp"
#include "wcr/sat.hpp"

namespace wcr::test {

/// p may block the row above or below q; q sits on the slot row; r is the
/// clause sensor that can block the slot row from below.
struct Triple {
  SensorId p, q, r;
};

inline std::vector<Triple> triples(const reductions::VHReduction& red) {
  using namespace reductions;
  struct Roles {
    VariableRole p, q;
    RowRole slot;
  };
  constexpr std::array<Roles, 4> kRoles{{{kF, kA, kA3}, {kJ, kB, kA2}, {kG, kC, kA3p}, {kK, kE, kA2p}}};
  std::vector<Triple> out;
  for (const VariableGadget& g : red.meta.variables) {
    for (const Roles& t : kRoles) {
      SensorId r = -1;
      for (const ClauseGadget& c : red.meta.clauses) {
        for (const ClauseLiteral& l : c.literals) {
          if (l.slot_row == g.rows[t.slot]) r = l.id;
        }
      }
      out.push_back({g.sensors[t.p], g.sensors[t.q], r});
    }
  }
  return out;
}

inline std::vector<sat::Assignment> satisfying(const sat::Formula& f) {
  std::vector<sat::Assignment> out;
  for (std::uint32_t mask = 0; mask < (1u << f.variables); ++mask) {
    sat::Assignment a(f.variables);
    for (int v = 0; v < f.variables; ++v) a[v] = mask >> v & 1;
    if (sat::satisfied_count(f, a) == f.clauses.size()) out.push_back(a);
  }
  return out;
}

inline std::set<std::pair<char, std::int64_t>> blocked_lines(const VHInstance& inst,
                                                              const Solution& sol) {
  const VHCoverage cov = vh_coverage(inst, sol);
  std::set<std::pair<char, std::int64_t>> out;
  for (std::int64_t v : inst.v_lines) {
    if (std::find(cov.unblocked_v.begin(), cov.unblocked_v.end(), v) == cov.unblocked_v.end()) {
      out.emplace('v', v);
    }
  }
  for (std::int64_t h : inst.h_lines) {
    if (std::find(cov.unblocked_h.begin(), cov.unblocked_h.end(), h) == cov.unblocked_h.end()) {
      out.emplace('h', h);
    }
  }
  return out;
}

/// Fractional positions allowed; integer ones are checked by all_integer.
inline bool unit_blocking(const VHInstance& inst, const Solution& sol) {
  for (const auto& [id, p] : sol.positions) {
    if (p.x < 1 || p.x > inst.config.width || p.y < 1 || p.y > inst.config.height) return false;
  }
  return vh_coverage(inst, sol).blocking() &&
         reductions::max_move(inst.config, sol) <= Length::from_value(1);
}

inline bool all_integer(const Solution& sol) {
  for (const auto& [id, p] : sol.positions) {
    if (!is_integer(p.x) || !is_integer(p.y)) return false;
  }
  return true;
}

struct BranchCase {
  std::string name;
  reductions::VHReduction red;
  Triple triple;
  Solution input;
  // False when p or q is fractional. Each of the eight gadget lines has two
  // candidate gadget sensors and no other sensor in reach, and a V-line can
  // only be blocked by a sensor sitting exactly on it, so every gadget sensor
  // makes a full unit move in a blocking input. Those cases run through the
  // rewriting passes only.
  bool verifying = true;
};

/// One case per branch, taken from the first seeded 3-SAT(2,2) formula,
/// satisfying assignment and triple where the pattern blocks every line.
/// Offsets are row steps (rows grow downward); nullopt keeps the embedded
/// position.
inline std::vector<BranchCase> branch_cases(std::uint64_t seed = 1) {
  struct Pattern {
    std::string name;
    std::optional<Rational> p, q, r;
    bool verifying;
  };
  const Rational h(1, 2);
  const std::vector<Pattern> patterns = {
      {"r-up", std::nullopt, std::nullopt, -h, true},
      {"r-down", std::nullopt, std::nullopt, h, true},
      {"p-down", h, -h, -h, false},
      {"q-up", Rational(1), -h, -h, false},
      {"p-up", -h, std::nullopt, std::nullopt, false},
      {"q-down", std::nullopt, h, std::nullopt, false},
  };
  std::vector<BranchCase> out;
  random::Rng rng(seed);
  for (const Pattern& pat : patterns) {
    bool found = false;
    random::Rng local = rng;
    for (int draw = 0; draw < 200 && !found; ++draw) {
      const sat::Formula f = random::sat22_formula(local, 3);
      const auto assignments = satisfying(f);
      if (assignments.empty()) continue;
      const reductions::VHReduction red = reductions::gen_vh(f);
      std::map<SensorId, Point> start;
      for (const Sensor& s : red.instance.config.sensors) start.emplace(s.id, s.center);
      for (const sat::Assignment& a : assignments) {
        const Solution base = reductions::embed_vh(red, a);
        for (const Triple& t : triples(red)) {
          Solution s = base;
          auto place = [&](SensorId id, const std::optional<Rational>& dy) {
            if (dy) s.positions.at(id) = {start.at(id).x, start.at(id).y + *dy};
          };
          place(t.p, pat.p);
          place(t.q, pat.q);
          place(t.r, pat.r);
          if (pat.verifying && !unit_blocking(red.instance, s)) continue;
          out.push_back({pat.name, red, t, s, pat.verifying});
          found = true;
          break;
        }
        if (found) break;
      }
    }
  }
  return out;
}

}  // namespace wcr::test
