#include "wcr/reductions_io.hpp"

#include <array>
#include <cstdlib>

#include "wcr/error.hpp"

namespace wcr::io {

namespace {

constexpr std::array<const char*, 8> kRoleNames{"A", "B", "C", "E", "F", "G", "J", "K"};
constexpr std::array<const char*, 8> kRowNames{"a1", "a3", "a4", "a2", "a1'", "a3'", "a4'", "a2'"};

void require_same(const JsonReader& in, const Json& rebuilt) {
  if (in.json() != rebuilt) {
    fail(ErrorKind::not_gadget_instance,
         in.path() + ": meta does not match the construction of its input");
  }
}

}  // namespace

Json to_json(const sat::Formula& f) {
  Json out = {{"dialect", sat::to_string(f.dialect)},
              {"variables", f.variables},
              {"clauses", f.clauses}};
  if (f.dialect == sat::Dialect::max2sat_3occ) out["t"] = f.target;
  return out;
}

sat::Formula formula_from(const JsonReader& in) {
  sat::Formula f;
  const std::string dialect = in.at("dialect").string();
  if (dialect == "max2sat-3occ") {
    f.dialect = sat::Dialect::max2sat_3occ;
  } else if (dialect == "3sat22") {
    f.dialect = sat::Dialect::sat3_22;
  } else {
    in.at("dialect").fail("dialect must be \"max2sat-3occ\" or \"3sat22\"");
  }
  f.variables = static_cast<int>(in.at("variables").integer());
  const JsonReader clauses = in.at("clauses");
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    sat::Clause c;
    for (std::int64_t lit : clauses.at(j).integers()) c.push_back(static_cast<sat::Literal>(lit));
    f.clauses.push_back(std::move(c));
  }
  if (f.dialect == sat::Dialect::max2sat_3occ) f.target = in.at("t").integer();
  sat::validate_dialect(f);
  return f;
}

sat::Formula read_formula(std::string_view text) {
  const Json doc = parse_json(text);
  return formula_from(JsonReader(doc));
}

Json assignment_json(const sat::Assignment& value) {
  Json out = Json::array();
  for (std::size_t v = 0; v < value.size(); ++v) {
    const int lit = static_cast<int>(v) + 1;
    out.push_back(value[v] ? lit : -lit);
  }
  return out;
}

sat::Assignment assignment_from(const JsonReader& in, int variables) {
  sat::Assignment value(variables, false);
  std::vector<bool> seen(variables, false);
  const auto lits = in.integers();
  for (std::int64_t lit : lits) {
    const std::int64_t v = std::abs(lit);
    if (lit == 0 || v > variables) in.fail("literal " + std::to_string(lit) + " out of range");
    if (seen[v - 1]) in.fail("x" + std::to_string(v) + " assigned twice");
    seen[v - 1] = true;
    value[v - 1] = lit > 0;
  }
  if (static_cast<int>(lits.size()) != variables) in.fail("every variable needs a value");
  return value;
}

Json meta_json(const reductions::MinNumMeta& meta) {
  Json literals = Json::array();
  for (const auto& ls : meta.literals) {
    literals.push_back({{"clause", ls.clause + 1},
                        {"position", ls.position + 1},
                        {"literal", ls.literal},
                        {"id", ls.id}});
  }
  return {{"construction", "minnum"},
          {"formula", to_json(meta.formula)},
          {"side", meta.side},
          {"literals", std::move(literals)},
          {"alpha", meta.alpha},
          {"beta", meta.beta}};
}

Json meta_json(const reductions::VHMeta& meta) {
  Json variables = Json::array();
  for (const auto& g : meta.variables) {
    Json rows = Json::object();
    Json sensors = Json::object();
    for (std::size_t i = 0; i < 8; ++i) {
      rows[kRowNames[i]] = g.rows[i];
      sensors[kRoleNames[i]] = g.sensors[i];
    }
    variables.push_back({{"variable", g.variable},
                         {"col0", g.col0},
                         {"row0", g.row0},
                         {"rows", std::move(rows)},
                         {"v_cols", g.v_cols},
                         {"sensors", std::move(sensors)}});
  }
  Json clauses = Json::array();
  for (const auto& cg : meta.clauses) {
    Json literals = Json::array();
    for (const auto& cl : cg.literals) {
      literals.push_back({{"literal", cl.literal}, {"slot_row", cl.slot_row}, {"id", cl.id}});
    }
    clauses.push_back({{"col0", cg.col0}, {"v_col", cg.v_col}, {"literals", std::move(literals)}});
  }
  return {{"construction", "vh"},
          {"formula", to_json(meta.formula)},
          {"variables", std::move(variables)},
          {"clauses", std::move(clauses)}};
}

Json meta_json(const reductions::MinMaxMeta& meta) {
  return {{"construction", "minmax"},
          {"source", to_json(meta.source)},
          {"dx", meta.dx},
          {"dy", meta.dy},
          {"v_border", meta.v_border},
          {"h_border", meta.h_border}};
}

std::string construction_of(const JsonReader& meta) {
  const std::string kind = meta.at("construction").string();
  if (kind != "minnum" && kind != "vh" && kind != "minmax") {
    meta.at("construction").fail("construction must be minnum, vh or minmax");
  }
  return kind;
}

reductions::MinNumReduction minnum_reduction_from(const JsonReader& meta) {
  auto red = reductions::gen_minnum(formula_from(meta.at("formula")));
  require_same(meta, meta_json(red.meta));
  return red;
}

reductions::VHReduction vh_reduction_from(const JsonReader& meta) {
  auto red = reductions::gen_vh(formula_from(meta.at("formula")));
  require_same(meta, meta_json(red.meta));
  return red;
}

reductions::MinMaxReduction minmax_reduction_from(const JsonReader& meta) {
  auto red = reductions::gen_minmax(vh_instance_from(meta.at("source")));
  Json expected = meta_json(red.meta);
  expected["source"] = meta.at("source").json();
  require_same(meta, expected);
  return red;
}

}  // namespace wcr::io
