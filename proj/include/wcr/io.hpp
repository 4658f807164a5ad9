#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "wcr/core.hpp"

namespace wcr::io {

using Json = nlohmann::json;

/// Parses UTF-8 JSON text; syntax errors become Error{parse} carrying the
/// parser's line and column.
Json parse_json(std::string_view text);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& value);

/// Read-only cursor over a JSON document that remembers its path
/// ("sensors[2].x") so that every error names the offending field.
class JsonReader {
 public:
  JsonReader(const Json& value, std::string path = "$")
      : value_(&value), path_(std::move(path)) {}

  const Json& json() const { return *value_; }
  const std::string& path() const { return path_; }

  bool has(const std::string& key) const;
  JsonReader at(const std::string& key) const;
  JsonReader at(std::size_t index) const;
  std::size_t size() const;  // arrays only

  Rational rational() const;
  std::int64_t integer() const;
  bool boolean() const;
  std::string string() const;
  std::vector<std::int64_t> integers() const;

  [[noreturn]] void fail(const std::string& message) const;

 private:
  const Json* value_;
  std::string path_;
};

Json rational_json(const Rational& value);
/// Integers as JSON numbers, everything else as "p/q" strings.
Json dimension_json(const Rational& value);

Json to_json(const Configuration& config);
Json to_json(const VHInstance& inst);
Json to_json(const Solution& sol);

Configuration configuration_from(const JsonReader& in);
VHInstance vh_instance_from(const JsonReader& in);
Solution solution_from(const JsonReader& in);

/// An instance file holds a plain configuration or, when any of
/// v_lines / h_lines / max_move is present, a (V,H) instance.
using Instance = std::variant<Configuration, VHInstance>;

Instance read_instance(std::string_view text);
std::string write_instance(const Configuration& config);
std::string write_instance(const VHInstance& inst);

Solution read_solution(std::string_view text);
std::string write_solution(const Solution& sol);

/// The configuration part of either instance flavour.
const Configuration& configuration_of(const Instance& inst);

}  // namespace wcr::io
