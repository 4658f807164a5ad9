#include "wcr/io.hpp"

#include <algorithm>

#include "wcr/error.hpp"

namespace wcr::io {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::parse, std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& value) { return value.dump(2) + "\n"; }

void JsonReader::fail(const std::string& message) const {
  wcr::fail(ErrorKind::parse, path_ + ": " + message);
}

bool JsonReader::has(const std::string& key) const {
  return value_->is_object() && value_->contains(key);
}

JsonReader JsonReader::at(const std::string& key) const {
  if (!value_->is_object()) fail("expected an object");
  auto it = value_->find(key);
  if (it == value_->end()) fail("missing field \"" + key + "\"");
  return JsonReader(*it, path_ + "." + key);
}

JsonReader JsonReader::at(std::size_t index) const {
  if (!value_->is_array()) fail("expected an array");
  if (index >= value_->size()) fail("index out of range");
  return JsonReader((*value_)[index], path_ + "[" + std::to_string(index) + "]");
}

std::size_t JsonReader::size() const {
  if (!value_->is_array()) fail("expected an array");
  return value_->size();
}

Rational JsonReader::rational() const {
  if (value_->is_number_integer()) {
    return Rational(BigInt(value_->dump()));
  }
  if (value_->is_string()) {
    try {
      return parse_rational(value_->get<std::string>());
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  if (value_->is_number_float()) fail("floating-point numbers are inexact; quote the value");
  fail("expected a rational (\"p/q\", integer, or exact decimal string)");
}

std::int64_t JsonReader::integer() const {
  if (value_->is_number_integer()) return value_->get<std::int64_t>();
  if (value_->is_string()) {
    Rational r = rational();
    if (is_integer(r)) return to_int64(r);
  }
  fail("expected an integer");
}

bool JsonReader::boolean() const {
  if (!value_->is_boolean()) fail("expected a boolean");
  return value_->get<bool>();
}

std::string JsonReader::string() const {
  if (!value_->is_string()) fail("expected a string");
  return value_->get<std::string>();
}

std::vector<std::int64_t> JsonReader::integers() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).integer());
  return out;
}

Json rational_json(const Rational& value) { return to_string(value); }

Json dimension_json(const Rational& value) {
  if (is_integer(value)) {
    const BigInt& n = boost::multiprecision::numerator(value);
    if (n <= std::numeric_limits<std::int64_t>::max()) return n.convert_to<std::int64_t>();
  }
  return to_string(value);
}

Json to_json(const Configuration& config) {
  std::vector<const Sensor*> sorted;
  for (const Sensor& s : config.sensors) sorted.push_back(&s);
  std::sort(sorted.begin(), sorted.end(),
            [](const Sensor* a, const Sensor* b) { return a->id < b->id; });
  Json sensors = Json::array();
  for (const Sensor* s : sorted) {
    sensors.push_back({{"id", s->id},
                       {"x", rational_json(s->center.x)},
                       {"y", rational_json(s->center.y)},
                       {"range", rational_json(s->range)}});
  }
  return {{"mode", to_string(config.mode)},
          {"metric", to_string(config.metric)},
          {"rect", {{"width", dimension_json(config.width)},
                    {"height", dimension_json(config.height)}}},
          {"sensors", std::move(sensors)}};
}

Json to_json(const VHInstance& inst) {
  Json out = to_json(inst.config);
  std::vector<std::int64_t> v = inst.v_lines, h = inst.h_lines;
  std::sort(v.begin(), v.end());
  std::sort(h.begin(), h.end());
  out["v_lines"] = v;
  out["h_lines"] = h;
  out["max_move"] = rational_json(inst.max_move);
  return out;
}

Json to_json(const Solution& sol) {
  Json positions = Json::array();
  for (const auto& [id, p] : sol.positions) {
    positions.push_back({{"id", id}, {"x", rational_json(p.x)}, {"y", rational_json(p.y)}});
  }
  return {{"positions", std::move(positions)}};
}

namespace {

Mode mode_from(const JsonReader& in) {
  const std::string s = in.string();
  if (s == "integer") return Mode::integer;
  if (s == "continuous") return Mode::continuous;
  in.fail("mode must be \"integer\" or \"continuous\"");
}

Metric metric_from(const JsonReader& in) {
  const std::string s = in.string();
  if (s == "manhattan") return Metric::manhattan;
  if (s == "euclidean") return Metric::euclidean;
  in.fail("metric must be \"manhattan\" or \"euclidean\"");
}

}  // namespace

Configuration configuration_from(const JsonReader& in) {
  Configuration config;
  config.mode = mode_from(in.at("mode"));
  config.metric = in.has("metric") ? metric_from(in.at("metric")) : Metric::manhattan;
  const JsonReader rect = in.at("rect");
  config.width = rect.at("width").rational();
  config.height = rect.at("height").rational();
  const JsonReader sensors = in.at("sensors");
  for (std::size_t i = 0; i < sensors.size(); ++i) {
    const JsonReader s = sensors.at(i);
    Sensor sensor;
    sensor.id = s.at("id").integer();
    sensor.center = {s.at("x").rational(), s.at("y").rational()};
    sensor.range = s.has("range") || config.mode == Mode::continuous
                       ? s.at("range").rational()
                       : Rational(1, 2);
    config.sensors.push_back(std::move(sensor));
  }
  validate(config);
  return config;
}

VHInstance vh_instance_from(const JsonReader& in) {
  VHInstance inst;
  inst.config = configuration_from(in);
  inst.v_lines = in.has("v_lines") ? in.at("v_lines").integers() : std::vector<std::int64_t>{};
  inst.h_lines = in.has("h_lines") ? in.at("h_lines").integers() : std::vector<std::int64_t>{};
  inst.max_move = in.has("max_move") ? in.at("max_move").rational() : Rational(0);
  std::sort(inst.v_lines.begin(), inst.v_lines.end());
  inst.v_lines.erase(std::unique(inst.v_lines.begin(), inst.v_lines.end()), inst.v_lines.end());
  std::sort(inst.h_lines.begin(), inst.h_lines.end());
  inst.h_lines.erase(std::unique(inst.h_lines.begin(), inst.h_lines.end()), inst.h_lines.end());
  validate(inst);
  return inst;
}

Solution solution_from(const JsonReader& in) {
  Solution sol;
  const JsonReader positions = in.at("positions");
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const JsonReader p = positions.at(i);
    const SensorId id = p.at("id").integer();
    if (!sol.positions.emplace(id, Point{p.at("x").rational(), p.at("y").rational()}).second) {
      p.at("id").fail("duplicate id " + std::to_string(id));
    }
  }
  return sol;
}

Instance read_instance(std::string_view text) {
  const Json doc = parse_json(text);
  const JsonReader in(doc);
  if (in.has("v_lines") || in.has("h_lines") || in.has("max_move")) return vh_instance_from(in);
  return configuration_from(in);
}

std::string write_instance(const Configuration& config) { return dump(to_json(config)); }
std::string write_instance(const VHInstance& inst) { return dump(to_json(inst)); }

Solution read_solution(std::string_view text) {
  const Json doc = parse_json(text);
  return solution_from(JsonReader(doc));
}

std::string write_solution(const Solution& sol) { return dump(to_json(sol)); }

const Configuration& configuration_of(const Instance& inst) {
  if (const auto* vh = std::get_if<VHInstance>(&inst)) return vh->config;
  return std::get<Configuration>(inst);
}

}  // namespace wcr::io
