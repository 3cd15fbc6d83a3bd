#include <json.hpp>

#include "catsim/circuit.hpp"
#include "catsim/error.hpp"

namespace catsim {

namespace {

using nlohmann::json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const char* field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidArgument(std::string("circuit JSON: '") + field + "' must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

} // namespace

std::string to_json(const CircuitSpec& spec) {
  json steps = json::array();
  for (const auto& s : spec.steps) {
    if (s.kind == CircuitStep::Kind::AddPhoton)
      steps.push_back({{"add", true}});
    else
      steps.push_back({{"displace", complex_to_json(s.beta)}});
  }
  json doc = {{"seed", complex_to_json(spec.seed)}, {"dim", spec.dim}, {"steps", steps}};
  return doc.dump(2);
}

CircuitSpec circuit_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("circuit JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw InvalidArgument("circuit JSON: top level must be an object");

  CircuitSpec spec;
  if (!doc.contains("seed"))
    throw InvalidArgument("circuit JSON: missing 'seed'");
  spec.seed = complex_from_json(doc["seed"], "seed");
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_integer())
      throw InvalidArgument("circuit JSON: 'dim' must be an integer");
    spec.dim = doc["dim"].get<int>();
  }
  if (doc.contains("steps")) {
    const auto& steps = doc["steps"];
    if (!steps.is_array())
      throw InvalidArgument("circuit JSON: 'steps' must be an array");
    for (const auto& s : steps) {
      if (s.is_object() && s.size() == 1 && s.contains("add")) {
        if (!s["add"].is_boolean() || !s["add"].get<bool>())
          throw InvalidArgument("circuit JSON: 'add' must be true");
        spec.steps.push_back(CircuitStep::add());
      } else if (s.is_object() && s.size() == 1 && s.contains("displace")) {
        spec.steps.push_back(CircuitStep::displace(complex_from_json(s["displace"], "displace")));
      } else {
        throw InvalidArgument("circuit JSON: each step is {\"add\": true} or {\"displace\": [re, im]}");
      }
    }
  }
  return spec;
}

} // namespace catsim
