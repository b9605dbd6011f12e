#include "stackprice/instance_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "stackprice/error.hpp"

namespace stackprice::io {

namespace {

std::int64_t int_field(const json& j, const std::string& field) {
  if (!j.is_number_integer()) {
    throw Error(ErrorCode::Parse, "field '" + field + "' must be an integer");
  }
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> int_list(const json& j, const std::string& field) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "field '" + field + "' must be a list");
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(int_field(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

InstanceFile parse_instance(std::string_view text, std::optional<Model> default_model) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "instance must be a JSON object");

  static const std::set<std::string> known{"model", "capacity", "leader", "follower", "provenance"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) throw Error(ErrorCode::UnknownField, "unknown field '" + key + "'");
  }
  for (const char* required : {"capacity", "leader", "follower"}) {
    if (!doc.contains(required)) {
      throw Error(ErrorCode::Parse, std::string("missing field '") + required + "'");
    }
  }

  InstanceFile out;
  if (doc.contains("model")) {
    if (!doc["model"].is_string()) throw Error(ErrorCode::Parse, "field 'model' must be a string");
    auto m = parse_model(doc["model"].get<std::string>());
    if (!m) {
      throw Error(ErrorCode::Parse, "field 'model' has unknown value '" +
                                        doc["model"].get<std::string>() + "'");
    }
    out.instance.model = *m;
  } else if (default_model) {
    out.instance.model = *default_model;
  } else {
    throw Error(ErrorCode::Parse, "missing field 'model'");
  }
  out.instance.capacity = int_field(doc["capacity"], "capacity");
  out.instance.leader_weights = int_list(doc["leader"], "leader");
  out.instance.follower_weights = int_list(doc["follower"], "follower");
  if (doc.contains("provenance")) {
    if (!doc["provenance"].is_object()) {
      throw Error(ErrorCode::Parse, "field 'provenance' must be an object");
    }
    out.provenance = doc["provenance"];
  }
  validate(out.instance);
  return out;
}

json to_json(const Instance& inst) {
  return json{{"model", std::string(model_name(inst.model))},
              {"capacity", inst.capacity},
              {"leader", inst.leader_weights},
              {"follower", inst.follower_weights}};
}

std::string serialize(const Instance& inst, const std::optional<json>& provenance) {
  json j = to_json(inst);
  if (provenance) j["provenance"] = *provenance;
  return j.dump(2) + "\n";
}

json to_json(const DualWeight& w) {
  return json{{"base", w.base()}, {"eps_coeff", w.eps_coeff()}};
}

DualWeight dual_from_json(const json& j, const std::string& field) {
  if (!j.is_object() || !j.contains("base") || !j.contains("eps_coeff") || j.size() != 2) {
    throw Error(ErrorCode::Parse, "field '" + field + "' must be {\"base\", \"eps_coeff\"}");
  }
  return {int_field(j["base"], field + ".base"), int_field(j["eps_coeff"], field + ".eps_coeff")};
}

json to_json(const WeightAssignment& a) {
  json arr = json::array();
  for (const auto& w : a.weights) arr.push_back(to_json(w));
  return arr;
}

WeightAssignment parse_assignment(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("assignment") || !doc["assignment"].is_array()) {
    throw Error(ErrorCode::Parse, "assignment file needs an 'assignment' list");
  }
  WeightAssignment a;
  const auto& arr = doc["assignment"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    a.weights.push_back(dual_from_json(arr[i], "assignment[" + std::to_string(i) + "]"));
  }
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace stackprice::io
