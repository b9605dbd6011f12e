#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "stackprice/instance.hpp"

namespace stackprice::io {

using nlohmann::json;

struct InstanceFile {
  Instance instance;
  std::optional<json> provenance;  // present on generated gadget files
};

/// Parses and validates an instance document. Known fields are `model`,
/// `capacity`, `leader`, `follower` and the optional `provenance` object;
/// anything else is rejected. When `model` is absent, `default_model` is used
/// if given, otherwise parsing fails.
InstanceFile parse_instance(std::string_view text,
                            std::optional<Model> default_model = std::nullopt);

json to_json(const Instance& inst);
std::string serialize(const Instance& inst, const std::optional<json>& provenance = std::nullopt);

json to_json(const DualWeight& w);
DualWeight dual_from_json(const json& j, const std::string& field);

json to_json(const WeightAssignment& a);

/// Reads `{"assignment": [{"base": b, "eps_coeff": e}, ...]}`. Other top-level
/// fields are ignored so a solve report can be fed back as an assignment file.
WeightAssignment parse_assignment(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace stackprice::io
