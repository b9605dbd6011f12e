#include "stackprice/instance.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "stackprice/error.hpp"

namespace stackprice {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroOrNegativeWeight: return "ZeroOrNegativeWeight";
    case ErrorCode::ZeroCapacity: return "ZeroCapacity";
    case ErrorCode::EmptyInstance: return "EmptyInstance";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::UnknownField: return "UnknownField";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::ZeroConstraintWeightDivision: return "ZeroConstraintWeightDivision";
    case ErrorCode::MissingAssignment: return "MissingAssignment";
    case ErrorCode::NegativeAssignedWeight: return "NegativeAssignedWeight";
    case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::ChosenItemTooLarge: return "ChosenItemTooLarge";
    case ErrorCode::CapacityTooLarge: return "CapacityTooLarge";
    case ErrorCode::InstanceTooLargeForOracle: return "InstanceTooLargeForOracle";
    case ErrorCode::OddTotalSum: return "OddTotalSum";
    case ErrorCode::PartitionTooLarge: return "PartitionTooLarge";
    case ErrorCode::MTooSmall: return "MTooSmall";
    case ErrorCode::ScaleTooSmall: return "ScaleTooSmall";
    case ErrorCode::PredictionRefuted: return "PredictionRefuted";
  }
  return "Unknown";
}

namespace {

constexpr std::array<std::pair<Model, std::string_view>, 6> kModelNames{{
    {Model::ObjectiveControl, "objective"},
    {Model::ConstraintControl, "constraint"},
    {Model::ConstraintSimple, "constraint-simple"},
    {Model::LpObjective, "lp-objective"},
    {Model::LpConstraint, "lp-constraint"},
    {Model::LpConstraintSimple, "lp-constraint-simple"},
}};

std::int64_t checked_sum(const std::vector<std::int64_t>& v) {
  std::int64_t s = 0;
  for (auto w : v) s = checked::add(s, w);
  return s;
}

}  // namespace

std::string_view model_name(Model m) {
  for (const auto& [model, name] : kModelNames) {
    if (model == m) return name;
  }
  return "unknown";
}

std::optional<Model> parse_model(std::string_view name) {
  for (const auto& [model, n] : kModelNames) {
    if (n == name) return model;
  }
  return std::nullopt;
}

bool is_discrete(Model m) {
  return m == Model::ObjectiveControl || m == Model::ConstraintControl ||
         m == Model::ConstraintSimple;
}

const Instance& validate(const Instance& raw) {
  if (raw.capacity < 1) {
    throw Error(ErrorCode::ZeroCapacity, "field 'capacity' must be >= 1, got " +
                                             std::to_string(raw.capacity));
  }
  if (raw.leader_weights.empty() && raw.follower_weights.empty()) {
    throw Error(ErrorCode::EmptyInstance, "fields 'leader' and 'follower' are both empty");
  }
  auto check_side = [](const std::vector<std::int64_t>& ws, const char* field) {
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (ws[i] < 1) {
        throw Error(ErrorCode::ZeroOrNegativeWeight,
                    std::string("field '") + field + "[" + std::to_string(i) +
                        "]' must be >= 1, got " + std::to_string(ws[i]));
      }
    }
  };
  check_side(raw.leader_weights, "leader");
  check_side(raw.follower_weights, "follower");

  // Sums of all weights plus the capacity, and max-weight * (capacity + 1),
  // bound every quantity the solvers form.
  const std::int64_t total =
      checked::add(checked::add(checked_sum(raw.leader_weights), checked_sum(raw.follower_weights)),
                   raw.capacity);
  std::int64_t max_w = 0;
  for (auto w : raw.leader_weights) max_w = std::max(max_w, w);
  for (auto w : raw.follower_weights) max_w = std::max(max_w, w);
  checked::mul(std::max(max_w, total), checked::add(raw.capacity, 2));
  return raw;
}

std::int64_t total_leader_weight(const Instance& inst) { return checked_sum(inst.leader_weights); }
std::int64_t total_follower_weight(const Instance& inst) {
  return checked_sum(inst.follower_weights);
}

WeightAssignment WeightAssignment::identity(const Instance& inst) {
  WeightAssignment a;
  a.weights.reserve(inst.leader_weights.size());
  for (auto w : inst.leader_weights) a.weights.emplace_back(w);
  return a;
}

bool PackingOutcome::is_packed(ItemId id) const {
  return std::find(packed.begin(), packed.end(), id) != packed.end();
}

}  // namespace stackprice
