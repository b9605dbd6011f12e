#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "stackprice/dual_weight.hpp"

namespace stackprice {

enum class Model {
  ObjectiveControl,
  ConstraintControl,
  ConstraintSimple,
  LpObjective,
  LpConstraint,
  LpConstraintSimple,
};

/// File-format name of a model ("objective", "lp-constraint", ...).
std::string_view model_name(Model m);
std::optional<Model> parse_model(std::string_view name);

bool is_discrete(Model m);

enum class Side { Leader, Follower };

/// Items are identified positionally; equal weights are still distinct items.
struct ItemId {
  Side side = Side::Leader;
  std::size_t index = 0;

  friend bool operator==(const ItemId&, const ItemId&) = default;
  friend auto operator<=>(const ItemId&, const ItemId&) = default;
};

struct Instance {
  std::int64_t capacity = 0;
  std::vector<std::int64_t> leader_weights;
  std::vector<std::int64_t> follower_weights;
  Model model = Model::ObjectiveControl;

  std::size_t item_count() const { return leader_weights.size() + follower_weights.size(); }
  std::int64_t weight(ItemId id) const {
    return id.side == Side::Leader ? leader_weights[id.index] : follower_weights[id.index];
  }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Checks the instance invariants and returns it unchanged.
///
/// Besides positivity it rejects instances whose weight totals or
/// weight-by-capacity products would overflow 64-bit arithmetic.
const Instance& validate(const Instance& raw);

std::int64_t total_leader_weight(const Instance& inst);
std::int64_t total_follower_weight(const Instance& inst);

/// The leader's chosen revised weight per leader item, indexed like leader_weights.
struct WeightAssignment {
  std::vector<DualWeight> weights;

  static WeightAssignment identity(const Instance& inst);
  static WeightAssignment zeros(std::size_t n) { return {std::vector<DualWeight>(n)}; }

  friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;
};

struct TraceStep {
  ItemId item;
  std::size_t rank = 0;  // position in Greedy's visiting order
  bool packed = false;
  DualWeight residual_after;
};

struct PackingOutcome {
  std::vector<ItemId> packed;  // in visiting order
  std::vector<TraceStep> trace;
  DualWeight consumed;
  DualWeight leader_payoff;

  bool is_packed(ItemId id) const;
};

}  // namespace stackprice
