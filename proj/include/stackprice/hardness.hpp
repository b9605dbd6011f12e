#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "stackprice/instance.hpp"

namespace stackprice {

struct PartitionInstance {
  std::vector<std::int64_t> numbers;
  std::int64_t half_sum = 0;
  std::optional<std::vector<std::size_t>> yes_certificate;

  /// Throws OddTotalSum when the numbers cannot split evenly.
  static PartitionInstance make(std::vector<std::int64_t> numbers);
};

struct PartitionAnswer {
  bool yes = false;
  std::vector<std::size_t> certificate;  // indices summing to half_sum, lexicographically first
};

/// Exact decision for m <= 24 numbers.
PartitionAnswer decide_partition(const PartitionInstance& p);

enum class PredictionKind { Exact, AtMost };

struct GadgetProvenance {
  int theorem = 0;  // 2: objective reduction, 4: constraint reduction
  std::vector<std::int64_t> partition;
  std::int64_t half_sum = 0;
  std::optional<std::int64_t> big_m;  // objective gadget
  std::optional<int> k;               // constraint gadget
  std::optional<std::int64_t> scale;  // constraint gadget
  bool partition_yes = false;
  PredictionKind prediction = PredictionKind::Exact;
  std::int64_t predicted_optimum = 0;
  bool verified = false;  // confirmed by the oracle at generation time
  std::optional<std::int64_t> oracle_optimum;

  nlohmann::json to_json() const;
};

struct GadgetBundle {
  Instance instance;
  GadgetProvenance provenance;
};

struct GadgetOptions {
  /// Gadgets from at most this many Partition numbers are checked against
  /// the oracle; a refuted prediction throws PredictionRefuted.
  std::size_t self_check_max_numbers = 8;
};

std::int64_t default_big_m(const PartitionInstance& p);

/// L = {a_1..a_m, M}, F = {M + 1}, c = M + b. Requires M > 2b.
/// Optimum is M on YES instances and at most b - 1 on NO instances.
GadgetBundle gen_objective_gadget(const PartitionInstance& p, std::int64_t big_m,
                                  const GadgetOptions& opts = {});

/// Unscaled form with the ε item kept symbolic.
struct SymbolicConstraintGadget {
  std::vector<DualWeight> leader;
  std::vector<std::int64_t> follower;
  std::int64_t capacity = 0;
  int k = 0;
};
SymbolicConstraintGadget constraint_gadget_symbolic(const PartitionInstance& p);

/// Constraint reduction scaled by `scale` (>= 2) so the ε item becomes weight 1.
/// Predicts optimum scale - 1 on YES and 0 on NO.
GadgetBundle gen_constraint_gadget(const PartitionInstance& p, std::int64_t scale,
                                   const GadgetOptions& opts = {});

}  // namespace stackprice
