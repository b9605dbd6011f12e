#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stackprice/instance.hpp"
#include "stackprice/parallel.hpp"

namespace stackprice {

struct OracleOptions {
  std::size_t max_leader_items = 16;
  Parallelism parallelism;
};

/// Exhaustive leader optimum over the three-block structure (objective) or
/// the (S1, w') structure (constraint). ε is neglected in `value`.
struct OracleResult {
  std::int64_t value = 0;
  std::vector<std::size_t> before;        // S1
  std::vector<std::size_t> after;         // S2, objective model
  std::optional<std::size_t> chosen;      // w', constraint model
  std::int64_t w1 = 0;
  std::int64_t residual = 0;
  std::uint64_t enumerated = 0;
  // Constraint model: optimal S1 for which the lightest remaining item does
  // not attain the optimum. Expected to stay 0.
  std::uint64_t structure_violations = 0;
};

OracleResult oracle_objective(const Instance& inst, const OracleOptions& opts = {});
OracleResult oracle_constraint(const Instance& inst, const OracleOptions& opts = {});

/// Largest subset sum <= cap over the items in `available`, with one witness.
/// Reaching DP for cap <= 10^4, meet-in-the-middle above.
struct SubsetSum {
  std::int64_t sum = 0;
  std::vector<std::size_t> items;
};
SubsetSum best_subset_sum(const std::vector<std::int64_t>& weights,
                          const std::vector<std::size_t>& available, std::int64_t cap);

}  // namespace stackprice
