#pragma once

#include <cstdint>
#include <vector>

#include "stackprice/dual_weight.hpp"
#include "stackprice/instance.hpp"
#include "stackprice/parallel.hpp"

namespace stackprice {

/// Efficiency as an exact fraction. Denominator is strictly positive.
struct EfficiencyKey {
  DualWeight numerator;
  DualWeight denominator;
};

/// Compares by cross-multiplication (128-bit, ε² dropped). In both models at
/// least one factor of every cross product is ε-free, so this is exact.
Ordering compare_efficiency(const EfficiencyKey& a, const EfficiencyKey& b);

/// How the follower perceives one item under a given assignment.
struct PerceivedItem {
  ItemId id;
  EfficiencyKey efficiency;
  DualWeight objective_weight;
  DualWeight constraint_weight;
};

/// Items in the order Greedy visits them:
///   1. efficiency, non-increasing
///   2. objective-side weight, decreasing
///   3. follower items before leader items
///   4. lower index first
std::vector<PerceivedItem> greedy_order(const Instance& inst, const WeightAssignment& assignment);

/// Replays the follower's Greedy under `assignment`. Valid for the discrete
/// models (objective, constraint, constraint-simple).
PackingOutcome simulate(const Instance& inst, const WeightAssignment& assignment);

/// F(W1): total follower weight Greedy packs into residual capacity c - W1.
class FillTable {
 public:
  FillTable() = default;
  FillTable(std::int64_t capacity, std::vector<std::int64_t> fill)
      : capacity_(capacity), fill_(std::move(fill)) {}

  std::int64_t operator[](std::int64_t w1) const { return fill_[static_cast<std::size_t>(w1)]; }
  /// c̄ = c - W1 - F(W1)
  std::int64_t residual(std::int64_t w1) const { return capacity_ - w1 - (*this)[w1]; }
  std::int64_t capacity() const { return capacity_; }
  const std::vector<std::int64_t>& values() const { return fill_; }

  friend bool operator==(const FillTable&, const FillTable&) = default;

 private:
  std::int64_t capacity_ = 0;
  std::vector<std::int64_t> fill_;
};

/// One sort plus O(|F| c); the per-W1 loop fans out over `par.threads`.
FillTable fill_table(const Instance& inst, Parallelism par = {});

/// Greedy over the follower items alone with the given capacity.
std::int64_t follower_fill(const std::vector<std::int64_t>& sorted_desc, std::int64_t capacity);

}  // namespace stackprice
