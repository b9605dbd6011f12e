#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stackprice/greedy.hpp"
#include "stackprice/instance.hpp"
#include "stackprice/parallel.hpp"

namespace stackprice {

/// Two disjoint index sets of leader items: placed before the follower block
/// and packed after it.
struct Decomposition {
  std::vector<std::size_t> before;
  std::vector<std::size_t> after;
};

/// r(W1, W2) = 1 iff two disjoint leader subsets have sums W1 and W2.
///
/// Rows are bitsets over W2. Each newly reached cell remembers the first item
/// (and side) that reached it, which is enough to walk back one witness.
class ReachArray {
 public:
  static ReachArray build(const std::vector<std::int64_t>& weights, std::int64_t capacity);

  std::int64_t capacity() const { return capacity_; }
  bool reachable(std::int64_t w1, std::int64_t w2) const;
  bool row_empty(std::int64_t w1) const;
  /// Largest W2 <= limit with r(w1, W2) = 1.
  std::optional<std::int64_t> max_in_row(std::int64_t w1, std::int64_t limit) const;
  Decomposition witness(std::int64_t w1, std::int64_t w2) const;

  /// Cells examined by the reaching passes: (c + 1)^2 per item.
  std::uint64_t cell_updates() const { return cell_updates_; }

  /// Bits the array occupies: one reach bit plus a 32-bit annotation per cell.
  static std::uint64_t storage_bits(std::int64_t capacity);

 private:
  ReachArray(std::int64_t capacity);

  std::uint64_t* row(std::int64_t w1) { return bits_.data() + w1 * words_; }
  const std::uint64_t* row(std::int64_t w1) const { return bits_.data() + w1 * words_; }
  std::size_t cell(std::int64_t w1, std::int64_t w2) const {
    return static_cast<std::size_t>(w1) * static_cast<std::size_t>(capacity_ + 1) +
           static_cast<std::size_t>(w2);
  }

  std::int64_t capacity_;
  std::vector<std::int64_t> weights_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::int32_t> annotation_;  // item * 2 + (0 before | 1 after), -1 unset
  std::uint64_t cell_updates_ = 0;
};

struct ObjectiveOptions {
  std::uint64_t memory_budget_bits = std::uint64_t{1} << 33;
  Parallelism parallelism;
};

struct ObjectiveSolveResult {
  DualWeight value;
  std::vector<std::size_t> before_set;  // S1
  std::int64_t w1 = 0;
  std::int64_t follower_fill = 0;       // F(W1)
  std::vector<std::size_t> after_set;   // leader items Greedy packs after the follower block
  std::int64_t w2 = 0;
  std::int64_t residual = 0;            // c̄
  WeightAssignment assignment;
  std::uint64_t cell_updates = 0;
};

ObjectiveSolveResult solve_objective(const Instance& inst, const ObjectiveOptions& opts = {});

/// Prices S1 at w + ε (ahead of every follower item) and the remaining items
/// at 0 (behind them). Items of S2 are moved to ε, one at a time in index
/// order, until the zero-priced tail packs at least sum(S2); every item kept
/// at 0 saves one ε of leader loss.
WeightAssignment reconstruct_objective(const Instance& inst, std::int64_t w1,
                                       const Decomposition& decomposition);

}  // namespace stackprice
