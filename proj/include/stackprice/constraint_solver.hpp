#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stackprice/greedy.hpp"
#include "stackprice/instance.hpp"
#include "stackprice/parallel.hpp"

namespace stackprice {

/// Split of the leader items into k groups of near-equal size, k = round(sqrt|L|).
struct PhasePlan {
  std::size_t k = 0;
  std::vector<std::vector<std::size_t>> groups;

  static PhasePlan make(std::size_t leader_count);
};

struct ConstraintSolveResult {
  DualWeight value;                       // (c̄ - w', -|S1|), or (0, 0) when the leader abstains
  std::vector<std::size_t> before_set;    // S1
  std::optional<std::size_t> chosen_item; // w', inflated to exactly fill c̄
  std::int64_t w1 = 0;
  std::int64_t follower_fill = 0;
  std::int64_t residual = 0;              // c̄
  WeightAssignment assignment;
  std::uint64_t cell_updates = 0;         // reaching-DP relaxations, deterministic
};

/// One 1-D reaching pass over L \ {w'} per candidate w'. O(|L|^2 c).
ConstraintSolveResult solve_constraint_naive(const Instance& inst);

/// Phase-batched variant: the array over L \ L_i is built once per phase and
/// copied for each candidate of L_i. O(|L|^{3/2} c). Candidates within a
/// phase run on `par.threads` workers; the result is identical to the naive
/// solver's.
ConstraintSolveResult solve_constraint_batched(const Instance& inst, Parallelism par = {});

/// S1 at w - ε, the chosen item at exactly c̄, every other leader item at
/// max(c̄, w) + 1 so it neither fits nor jumps ahead of the follower block.
WeightAssignment reconstruct_constraint(const Instance& inst, const std::vector<std::size_t>& before,
                                        std::size_t chosen, std::int64_t residual);

}  // namespace stackprice
