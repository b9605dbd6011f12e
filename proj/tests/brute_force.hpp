#pragma once

// Test-side reference computations, written without the library's solvers or
// oracle so that cross-checks are independent.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "stackprice/instance.hpp"

namespace brute {

inline std::int64_t greedy_fill(std::vector<std::int64_t> follower, std::int64_t cap) {
  std::sort(follower.rbegin(), follower.rend());
  std::int64_t used = 0;
  for (auto w : follower) {
    if (used + w <= cap) used += w;
  }
  return used;
}

// Every leader item goes before the follower block, after it, or nowhere: 3^n.
inline std::int64_t objective_optimum(const stackprice::Instance& inst) {
  const auto& L = inst.leader_weights;
  const std::size_t n = L.size();
  std::int64_t best = 0;
  std::vector<int> place(n, 0);
  std::function<void(std::size_t, std::int64_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t w1,
                                                                         std::int64_t w2) {
    if (w1 > inst.capacity) return;
    if (i == n) {
      const std::int64_t rest = inst.capacity - w1 - greedy_fill(inst.follower_weights, inst.capacity - w1);
      if (w2 <= rest) best = std::max(best, w2);
      return;
    }
    rec(i + 1, w1, w2);
    rec(i + 1, w1 + L[i], w2);
    rec(i + 1, w1, w2 + L[i]);
  };
  rec(0, 0, 0);
  return best;
}

// Any subset before the follower block, any remaining item inflated to the gap.
inline std::int64_t constraint_optimum(const stackprice::Instance& inst) {
  const auto& L = inst.leader_weights;
  const std::size_t n = L.size();
  std::int64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t w1 = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) w1 += L[j];
    }
    if (w1 > inst.capacity) continue;
    const std::int64_t gap = inst.capacity - w1 - greedy_fill(inst.follower_weights, inst.capacity - w1);
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1) && L[j] < gap) best = std::max(best, gap - L[j]);
    }
  }
  return best;
}

inline bool has_partition(const std::vector<std::int64_t>& a) {
  std::int64_t total = 0;
  for (auto x : a) total += x;
  if (total % 2) return false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.size()); ++mask) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask >> i & 1) s += a[i];
    }
    if (2 * s == total) return true;
  }
  return false;
}

}  // namespace brute
