#include "stackprice/oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "stackprice/error.hpp"
#include "stackprice/greedy.hpp"

namespace stackprice {

namespace {

constexpr std::int64_t kDpCapLimit = 10'000;

SubsetSum reaching_dp(const std::vector<std::int64_t>& weights,
                      const std::vector<std::size_t>& available, std::int64_t cap) {
  // parent[s]: first item that reached s; its predecessor was reached by an earlier item.
  std::vector<std::int32_t> parent(static_cast<std::size_t>(cap) + 1, -1);
  std::vector<char> reached(static_cast<std::size_t>(cap) + 1, 0);
  reached[0] = 1;
  for (auto j : available) {
    const std::int64_t w = weights[j];
    for (std::int64_t s = cap; s >= w; --s) {
      if (!reached[s] && reached[s - w]) {
        reached[s] = 1;
        parent[s] = static_cast<std::int32_t>(j);
      }
    }
  }
  SubsetSum out;
  for (std::int64_t s = cap; s > 0; --s) {
    if (reached[s]) {
      out.sum = s;
      break;
    }
  }
  for (std::int64_t s = out.sum; s > 0; s -= weights[parent[s]]) out.items.push_back(parent[s]);
  std::sort(out.items.begin(), out.items.end());
  return out;
}

SubsetSum meet_in_the_middle(const std::vector<std::int64_t>& weights,
                             const std::vector<std::size_t>& available, std::int64_t cap) {
  const std::size_t half = available.size() / 2;
  auto enumerate = [&](std::size_t from, std::size_t to) {
    std::vector<std::pair<std::int64_t, std::uint32_t>> sums;
    const std::size_t count = to - from;
    sums.reserve(std::size_t{1} << count);
    for (std::uint32_t mask = 0; mask < (1u << count); ++mask) {
      std::int64_t s = 0;
      for (std::size_t b = 0; b < count; ++b) {
        if (mask >> b & 1) s += weights[available[from + b]];
      }
      sums.emplace_back(s, mask);
    }
    return sums;
  };
  const auto left = enumerate(0, half);
  auto right = enumerate(half, available.size());
  std::sort(right.begin(), right.end());

  SubsetSum best;
  std::uint32_t best_left = 0, best_right = 0;
  for (const auto& [ls, lmask] : left) {
    if (ls > cap) continue;
    auto it = std::upper_bound(right.begin(), right.end(),
                               std::pair<std::int64_t, std::uint32_t>{cap - ls, ~0u});
    if (it == right.begin()) continue;
    --it;
    if (ls + it->first > best.sum) {
      best.sum = ls + it->first;
      best_left = lmask;
      best_right = it->second;
    }
  }
  for (std::size_t b = 0; b < half; ++b) {
    if (best_left >> b & 1) best.items.push_back(available[b]);
  }
  for (std::size_t b = 0; b + half < available.size(); ++b) {
    if (best_right >> b & 1) best.items.push_back(available[half + b]);
  }
  std::sort(best.items.begin(), best.items.end());
  return best;
}

void require_small(const Instance& inst, const OracleOptions& opts, Model model) {
  validate(inst);
  if (inst.model != model) {
    throw Error(ErrorCode::ModelMismatch, "oracle called with model '" +
                                              std::string(model_name(inst.model)) + "'");
  }
  if (inst.leader_weights.size() > opts.max_leader_items || inst.leader_weights.size() > 30) {
    throw Error(ErrorCode::InstanceTooLargeForOracle,
                std::to_string(inst.leader_weights.size()) + " leader items exceed the oracle limit of " +
                    std::to_string(opts.max_leader_items));
  }
}

std::vector<std::size_t> members(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (mask >> j & 1) out.push_back(j);
  }
  return out;
}

std::int64_t mask_sum(const std::vector<std::int64_t>& weights, std::uint64_t mask) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (mask >> j & 1) s += weights[j];
  }
  return s;
}

// Runs `body(mask)` for every mask, serially or across threads.
template <typename Body>
void for_each_mask(std::uint64_t count, Parallelism par, Body&& body) {
  if (par.serial()) {
    for (std::uint64_t mask = 0; mask < count; ++mask) body(mask);
  } else {
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for num_threads(par.threads) schedule(dynamic, 256)
    for (std::int64_t mask = 0; mask < n; ++mask) body(static_cast<std::uint64_t>(mask));
  }
}

}  // namespace

SubsetSum best_subset_sum(const std::vector<std::int64_t>& weights,
                          const std::vector<std::size_t>& available, std::int64_t cap) {
  if (cap <= 0) return {};
  if (cap <= kDpCapLimit) return reaching_dp(weights, available, cap);
  return meet_in_the_middle(weights, available, cap);
}

OracleResult oracle_objective(const Instance& inst, const OracleOptions& opts) {
  require_small(inst, opts, Model::ObjectiveControl);
  const auto& weights = inst.leader_weights;
  const std::size_t n = weights.size();
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::int64_t> followers = inst.follower_weights;
  std::sort(followers.begin(), followers.end(), std::greater<>());
  const std::int64_t c = inst.capacity;

  std::vector<std::int64_t> value(count, -1);
  for_each_mask(count, opts.parallelism, [&](std::uint64_t mask) {
    const std::int64_t w1 = mask_sum(weights, mask);
    if (w1 > c) return;
    const std::int64_t cbar = c - w1 - follower_fill(followers, c - w1);
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) rest.push_back(j);
    }
    value[mask] = best_subset_sum(weights, rest, cbar).sum;
  });

  OracleResult r;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (value[mask] < 0) continue;
    ++r.enumerated;
    if (value[mask] > value[best_mask]) best_mask = mask;
  }
  r.value = value[best_mask];
  r.before = members(best_mask, n);
  r.w1 = mask_sum(weights, best_mask);
  r.residual = c - r.w1 - follower_fill(followers, c - r.w1);
  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < n; ++j) {
    if (!(best_mask >> j & 1)) rest.push_back(j);
  }
  r.after = best_subset_sum(weights, rest, r.residual).items;
  return r;
}

OracleResult oracle_constraint(const Instance& inst, const OracleOptions& opts) {
  require_small(inst, opts, Model::ConstraintControl);
  const auto& weights = inst.leader_weights;
  const std::size_t n = weights.size();
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::int64_t> followers = inst.follower_weights;
  std::sort(followers.begin(), followers.end(), std::greater<>());
  const std::int64_t c = inst.capacity;

  struct Best {
    std::int64_t gain = -1;       // -1: S1 does not fit
    std::int64_t lightest_gain = 0;
    std::int32_t chosen = -1;
    std::uint32_t pairs = 0;
  };
  std::vector<Best> per_mask(count);
  for_each_mask(count, opts.parallelism, [&](std::uint64_t mask) {
    const std::int64_t w1 = mask_sum(weights, mask);
    if (w1 > c) return;
    const std::int64_t cbar = c - w1 - follower_fill(followers, c - w1);
    Best b;
    b.gain = 0;
    std::int64_t lightest = -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) continue;
      ++b.pairs;
      if (lightest < 0 || weights[j] < lightest) lightest = weights[j];
      const std::int64_t gain = cbar - weights[j];
      if (gain > b.gain) {
        b.gain = gain;
        b.chosen = static_cast<std::int32_t>(j);
      }
    }
    b.lightest_gain = lightest >= 0 ? std::max<std::int64_t>(0, cbar - lightest) : 0;
    per_mask[mask] = b;
  });

  OracleResult r;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    r.enumerated += per_mask[mask].pairs;
    if (per_mask[mask].gain > per_mask[best_mask].gain) best_mask = mask;
  }
  r.value = per_mask[best_mask].gain;
  if (r.value > 0) {
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      if (per_mask[mask].gain == r.value && per_mask[mask].lightest_gain != r.value) {
        ++r.structure_violations;
      }
    }
    r.before = members(best_mask, n);
    r.chosen = static_cast<std::size_t>(per_mask[best_mask].chosen);
    r.w1 = mask_sum(weights, best_mask);
  }
  r.residual = c - r.w1 - follower_fill(followers, c - r.w1);
  return r;
}

}  // namespace stackprice
