#include "stackprice/constraint_solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <tuple>

#include "stackprice/error.hpp"

namespace stackprice {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// cnt[W] = fewest items summing to exactly W.
using CountArray = std::vector<std::uint32_t>;

CountArray empty_counts(std::int64_t c) {
  CountArray cnt(static_cast<std::size_t>(c) + 1, kUnreached);
  cnt[0] = 0;
  return cnt;
}

std::uint64_t add_item(CountArray& cnt, std::int64_t w) {
  const auto c = static_cast<std::int64_t>(cnt.size()) - 1;
  if (w > c) return 0;
  for (std::int64_t s = c; s >= w; --s) {
    const std::uint32_t from = cnt[s - w];
    if (from != kUnreached && from + 1 < cnt[s]) cnt[s] = from + 1;
  }
  return static_cast<std::uint64_t>(c - w + 1);
}

struct Candidate {
  std::int64_t gain = 0;
  std::uint32_t count = 0;
  std::int64_t chosen_weight = 0;
  std::int64_t w1 = 0;
  std::size_t chosen = 0;

  // Larger gain, then fewer ε-priced items, then smaller w', smaller W1, lower index.
  bool better_than(const Candidate& o) const {
    return std::tuple(-gain, count, chosen_weight, w1, chosen) <
           std::tuple(-o.gain, o.count, o.chosen_weight, o.w1, o.chosen);
  }
};

std::optional<Candidate> evaluate(const CountArray& cnt, const FillTable& fill, std::int64_t chosen_w,
                                  std::size_t chosen) {
  std::optional<Candidate> best;
  for (std::int64_t w1 = 0; w1 < static_cast<std::int64_t>(cnt.size()); ++w1) {
    if (cnt[w1] == kUnreached) continue;
    const std::int64_t cbar = fill.residual(w1);
    if (cbar <= chosen_w) continue;
    Candidate cand{cbar - chosen_w, cnt[w1], chosen_w, w1, chosen};
    if (!best || cand.better_than(*best)) best = cand;
  }
  return best;
}

void keep_better(std::optional<Candidate>& best, const std::optional<Candidate>& cand) {
  if (cand && (!best || cand->better_than(*best))) best = cand;
}

// Minimum-cardinality subset of L \ {skip} with sum exactly `target`.
std::vector<std::size_t> min_subset(const std::vector<std::int64_t>& weights, std::size_t skip,
                                    std::int64_t target) {
  const auto width = static_cast<std::size_t>(target) + 1;
  const std::size_t n = weights.size();
  std::vector<std::vector<bool>> take(n, std::vector<bool>(width, false));
  CountArray cnt = empty_counts(target);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == skip || weights[j] > target) continue;
    const std::int64_t w = weights[j];
    for (std::int64_t s = target; s >= w; --s) {
      const std::uint32_t from = cnt[s - w];
      if (from != kUnreached && from + 1 < cnt[s]) {
        cnt[s] = from + 1;
        take[j][s] = true;
      }
    }
  }
  if (cnt[target] == kUnreached) {
    throw Error(ErrorCode::InvalidDecomposition, "W1 = " + std::to_string(target) + " is not reachable");
  }
  std::vector<std::size_t> out;
  std::int64_t s = target;
  for (std::size_t j = n; j-- > 0 && s > 0;) {
    if (take[j][s]) {
      out.push_back(j);
      s -= weights[j];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConstraintSolveResult finish(const Instance& inst, const FillTable& fill,
                             const std::optional<Candidate>& best, std::uint64_t updates) {
  ConstraintSolveResult r;
  r.cell_updates = updates;
  if (!best) {
    r.value = DualWeight{};
    r.assignment = WeightAssignment::identity(inst);
    r.follower_fill = fill[0];
    r.residual = fill.residual(0);
    return r;
  }
  r.before_set = min_subset(inst.leader_weights, best->chosen, best->w1);
  r.chosen_item = best->chosen;
  r.w1 = best->w1;
  r.follower_fill = fill[best->w1];
  r.residual = fill.residual(best->w1);
  r.value = DualWeight{best->gain, -static_cast<std::int64_t>(r.before_set.size())};
  r.assignment = reconstruct_constraint(inst, r.before_set, best->chosen, r.residual);
  return r;
}

void require_constraint(const Instance& inst) {
  validate(inst);
  if (inst.model != Model::ConstraintControl) {
    throw Error(ErrorCode::ModelMismatch, "constraint solver needs model 'constraint', got '" +
                                              std::string(model_name(inst.model)) + "'");
  }
}

}  // namespace

PhasePlan PhasePlan::make(std::size_t leader_count) {
  PhasePlan plan;
  if (leader_count == 0) return plan;
  auto k = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(leader_count))));
  plan.k = std::clamp<std::size_t>(k, 1, leader_count);
  const std::size_t small = leader_count / plan.k;
  const std::size_t big_groups = leader_count % plan.k;
  std::size_t next = 0;
  for (std::size_t g = 0; g < plan.k; ++g) {
    const std::size_t size = small + (g < big_groups ? 1 : 0);
    auto& group = plan.groups.emplace_back();
    for (std::size_t i = 0; i < size; ++i) group.push_back(next++);
  }
  return plan;
}

WeightAssignment reconstruct_constraint(const Instance& inst, const std::vector<std::size_t>& before,
                                        std::size_t chosen, std::int64_t residual) {
  const auto& weights = inst.leader_weights;
  if (chosen >= weights.size()) throw Error(ErrorCode::InvalidDecomposition, "chosen item out of range");
  if (weights[chosen] >= residual) {
    throw Error(ErrorCode::ChosenItemTooLarge, "w' = " + std::to_string(weights[chosen]) +
                                                   " does not fit below c̄ = " + std::to_string(residual));
  }
  WeightAssignment a;
  a.weights.reserve(weights.size());
  for (std::size_t j = 0; j < weights.size(); ++j) {
    a.weights.emplace_back(checked::add(std::max(residual, weights[j]), 1));
  }
  std::int64_t w1 = 0;
  for (auto j : before) {
    if (j >= weights.size() || j == chosen) {
      throw Error(ErrorCode::InvalidDecomposition, "S1 index out of range or equal to w'");
    }
    a.weights[j] = DualWeight{weights[j], -1};
    w1 = checked::add(w1, weights[j]);
  }
  if (w1 > inst.capacity) throw Error(ErrorCode::InvalidDecomposition, "S1 exceeds the capacity");
  std::vector<std::int64_t> followers = inst.follower_weights;
  std::sort(followers.begin(), followers.end(), std::greater<>());
  if (inst.capacity - w1 - follower_fill(followers, inst.capacity - w1) != residual) {
    throw Error(ErrorCode::InvalidDecomposition,
                "c̄ = " + std::to_string(residual) + " does not match c - W1 - F(W1)");
  }
  a.weights[chosen] = DualWeight{residual};
  return a;
}

ConstraintSolveResult solve_constraint_naive(const Instance& inst) {
  require_constraint(inst);
  const FillTable fill = fill_table(inst);
  const auto& weights = inst.leader_weights;

  std::optional<Candidate> best;
  std::uint64_t updates = 0;
  for (std::size_t chosen = 0; chosen < weights.size(); ++chosen) {
    CountArray cnt = empty_counts(inst.capacity);
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if (j != chosen) updates += add_item(cnt, weights[j]);
    }
    keep_better(best, evaluate(cnt, fill, weights[chosen], chosen));
  }
  return finish(inst, fill, best, updates);
}

ConstraintSolveResult solve_constraint_batched(const Instance& inst, Parallelism par) {
  require_constraint(inst);
  const FillTable fill = fill_table(inst, par);
  const auto& weights = inst.leader_weights;
  const PhasePlan plan = PhasePlan::make(weights.size());

  std::optional<Candidate> best;
  std::uint64_t updates = 0;
  std::vector<char> in_group(weights.size(), 0);
  for (const auto& group : plan.groups) {
    for (auto j : group) in_group[j] = 1;
    CountArray frozen = empty_counts(inst.capacity);
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if (!in_group[j]) updates += add_item(frozen, weights[j]);
    }

    const auto m = static_cast<std::int64_t>(group.size());
    std::vector<std::optional<Candidate>> found(group.size());
    std::vector<std::uint64_t> counts(group.size(), 0);
    auto run = [&](std::int64_t slot) {
      const std::size_t chosen = group[slot];
      CountArray cnt = frozen;
      for (auto j : group) {
        if (j != chosen) counts[slot] += add_item(cnt, weights[j]);
      }
      found[slot] = evaluate(cnt, fill, weights[chosen], chosen);
    };
    if (par.serial()) {
      for (std::int64_t s = 0; s < m; ++s) run(s);
    } else {
#pragma omp parallel for num_threads(par.threads) schedule(dynamic, 1)
      for (std::int64_t s = 0; s < m; ++s) run(s);
    }
    for (std::size_t s = 0; s < group.size(); ++s) {
      keep_better(best, found[s]);
      updates += counts[s];
    }
    for (auto j : group) in_group[j] = 0;
  }
  return finish(inst, fill, best, updates);
}

}  // namespace stackprice
