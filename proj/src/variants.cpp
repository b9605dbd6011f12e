#include "stackprice/variants.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stackprice/error.hpp"
#include "stackprice/greedy.hpp"

namespace stackprice {

namespace {

constexpr std::int64_t kWitnessScale = 1'000'000;

Model discrete_counterpart(Model m) {
  switch (m) {
    case Model::LpObjective: return Model::ObjectiveControl;
    case Model::LpConstraint: return Model::ConstraintControl;
    case Model::LpConstraintSimple: return Model::ConstraintSimple;
    default: return m;
  }
}

Fraction make_fraction(std::int64_t whole, std::int64_t num, std::int64_t den) {
  if (den == 0) return {whole, 1};
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {checked::add(checked::mul(whole, den), num), den};
}

}  // namespace

ClosedFormResult solve_constraint_simple(const Instance& inst) {
  validate(inst);
  if (inst.model != Model::ConstraintSimple) {
    throw Error(ErrorCode::ModelMismatch, "needs model 'constraint-simple', got '" +
                                              std::string(model_name(inst.model)) + "'");
  }
  const std::int64_t c = inst.capacity;
  ClosedFormResult r;
  std::int64_t used = 0;
  std::int64_t discounted = 0;
  bool cut = false;
  for (auto w : inst.leader_weights) {
    ++r.operations;
    if (cut) {
      r.assignment.weights.emplace_back(checked::add(c, 1));
    } else if (w <= c - used) {
      r.assignment.weights.emplace_back(w, -1);
      used += w;
      ++discounted;
    } else {
      cut = true;
      const std::int64_t rest = c - used;
      // Nothing left to fill: park the item beyond the capacity instead of pricing it at 0.
      r.assignment.weights.emplace_back(rest > 0 ? rest : checked::add(c, 1));
      used += rest;
    }
  }
  r.value = DualWeight{used, -discounted};
  r.narrative = cut ? "capacity-limited" : "weight-limited";
  return r;
}

ClosedFormResult solve_lp(const Instance& inst) {
  validate(inst);
  const std::int64_t c = inst.capacity;
  const std::int64_t follower_total = total_follower_weight(inst);
  const std::int64_t leader_total = total_leader_weight(inst);
  const std::int64_t open = std::max<std::int64_t>(0, c - follower_total);
  const std::size_t n = inst.leader_weights.size();

  ClosedFormResult r;
  r.operations = inst.item_count();
  switch (inst.model) {
    case Model::LpObjective: {
      // Every leader item at 0: behind all follower items, full gain per unit packed.
      r.assignment = WeightAssignment::zeros(n);
      r.value = DualWeight{std::min(open, leader_total)};
      if (open == 0) {
        r.narrative = "follower-fills-capacity";
      } else if (leader_total >= open) {
        r.narrative = "residual-capacity:max-form";
      } else {
        r.narrative = "leader-mass-capped:max-form";
      }
      return r;
    }
    case Model::LpConstraint: {
      if (open == 0 || n == 0) {
        r.assignment = WeightAssignment::identity(inst);
        r.value = DualWeight{};
        r.narrative = open == 0 ? "follower-fills-capacity" : "no-leader-items";
        return r;
      }
      const auto lightest = static_cast<std::size_t>(
          std::min_element(inst.leader_weights.begin(), inst.leader_weights.end()) -
          inst.leader_weights.begin());
      const std::int64_t m = checked::mul(c, kWitnessScale);
      r.assignment.weights.reserve(n);
      for (std::size_t j = 0; j < n; ++j) {
        // Efficiency w / (M w + 1) < 1 / M <= w' / M keeps j behind the lightest item.
        r.assignment.weights.emplace_back(
            j == lightest ? m : checked::add(checked::mul(m, inst.leader_weights[j]), 1));
      }
      const std::int64_t w = inst.leader_weights[lightest];
      r.value = DualWeight{open};
      r.finite_m = m;
      r.finite_gain = make_fraction(0, checked::mul(m - w, open), m);
      r.narrative = "limit-as-M-grows:max-form";
      return r;
    }
    case Model::LpConstraintSimple: {
      r.assignment.weights.reserve(n);
      for (auto w : inst.leader_weights) r.assignment.weights.emplace_back(w, -1);
      r.value = DualWeight{std::min(c, leader_total)};
      r.narrative = leader_total > c ? "capacity-limited:eps-disregarded" : "weight-limited:eps-disregarded";
      return r;
    }
    default:
      throw Error(ErrorCode::ModelMismatch, "solve_lp needs an LP model, got '" +
                                                std::string(model_name(inst.model)) + "'");
  }
}

FractionalOutcome fractional_greedy(const Instance& inst, const WeightAssignment& assignment) {
  Instance discrete = inst;
  discrete.model = discrete_counterpart(inst.model);
  const auto order = greedy_order(discrete, assignment);

  std::int64_t room = inst.capacity;
  std::int64_t payoff_whole = 0, payoff_num = 0, payoff_den = 0;
  std::int64_t mass_whole = 0, mass_num = 0, mass_den = 0;
  for (const auto& item : order) {
    if (room == 0 && item.constraint_weight.base() > 0) break;
    const std::int64_t size = item.constraint_weight.base();
    const bool whole = size <= room;
    if (item.id.side == Side::Leader) {
      const std::int64_t w = inst.leader_weights[item.id.index];
      const std::int64_t revised = assignment.weights[item.id.index].base();
      std::int64_t gain = 0;
      switch (discrete.model) {
        case Model::ObjectiveControl: gain = w - revised; break;
        case Model::ConstraintControl: gain = revised - w; break;
        default: gain = revised; break;
      }
      if (whole) {
        payoff_whole = checked::add(payoff_whole, gain);
        mass_whole = checked::add(mass_whole, w);
      } else {
        // x = room / size
        payoff_num = checked::mul(gain, room);
        payoff_den = size;
        mass_num = checked::mul(w, room);
        mass_den = size;
      }
    }
    room = whole ? room - size : 0;
  }
  return {make_fraction(payoff_whole, payoff_num, payoff_den),
          make_fraction(mass_whole, mass_num, mass_den)};
}

}  // namespace stackprice
