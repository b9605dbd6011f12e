#include "stackprice/greedy.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "stackprice/error.hpp"

namespace stackprice {

namespace {

__extension__ typedef __int128 i128;

struct Wide {
  i128 base;
  i128 eps;
  friend auto operator<=>(const Wide&, const Wide&) = default;
};

Wide wide_mul(const DualWeight& a, const DualWeight& b) {
  return {i128(a.base()) * b.base(), i128(a.base()) * b.eps_coeff() + i128(a.eps_coeff()) * b.base()};
}

}  // namespace

Ordering compare_efficiency(const EfficiencyKey& a, const EfficiencyKey& b) {
  const Wide lhs = wide_mul(a.numerator, b.denominator);
  const Wide rhs = wide_mul(b.numerator, a.denominator);
  if (lhs < rhs) return Ordering::Less;
  if (lhs > rhs) return Ordering::Greater;
  return Ordering::Equal;
}

std::vector<PerceivedItem> greedy_order(const Instance& inst, const WeightAssignment& assignment) {
  const bool objective = inst.model == Model::ObjectiveControl;
  if (!is_discrete(inst.model)) {
    throw Error(ErrorCode::ModelMismatch,
                "Greedy replay needs a discrete model, got '" +
                    std::string(model_name(inst.model)) + "'");
  }
  if (assignment.weights.size() != inst.leader_weights.size()) {
    throw Error(ErrorCode::MissingAssignment,
                "assignment has " + std::to_string(assignment.weights.size()) +
                    " weights for " + std::to_string(inst.leader_weights.size()) +
                    " leader items");
  }

  std::vector<PerceivedItem> items;
  items.reserve(inst.item_count());
  for (std::size_t i = 0; i < inst.follower_weights.size(); ++i) {
    const DualWeight w{inst.follower_weights[i]};
    items.push_back({{Side::Follower, i}, {w, w}, w, w});
  }
  for (std::size_t j = 0; j < inst.leader_weights.size(); ++j) {
    const DualWeight w{inst.leader_weights[j]};
    const DualWeight revised = assignment.weights[j];
    if (revised < DualWeight{}) {
      throw Error(ErrorCode::NegativeAssignedWeight,
                  "assignment[" + std::to_string(j) + "] = " + revised.to_string() + " is negative");
    }
    if (objective) {
      items.push_back({{Side::Leader, j}, {revised, w}, revised, w});
    } else {
      if (revised == DualWeight{}) {
        throw Error(ErrorCode::ZeroConstraintWeightDivision,
                    "assignment[" + std::to_string(j) + "] is zero in a constraint model");
      }
      items.push_back({{Side::Leader, j}, {w, revised}, w, revised});
    }
  }

  std::stable_sort(items.begin(), items.end(), [](const PerceivedItem& a, const PerceivedItem& b) {
    switch (compare_efficiency(a.efficiency, b.efficiency)) {
      case Ordering::Greater: return true;
      case Ordering::Less: return false;
      case Ordering::Equal: break;
    }
    if (a.objective_weight != b.objective_weight) return a.objective_weight > b.objective_weight;
    if (a.id.side != b.id.side) return a.id.side == Side::Follower;
    return a.id.index < b.id.index;
  });
  return items;
}

PackingOutcome simulate(const Instance& inst, const WeightAssignment& assignment) {
  const auto order = greedy_order(inst, assignment);

  PackingOutcome out;
  out.trace.reserve(order.size());
  DualWeight residual{inst.capacity};
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const auto& item = order[rank];
    const bool fits = item.constraint_weight <= residual;
    if (fits) {
      residual -= item.constraint_weight;
      out.consumed += item.constraint_weight;
      out.packed.push_back(item.id);
      if (item.id.side == Side::Leader) {
        const DualWeight original{inst.leader_weights[item.id.index]};
        const DualWeight revised = assignment.weights[item.id.index];
        switch (inst.model) {
          case Model::ObjectiveControl: out.leader_payoff += original - revised; break;
          case Model::ConstraintControl: out.leader_payoff += revised - original; break;
          default: out.leader_payoff += revised; break;
        }
      }
    }
    out.trace.push_back({item.id, rank, fits, residual});
  }
  return out;
}

std::int64_t follower_fill(const std::vector<std::int64_t>& sorted_desc, std::int64_t capacity) {
  std::int64_t used = 0;
  for (auto w : sorted_desc) {
    if (w <= capacity - used) used += w;
  }
  return used;
}

FillTable fill_table(const Instance& inst, Parallelism par) {
  std::vector<std::int64_t> sorted = inst.follower_weights;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  const std::int64_t c = inst.capacity;
  std::vector<std::int64_t> fill(static_cast<std::size_t>(c) + 1);
  if (par.serial()) {
    for (std::int64_t w1 = 0; w1 <= c; ++w1) fill[w1] = follower_fill(sorted, c - w1);
  } else {
#pragma omp parallel for num_threads(par.threads) schedule(static)
    for (std::int64_t w1 = 0; w1 <= c; ++w1) fill[w1] = follower_fill(sorted, c - w1);
  }
  return {c, std::move(fill)};
}

}  // namespace stackprice
