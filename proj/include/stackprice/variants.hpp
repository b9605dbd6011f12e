#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "stackprice/instance.hpp"

namespace stackprice {

/// Exact nonnegative fraction num / den.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool equals(std::int64_t v) const { return num == v * den; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct ClosedFormResult {
  DualWeight value;
  WeightAssignment assignment;
  std::string narrative;  // which branch of the closed form applied
  // LpConstraint only: the finite inflation used as witness and its gain.
  std::optional<std::int64_t> finite_m;
  std::optional<Fraction> finite_gain;
  std::uint64_t operations = 0;  // item visits
};

/// Leader objective sum(w̃ x): items at w - ε while they fit, the first
/// non-fitting item at exactly the remaining capacity, later ones at c + 1.
/// Value min{c, sum_L w}.
ClosedFormResult solve_constraint_simple(const Instance& inst);

/// LP-relaxed follower. LpObjective: min(max{0, c - w(F)}, sum_L w).
/// LpConstraint: limit max{0, c - w(F)} with witness M = c * 10^6.
/// LpConstraintSimple: min{c, sum_L w}, ε disregarded.
ClosedFormResult solve_lp(const Instance& inst);

/// Follower packs fractionally in Greedy order (same order as the discrete
/// replay); the payoff is computed on base values, ε disregarded. At most one
/// item is split, so the payoff is integer part plus one fraction.
struct FractionalOutcome {
  Fraction leader_payoff;
  Fraction packed_leader_weight;
};

FractionalOutcome fractional_greedy(const Instance& inst, const WeightAssignment& assignment);

}  // namespace stackprice
