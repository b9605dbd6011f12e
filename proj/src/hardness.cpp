#include "stackprice/hardness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "stackprice/error.hpp"
#include "stackprice/oracle.hpp"

namespace stackprice {

namespace {

constexpr std::size_t kMaxPartitionNumbers = 24;
constexpr std::int64_t kDpSumLimit = std::int64_t{1} << 24;

void check_size(const PartitionInstance& p) {
  if (p.numbers.size() > kMaxPartitionNumbers) {
    throw Error(ErrorCode::PartitionTooLarge,
                std::to_string(p.numbers.size()) + " numbers exceed the limit of 24");
  }
}

void self_check(GadgetBundle& g, std::size_t numbers, const GadgetOptions& opts) {
  if (numbers > opts.self_check_max_numbers) return;
  const OracleResult o = g.instance.model == Model::ObjectiveControl ? oracle_objective(g.instance)
                                                                     : oracle_constraint(g.instance);
  g.provenance.oracle_optimum = o.value;
  const bool holds = g.provenance.prediction == PredictionKind::Exact
                         ? o.value == g.provenance.predicted_optimum
                         : o.value <= g.provenance.predicted_optimum;
  if (!holds) {
    throw Error(ErrorCode::PredictionRefuted,
                std::string(g.instance.model == Model::ObjectiveControl ? "objective" : "constraint") +
                    " gadget predicts " +
                    (g.provenance.prediction == PredictionKind::Exact ? "" : "at most ") +
                    std::to_string(g.provenance.predicted_optimum) + " but the oracle finds " +
                    std::to_string(o.value));
  }
  g.provenance.verified = true;
}

}  // namespace

PartitionInstance PartitionInstance::make(std::vector<std::int64_t> numbers) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    if (numbers[i] < 1) {
      throw Error(ErrorCode::ZeroOrNegativeWeight,
                  "partition number [" + std::to_string(i) + "] must be >= 1");
    }
    total = checked::add(total, numbers[i]);
  }
  if (numbers.empty()) throw Error(ErrorCode::EmptyInstance, "partition instance has no numbers");
  if (total % 2 != 0) {
    throw Error(ErrorCode::OddTotalSum, "numbers sum to odd total " + std::to_string(total));
  }
  PartitionInstance p;
  p.numbers = std::move(numbers);
  p.half_sum = total / 2;
  return p;
}

PartitionAnswer decide_partition(const PartitionInstance& p) {
  check_size(p);
  const std::size_t m = p.numbers.size();
  const std::int64_t b = p.half_sum;
  PartitionAnswer ans;

  if (b <= kDpSumLimit) {
    // suffix[i][s]: numbers i..m-1 reach s.
    std::vector<std::vector<char>> suffix(m + 1, std::vector<char>(static_cast<std::size_t>(b) + 1, 0));
    suffix[m][0] = 1;
    for (std::size_t i = m; i-- > 0;) {
      for (std::int64_t s = 0; s <= b; ++s) {
        suffix[i][s] = suffix[i + 1][s] || (s >= p.numbers[i] && suffix[i + 1][s - p.numbers[i]]);
      }
    }
    if (!suffix[0][b]) return ans;
    ans.yes = true;
    std::int64_t need = b;
    for (std::size_t i = 0; i < m && need > 0; ++i) {
      if (p.numbers[i] <= need && suffix[i + 1][need - p.numbers[i]]) {
        ans.certificate.push_back(i);
        need -= p.numbers[i];
      }
    }
    return ans;
  }

  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) s += p.numbers[i];
    }
    if (s == b) {
      ans.yes = true;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1) ans.certificate.push_back(i);
      }
      return ans;
    }
  }
  return ans;
}

std::int64_t default_big_m(const PartitionInstance& p) {
  return checked::add(checked::mul(10, p.half_sum), 1);
}

GadgetBundle gen_objective_gadget(const PartitionInstance& p, std::int64_t big_m,
                                  const GadgetOptions& opts) {
  check_size(p);
  const std::int64_t b = p.half_sum;
  if (big_m <= checked::mul(2, b)) {
    throw Error(ErrorCode::MTooSmall,
                "M = " + std::to_string(big_m) + " must exceed 2b = " + std::to_string(2 * b));
  }
  GadgetBundle g;
  g.instance.model = Model::ObjectiveControl;
  g.instance.leader_weights = p.numbers;
  g.instance.leader_weights.push_back(big_m);
  g.instance.follower_weights = {checked::add(big_m, 1)};
  g.instance.capacity = checked::add(big_m, b);
  validate(g.instance);

  const PartitionAnswer ans = decide_partition(p);
  auto& pv = g.provenance;
  pv.theorem = 2;
  pv.partition = p.numbers;
  pv.half_sum = b;
  pv.big_m = big_m;
  pv.partition_yes = ans.yes;
  pv.prediction = ans.yes ? PredictionKind::Exact : PredictionKind::AtMost;
  pv.predicted_optimum = ans.yes ? big_m : b - 1;
  self_check(g, p.numbers.size(), opts);
  return g;
}

SymbolicConstraintGadget constraint_gadget_symbolic(const PartitionInstance& p) {
  check_size(p);
  SymbolicConstraintGadget g;
  std::int64_t doubled = 0;
  for (auto a : p.numbers) {
    g.leader.emplace_back(checked::mul(2, a));
    doubled = checked::add(doubled, checked::mul(2, a));
  }
  g.leader.push_back(DualWeight::epsilon());
  // Smallest k with 2^k > doubled + ε, i.e. 2^k > doubled.
  int k = 0;
  while ((std::int64_t{1} << k) <= doubled) {
    ++k;
    if (k >= 61) throw Error(ErrorCode::Overflow, "gadget needs 2^k beyond 64-bit range");
  }
  g.k = k;
  const std::int64_t pow_k = std::int64_t{1} << k;
  g.leader.emplace_back(pow_k - 2 * p.half_sum);
  for (int i = 1; i <= k - 1; ++i) g.follower.push_back(std::int64_t{1} << i);
  g.follower.push_back(3);
  g.follower.push_back(pow_k + 2);
  g.capacity = 2 * pow_k + 3;

  std::int64_t a_max = *std::max_element(p.numbers.begin(), p.numbers.end());
  const double bound = std::ceil(std::log2(2.0 * static_cast<double>(p.numbers.size()) *
                                               static_cast<double>(a_max) + 2.0)) + 1.0;
  if (static_cast<double>(k) > bound) {
    throw Error(ErrorCode::Overflow, "gadget exponent k = " + std::to_string(k) +
                                         " exceeds its logarithmic bound");
  }
  return g;
}

GadgetBundle gen_constraint_gadget(const PartitionInstance& p, std::int64_t scale,
                                   const GadgetOptions& opts) {
  if (scale < 2) {
    throw Error(ErrorCode::ScaleTooSmall, "scale = " + std::to_string(scale) + " must be >= 2");
  }
  const SymbolicConstraintGadget sym = constraint_gadget_symbolic(p);
  GadgetBundle g;
  g.instance.model = Model::ConstraintControl;
  for (const auto& w : sym.leader) {
    g.instance.leader_weights.push_back(w.base() == 0 ? 1 : checked::mul(w.base(), scale));
  }
  for (auto v : sym.follower) g.instance.follower_weights.push_back(checked::mul(v, scale));
  g.instance.capacity = checked::mul(sym.capacity, scale);
  validate(g.instance);

  const PartitionAnswer ans = decide_partition(p);
  auto& pv = g.provenance;
  pv.theorem = 4;
  pv.partition = p.numbers;
  pv.half_sum = p.half_sum;
  pv.k = sym.k;
  pv.scale = scale;
  pv.partition_yes = ans.yes;
  pv.prediction = PredictionKind::Exact;
  pv.predicted_optimum = ans.yes ? scale - 1 : 0;
  self_check(g, p.numbers.size(), opts);
  return g;
}

nlohmann::json GadgetProvenance::to_json() const {
  nlohmann::json j{{"theorem", theorem},
                   {"partition", partition},
                   {"half_sum", half_sum},
                   {"partition_answer", partition_yes ? "yes" : "no"},
                   {"prediction", prediction == PredictionKind::Exact ? "exact" : "at-most"},
                   {"predicted_optimum", predicted_optimum},
                   {"verified", verified}};
  if (big_m) j["M"] = *big_m;
  if (k) j["k"] = *k;
  if (scale) j["scale"] = *scale;
  if (oracle_optimum) j["oracle_optimum"] = *oracle_optimum;
  return j;
}

}  // namespace stackprice
