#include "stackprice/objective_solver.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <string>

#include "stackprice/error.hpp"

namespace stackprice {

namespace {

constexpr std::size_t kWordBits = 64;

// dst = src << shift, truncated to `words` words.
void shift_up(const std::uint64_t* src, std::uint64_t* dst, std::size_t words, std::int64_t shift) {
  const std::size_t word_shift = static_cast<std::size_t>(shift) / kWordBits;
  const unsigned bit_shift = static_cast<unsigned>(shift % kWordBits);
  for (std::size_t k = words; k-- > 0;) {
    std::uint64_t v = 0;
    if (k >= word_shift) {
      v = src[k - word_shift] << bit_shift;
      if (bit_shift != 0 && k >= word_shift + 1) v |= src[k - word_shift - 1] >> (kWordBits - bit_shift);
    }
    dst[k] = v;
  }
}

}  // namespace

ReachArray::ReachArray(std::int64_t capacity)
    : capacity_(capacity),
      words_((static_cast<std::size_t>(capacity) + 1 + kWordBits - 1) / kWordBits),
      bits_(words_ * (static_cast<std::size_t>(capacity) + 1), 0),
      annotation_((static_cast<std::size_t>(capacity) + 1) * (static_cast<std::size_t>(capacity) + 1), -1) {}

std::uint64_t ReachArray::storage_bits(std::int64_t capacity) {
  const auto side = static_cast<std::uint64_t>(capacity) + 1;
  std::uint64_t square = 0, bits = 0;
  if (__builtin_mul_overflow(side, side, &square) || __builtin_mul_overflow(square, 33u, &bits)) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return bits;
}

ReachArray ReachArray::build(const std::vector<std::int64_t>& weights, std::int64_t capacity) {
  ReachArray r(capacity);
  r.weights_ = weights;
  const std::size_t words = r.words_;
  const std::size_t tail_bits = (static_cast<std::size_t>(capacity) + 1) % kWordBits;
  const std::uint64_t tail_mask = tail_bits == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail_bits) - 1;
  const auto side = static_cast<std::uint64_t>(capacity) + 1;

  r.row(0)[0] = 1;
  std::vector<std::uint64_t> after(words);
  for (std::size_t item = 0; item < weights.size(); ++item) {
    const std::int64_t w = weights[item];
    r.cell_updates_ += side * side;
    if (w > capacity) continue;
    // Descending rows: row a - w is still the pre-item layer when row a reads it.
    for (std::int64_t a = capacity; a >= 0; --a) {
      std::uint64_t* cur = r.row(a);
      const std::uint64_t* before = a >= w ? r.row(a - w) : nullptr;
      shift_up(cur, after.data(), words, w);
      after[words - 1] &= tail_mask;
      for (std::size_t k = 0; k < words; ++k) {
        const std::uint64_t from_before = before ? before[k] & ~cur[k] : 0;
        const std::uint64_t from_after = after[k] & ~cur[k] & ~from_before;
        if ((from_before | from_after) == 0) continue;
        for (std::uint64_t m = from_before; m != 0; m &= m - 1) {
          const auto b = static_cast<std::int64_t>(k * kWordBits + std::countr_zero(m));
          r.annotation_[r.cell(a, b)] = static_cast<std::int32_t>(item * 2);
        }
        for (std::uint64_t m = from_after; m != 0; m &= m - 1) {
          const auto b = static_cast<std::int64_t>(k * kWordBits + std::countr_zero(m));
          r.annotation_[r.cell(a, b)] = static_cast<std::int32_t>(item * 2 + 1);
        }
        cur[k] |= from_before | from_after;
      }
    }
  }
  return r;
}

bool ReachArray::reachable(std::int64_t w1, std::int64_t w2) const {
  if (w1 < 0 || w2 < 0 || w1 > capacity_ || w2 > capacity_) return false;
  return (row(w1)[w2 / kWordBits] >> (w2 % kWordBits)) & 1;
}

bool ReachArray::row_empty(std::int64_t w1) const {
  const auto* r = row(w1);
  return std::all_of(r, r + words_, [](std::uint64_t v) { return v == 0; });
}

std::optional<std::int64_t> ReachArray::max_in_row(std::int64_t w1, std::int64_t limit) const {
  if (limit < 0) return std::nullopt;
  limit = std::min(limit, capacity_);
  const auto* r = row(w1);
  std::size_t k = static_cast<std::size_t>(limit) / kWordBits;
  const unsigned top = static_cast<unsigned>(limit % kWordBits);
  std::uint64_t v = r[k];
  if (top != kWordBits - 1) v &= (std::uint64_t{1} << (top + 1)) - 1;
  while (true) {
    if (v != 0) return static_cast<std::int64_t>(k * kWordBits + (kWordBits - 1 - std::countl_zero(v)));
    if (k == 0) return std::nullopt;
    v = r[--k];
  }
}

Decomposition ReachArray::witness(std::int64_t w1, std::int64_t w2) const {
  if (!reachable(w1, w2)) {
    throw Error(ErrorCode::InvalidDecomposition,
                "cell (" + std::to_string(w1) + ", " + std::to_string(w2) + ") is not reachable");
  }
  Decomposition d;
  // First-writer-wins annotations: each predecessor cell was reached by a
  // strictly earlier item, so the walk never reuses an item.
  while (w1 != 0 || w2 != 0) {
    const std::int32_t ann = annotation_[cell(w1, w2)];
    const auto item = static_cast<std::size_t>(ann / 2);
    if (ann % 2 == 1) {
      d.after.push_back(item);
      w2 -= weights_[item];
    } else {
      d.before.push_back(item);
      w1 -= weights_[item];
    }
  }
  std::sort(d.before.begin(), d.before.end());
  std::sort(d.after.begin(), d.after.end());
  return d;
}

WeightAssignment reconstruct_objective(const Instance& inst, std::int64_t w1,
                                       const Decomposition& decomposition) {
  const auto& weights = inst.leader_weights;
  const std::size_t n = weights.size();
  std::vector<char> in_before(n, 0), in_after(n, 0);
  std::int64_t before_sum = 0, after_sum = 0;
  for (auto j : decomposition.before) {
    if (j >= n || in_before[j]) throw Error(ErrorCode::InvalidDecomposition, "bad S1 index");
    in_before[j] = 1;
    before_sum = checked::add(before_sum, weights[j]);
  }
  for (auto j : decomposition.after) {
    if (j >= n || in_before[j] || in_after[j]) {
      throw Error(ErrorCode::InvalidDecomposition, "S2 index out of range or not disjoint from S1");
    }
    in_after[j] = 1;
    after_sum = checked::add(after_sum, weights[j]);
  }
  if (before_sum != w1 || w1 > inst.capacity) {
    throw Error(ErrorCode::InvalidDecomposition,
                "S1 sums to " + std::to_string(before_sum) + ", expected W1 = " + std::to_string(w1));
  }
  std::vector<std::int64_t> followers = inst.follower_weights;
  std::sort(followers.begin(), followers.end(), std::greater<>());
  const std::int64_t residual = inst.capacity - w1 - follower_fill(followers, inst.capacity - w1);
  if (after_sum > residual) {
    throw Error(ErrorCode::InvalidDecomposition,
                "S2 sums to " + std::to_string(after_sum) + " > residual " + std::to_string(residual));
  }

  std::vector<std::size_t> after_sorted = decomposition.after;
  std::sort(after_sorted.begin(), after_sorted.end());
  std::vector<char> eps_priced(n, 0);
  std::int64_t eps_sum = 0;
  for (std::size_t moved = 0;; ++moved) {
    // Zero-priced items share efficiency 0 and are visited by index.
    std::int64_t room = residual - eps_sum;
    std::int64_t packed = eps_sum;
    for (std::size_t j = 0; j < n; ++j) {
      if (in_before[j] || eps_priced[j]) continue;
      if (weights[j] <= room) {
        room -= weights[j];
        packed += weights[j];
      }
    }
    if (packed >= after_sum || moved == after_sorted.size()) break;
    eps_priced[after_sorted[moved]] = 1;
    eps_sum += weights[after_sorted[moved]];
  }

  WeightAssignment a = WeightAssignment::zeros(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (in_before[j]) {
      a.weights[j] = DualWeight{weights[j], 1};
    } else if (eps_priced[j]) {
      a.weights[j] = DualWeight::epsilon();
    }
  }
  return a;
}

ObjectiveSolveResult solve_objective(const Instance& inst, const ObjectiveOptions& opts) {
  validate(inst);
  if (inst.model != Model::ObjectiveControl) {
    throw Error(ErrorCode::ModelMismatch, "solve_objective needs model 'objective', got '" +
                                              std::string(model_name(inst.model)) + "'");
  }
  const std::int64_t c = inst.capacity;
  if (ReachArray::storage_bits(c) > opts.memory_budget_bits) {
    throw Error(ErrorCode::CapacityTooLarge,
                "capacity " + std::to_string(c) + " needs " +
                    std::to_string(ReachArray::storage_bits(c)) + " bits, budget is " +
                    std::to_string(opts.memory_budget_bits));
  }

  const FillTable fill = fill_table(inst, opts.parallelism);
  const ReachArray reach = ReachArray::build(inst.leader_weights, c);

  // Best W2 per W1; -1 marks an empty row.
  std::vector<std::int64_t> best(static_cast<std::size_t>(c) + 1, -1);
  auto scan = [&](std::int64_t w1) {
    if (auto w2 = reach.max_in_row(w1, fill.residual(w1))) best[w1] = *w2;
  };
  if (opts.parallelism.serial()) {
    for (std::int64_t w1 = 0; w1 <= c; ++w1) scan(w1);
  } else {
#pragma omp parallel for num_threads(opts.parallelism.threads) schedule(dynamic, 64)
    for (std::int64_t w1 = 0; w1 <= c; ++w1) scan(w1);
  }
  const std::int64_t top = *std::max_element(best.begin(), best.end());

  ObjectiveSolveResult result;
  bool have = false;
  for (std::int64_t w1 = 0; w1 <= c; ++w1) {
    if (best[w1] != top) continue;
    const Decomposition d = reach.witness(w1, top);
    WeightAssignment a = reconstruct_objective(inst, w1, d);
    const PackingOutcome replay = simulate(inst, a);
    // Base ties: prefer the smaller ε loss, then the smaller W1 (scan order).
    if (have && replay.leader_payoff <= result.value) continue;
    have = true;
    result.value = replay.leader_payoff;
    result.before_set = d.before;
    result.w1 = w1;
    result.follower_fill = fill[w1];
    result.residual = fill.residual(w1);
    result.w2 = top;
    result.assignment = std::move(a);
    result.after_set.clear();
    for (const auto& step : replay.trace) {
      if (step.packed && step.item.side == Side::Leader &&
          !std::binary_search(d.before.begin(), d.before.end(), step.item.index)) {
        result.after_set.push_back(step.item.index);
      }
    }
    std::sort(result.after_set.begin(), result.after_set.end());
  }
  result.cell_updates = reach.cell_updates();
  return result;
}

}  // namespace stackprice
