// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stackprice/constraint_solver.hpp"
#include "stackprice/error.hpp"
#include "stackprice/greedy.hpp"
#include "stackprice/hardness.hpp"
#include "stackprice/objective_solver.hpp"
#include "stackprice/oracle.hpp"
#include "stackprice/random_instance.hpp"
#include "stackprice/variants.hpp"

using namespace stackprice;
using Clock = std::chrono::steady_clock;

namespace {

struct Replays {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void check(const std::string& where, const Instance& inst, const WeightAssignment& a, DualWeight expected) {
    ++checked;
    const DualWeight got = simulate(inst, a).leader_payoff;
    if (got != expected) failures.push_back(where + ": emitted " + expected.to_string() + ", replay " + got.to_string());
  }
};

Replays replays;
int failed = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failed;
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

Instance random_small(Model m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  const auto nl = static_cast<std::size_t>(pick(1, 10));
  const auto nf = static_cast<std::size_t>(pick(0, 8));
  const std::int64_t c = pick(1, 80);
  return random_instance(m, nl, nf, 30, c, rng());
}

std::vector<PartitionInstance> partition_family(std::size_t count) {
  std::vector<PartitionInstance> out;
  for (std::uint64_t seed = 0; out.size() < count; ++seed) {
    std::mt19937_64 rng(0xC0FFEE + seed);
    std::vector<std::int64_t> a(std::uniform_int_distribution<std::size_t>(1, 8)(rng));
    std::int64_t total = 0;
    for (auto& x : a) total += x = std::uniform_int_distribution<std::int64_t>(1, 12)(rng);
    if (total % 2) a.back() += a.back() == 12 ? -1 : 1;
    if (a.back() == 0) continue;
    out.push_back(PartitionInstance::make(a));
  }
  return out;
}

std::string fmt_ratio(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", r);
  return buf;
}

void criterion1() {
  const auto t = Clock::now();
  const Instance inst{20, {9, 8, 5, 3}, {12, 11, 10, 4}, Model::ObjectiveControl};
  const auto r = solve_objective(inst);
  replays.check("running example", inst, r.assignment, r.value);
  const WeightAssignment weak{{{9, 1}, {8, 1}, {0, 0}, {0, 0}}};
  const DualWeight weak_payoff = simulate(inst, weak).leader_payoff;
  const double secs = seconds_since(t);
  const bool ok = r.value == DualWeight(5, -2) && r.before_set == std::vector<std::size_t>{1, 3} &&
                  r.follower_fill == 4 && r.after_set == std::vector<std::size_t>{2} &&
                  weak_payoff == DualWeight(3, -2) && secs < 1.0;
  std::ostringstream os;
  os << "running example value " << r.value << ", S1 weights {";
  for (auto i : r.before_set) os << " " << inst.leader_weights[i];
  os << " }, fill " << r.follower_fill << ", S2 weights {";
  for (auto i : r.after_set) os << " " << inst.leader_weights[i];
  os << " }, weaker pricing replays to " << weak_payoff << ", " << secs << " s";
  report(1, ok, os.str());
}

void criterion2() {
  const auto t = Clock::now();
  std::size_t mismatches = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = random_small(Model::ObjectiveControl, 1000 + seed);
    const auto r = solve_objective(inst);
    const auto o = oracle_objective(inst);
    if (r.value.base() != o.value) ++mismatches;
    replays.check("objective seed " + std::to_string(seed), inst, r.assignment, r.value);
  }
  const double secs = seconds_since(t);
  report(2, mismatches == 0 && secs < 60,
         "objective DP vs oracle on 200 instances, " + std::to_string(mismatches) + " mismatches, " +
             std::to_string(secs) + " s");
}

void criterion3() {
  const auto t = Clock::now();
  std::size_t mismatches = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = random_small(Model::ConstraintControl, 2000 + seed);
    const auto naive = solve_constraint_naive(inst);
    const auto batched = solve_constraint_batched(inst, Parallelism{4});
    const auto o = oracle_constraint(inst);
    if (naive.value != batched.value || naive.value.base() != o.value || naive.assignment != batched.assignment) {
      ++mismatches;
    }
    const std::string where = "constraint seed " + std::to_string(seed);
    replays.check(where + " naive", inst, naive.assignment, naive.value);
    replays.check(where + " batched", inst, batched.assignment, batched.value);
    if (o.value > 0) {
      const auto a = reconstruct_constraint(inst, o.before, *o.chosen, o.residual);
      replays.check(where + " oracle witness", inst, a,
                    DualWeight{o.value, -static_cast<std::int64_t>(o.before.size())});
    }
  }
  const double secs = seconds_since(t);
  report(3, mismatches == 0 && secs < 60,
         "naive = batched = oracle on 200 constraint instances, " + std::to_string(mismatches) + " mismatches, " +
             std::to_string(secs) + " s");
}

void criterion4(const std::vector<PartitionInstance>& family) {
  std::size_t wrong = 0, yes = 0;
  for (const auto& p : family) {
    const bool is_yes = decide_partition(p).yes;
    yes += is_yes;
    try {
      const auto g = gen_objective_gadget(p, default_big_m(p));
      const auto r = solve_objective(g.instance);
      replays.check("objective gadget", g.instance, r.assignment, r.value);
      const std::int64_t opt = r.value.base();
      const std::int64_t m = *g.provenance.big_m;
      const bool consistent = is_yes ? opt == m : opt <= p.half_sum - 1;
      if (!consistent || opt != oracle_objective(g.instance).value) ++wrong;
    } catch (const Error&) {
      ++wrong;
    }
  }
  report(4, wrong == 0,
         std::to_string(family.size()) + " partition instances (" + std::to_string(yes) + " yes), " +
             std::to_string(wrong) + " objective gadgets disagree with the partition answer");
}

void criterion5(const std::vector<PartitionInstance>& family) {
  const std::int64_t scale = 2;
  std::size_t wrong = 0, yes = 0, refuted = 0;
  std::string first_bad;
  for (const auto& p : family) {
    const bool is_yes = decide_partition(p).yes;
    yes += is_yes;
    bool ok = true;
    try {
      const auto g = gen_constraint_gadget(p, scale);
      const auto r = solve_constraint_naive(g.instance);
      replays.check("constraint gadget", g.instance, r.assignment, r.value);
      ok = g.provenance.verified && r.value.base() == (is_yes ? scale - 1 : 0);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PredictionRefuted) throw;
      ++refuted;
      ok = false;
    }
    if (!ok) {
      ++wrong;
      if (first_bad.empty()) {
        GadgetOptions unchecked;
        unchecked.self_check_max_numbers = 0;
        const auto g = gen_constraint_gadget(p, scale, unchecked);
        std::ostringstream os;
        os << "first: partition {";
        for (auto x : p.numbers) os << " " << x;
        os << " } (" << (is_yes ? "yes" : "no") << ") has optimum " << oracle_constraint(g.instance).value
           << ", expected " << (is_yes ? scale - 1 : 0);
        first_bad = os.str();
      }
    }
  }
  std::string detail = std::to_string(family.size()) + " partition instances (" + std::to_string(yes) +
                       " yes), " + std::to_string(wrong) + " constraint gadgets disagree (" +
                       std::to_string(refuted) + " refuted by the oracle at generation)";
  if (!first_bad.empty()) detail += "; " + first_bad;
  report(5, wrong == 0, detail);
}

void criterion6() {
  std::size_t wrong = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = random_small(Model::ConstraintSimple, 3000 + seed);
    const auto r = solve_constraint_simple(inst);
    replays.check("simple variant", inst, r.assignment, r.value);
    if (r.value.base() != std::min(inst.capacity, total_leader_weight(inst))) ++wrong;
  }
  const Model lp_models[] = {Model::LpObjective, Model::LpConstraint, Model::LpConstraintSimple};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Model m = lp_models[seed % 3];
    const Instance inst = random_small(m, 4000 + seed);
    const auto r = solve_lp(inst);
    const Fraction got = fractional_greedy(inst, r.assignment).leader_payoff;
    const std::int64_t residual = std::max<std::int64_t>(0, inst.capacity - total_follower_weight(inst));
    bool ok = true;
    if (m == Model::LpObjective) {
      const std::int64_t expect = std::min(residual, total_leader_weight(inst));
      ok = r.value.base() == expect && got.equals(expect);
    } else if (m == Model::LpConstraint) {
      ok = r.value.base() == residual;
      if (r.finite_gain) {
        ok = ok && static_cast<__int128>(got.num) * r.finite_gain->den ==
                       static_cast<__int128>(r.finite_gain->num) * got.den &&
             residual - got.to_double() <= static_cast<double>(residual) * 1e-5 + 1e-9;
      } else {
        ok = ok && got.equals(0);
      }
    } else {
      const std::int64_t expect = std::min(inst.capacity, total_leader_weight(inst));
      ok = r.value.base() == expect && got.equals(expect);
    }
    if (!ok) ++wrong;
  }
  report(6, wrong == 0,
         "100 simple-variant and 300 LP instances, " + std::to_string(wrong) + " closed-form mismatches");
}

void criterion7() {
  const auto t = Clock::now();
  const std::int64_t c = 1000;
  auto ratio_at = [&](std::size_t n) {
    const Instance inst = random_instance(Model::ConstraintControl, n, std::max<std::size_t>(1, n / 4), 100, c,
                                          5000 + n);
    const auto naive = solve_constraint_naive(inst);
    const auto batched = solve_constraint_batched(inst, Parallelism{4});
    if (naive.value != batched.value) return -1.0;
    replays.check("bench n=" + std::to_string(n), inst, batched.assignment, batched.value);
    return static_cast<double>(naive.cell_updates) / static_cast<double>(batched.cell_updates);
  };
  const double base = ratio_at(100);
  std::vector<double> ratios;
  for (std::size_t n : {64, 144, 256, 400}) ratios.push_back(ratio_at(n));
  bool monotone = base > 0;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    monotone = monotone && ratios[i] > 0 && (i == 0 || ratios[i] >= ratios[i - 1]);
  }
  const double growth = ratios.back() / base;
  const double secs = seconds_since(t);
  std::string detail = "c=1000 naive/batched ratios n=64,144,256,400: ";
  for (double r : ratios) detail += fmt_ratio(r) + " ";
  detail += "(n=100: " + fmt_ratio(base) + ", growth " + fmt_ratio(growth) + "x), " + std::to_string(secs) + " s";
  report(7, monotone && growth > 1.8 && secs < 120, detail);
}

void criterion8() {
  std::string detail = std::to_string(replays.checked) + " emitted assignments replayed, " +
                       std::to_string(replays.failures.size()) + " mismatches";
  if (!replays.failures.empty()) detail += "; first: " + replays.failures.front();
  report(8, replays.failures.empty() && replays.checked > 0, detail);
}

void guarded(int id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("threw: ") + e.what());
  }
}

}  // namespace

int main() {
  const auto family = partition_family(200);
  guarded(1, criterion1);
  guarded(2, criterion2);
  guarded(3, criterion3);
  guarded(4, [&] { criterion4(family); });
  guarded(5, [&] { criterion5(family); });
  guarded(6, criterion6);
  guarded(7, criterion7);
  guarded(8, criterion8);
  std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
