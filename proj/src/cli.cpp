#include "stackprice/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "stackprice/constraint_solver.hpp"
#include "stackprice/error.hpp"
#include "stackprice/greedy.hpp"
#include "stackprice/hardness.hpp"
#include "stackprice/instance_io.hpp"
#include "stackprice/objective_solver.hpp"
#include "stackprice/oracle.hpp"
#include "stackprice/random_instance.hpp"
#include "stackprice/variants.hpp"

namespace stackprice::cli {

namespace {

using io::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ModelMismatch: return kIncompatibleAlgorithm;
    case ErrorCode::InstanceTooLargeForOracle:
    case ErrorCode::CapacityTooLarge: return kSizeLimit;
    default: return kInvalidInput;
  }
}

json indices(const std::vector<std::size_t>& v) { return json(v); }

json trace_json(const Instance& inst, const WeightAssignment& a, const PackingOutcome& outcome) {
  json steps = json::array();
  for (const auto& s : outcome.trace) {
    const bool leader = s.item.side == Side::Leader;
    json step{{"rank", s.rank},
              {"side", leader ? "leader" : "follower"},
              {"index", s.item.index},
              {"weight", inst.weight(s.item)},
              {"packed", s.packed},
              {"residual", io::to_json(s.residual_after)}};
    if (leader) step["revised_weight"] = io::to_json(a.weights[s.item.index]);
    steps.push_back(std::move(step));
  }
  return steps;
}

std::vector<std::size_t> packed_followers(const PackingOutcome& outcome) {
  std::vector<std::size_t> out;
  for (const auto& id : outcome.packed) {
    if (id.side == Side::Follower) out.push_back(id.index);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string file;
  std::string model;
  std::string algorithm;
  int threads = 1;
};

bool compatible(Model m, const std::string& algorithm) {
  const bool dp_model = m == Model::ObjectiveControl || m == Model::ConstraintControl;
  if (algorithm == "dp" || algorithm == "oracle") return dp_model;
  if (algorithm == "dp-batched") return m == Model::ConstraintControl;
  if (algorithm == "closed-form") return !dp_model;
  return false;
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<Model> override_model;
  if (!args.model.empty()) {
    override_model = parse_model(args.model);
    if (!override_model) {
      err << "error: unknown model '" << args.model << "'\n";
      return kInvalidInput;
    }
  }
  io::InstanceFile file = io::parse_instance(io::read_file(args.file), override_model);
  Instance inst = file.instance;
  if (override_model) inst.model = *override_model;

  std::string algorithm = args.algorithm;
  if (algorithm.empty()) {
    algorithm = (inst.model == Model::ObjectiveControl || inst.model == Model::ConstraintControl)
                    ? "dp"
                    : "closed-form";
  }
  if (!compatible(inst.model, algorithm)) {
    err << "error: algorithm '" << algorithm << "' cannot solve model '" << model_name(inst.model)
        << "'\n";
    return kIncompatibleAlgorithm;
  }

  const Parallelism par{args.threads};
  const auto start = std::chrono::steady_clock::now();

  json report{{"input", io::to_json(inst)},
              {"model", std::string(model_name(inst.model))},
              {"algorithm", algorithm}};
  json structure = json::object();
  DualWeight value;
  WeightAssignment assignment;
  std::uint64_t cell_updates = 0;
  bool confirmed = false;
  json replay_payoff;

  auto replay_discrete = [&](const WeightAssignment& a) {
    const PackingOutcome outcome = simulate(inst, a);
    confirmed = outcome.leader_payoff == value;
    replay_payoff = io::to_json(outcome.leader_payoff);
    structure["follower_packed"] = indices(packed_followers(outcome));
  };

  if (algorithm == "closed-form") {
    const ClosedFormResult r =
        inst.model == Model::ConstraintSimple ? solve_constraint_simple(inst) : solve_lp(inst);
    value = r.value;
    assignment = r.assignment;
    cell_updates = r.operations;
    json closed{{"narrative", r.narrative}};
    if (r.finite_m) closed["finite_m"] = *r.finite_m;
    if (r.finite_gain) closed["finite_gain"] = {{"num", r.finite_gain->num}, {"den", r.finite_gain->den}};
    report["closed_form"] = closed;
    if (inst.model == Model::ConstraintSimple) {
      replay_discrete(assignment);
    } else {
      const FractionalOutcome f = fractional_greedy(inst, assignment);
      const Fraction expected = r.finite_gain ? *r.finite_gain : Fraction{value.base(), 1};
      confirmed = f.leader_payoff.num == expected.num && f.leader_payoff.den == expected.den;
      replay_payoff = {{"num", f.leader_payoff.num}, {"den", f.leader_payoff.den}};
    }
  } else if (inst.model == Model::ObjectiveControl) {
    if (algorithm == "oracle") {
      OracleOptions opts;
      opts.parallelism = par;
      const OracleResult o = oracle_objective(inst, opts);
      assignment = reconstruct_objective(inst, o.w1, {o.before, o.after});
      value = simulate(inst, assignment).leader_payoff;
      structure["before_set"] = indices(o.before);
      structure["after_set"] = indices(o.after);
      structure["w1"] = o.w1;
      structure["residual"] = o.residual;
      report["oracle"] = {{"value", o.value}, {"enumerated", o.enumerated}};
    } else {
      ObjectiveOptions opts;
      opts.parallelism = par;
      const ObjectiveSolveResult r = solve_objective(inst, opts);
      value = r.value;
      assignment = r.assignment;
      cell_updates = r.cell_updates;
      structure["before_set"] = indices(r.before_set);
      structure["after_set"] = indices(r.after_set);
      structure["w1"] = r.w1;
      structure["w2"] = r.w2;
      structure["follower_fill"] = r.follower_fill;
      structure["residual"] = r.residual;
    }
    replay_discrete(assignment);
  } else {
    if (algorithm == "oracle") {
      OracleOptions opts;
      opts.parallelism = par;
      const OracleResult o = oracle_constraint(inst, opts);
      if (o.value > 0) {
        assignment = reconstruct_constraint(inst, o.before, *o.chosen, o.residual);
        value = DualWeight{o.value, -static_cast<std::int64_t>(o.before.size())};
        structure["chosen_item"] = *o.chosen;
      } else {
        assignment = WeightAssignment::identity(inst);
        value = DualWeight{};
        structure["chosen_item"] = nullptr;
      }
      structure["before_set"] = indices(o.before);
      structure["w1"] = o.w1;
      structure["residual"] = o.residual;
      report["oracle"] = {{"value", o.value},
                          {"enumerated", o.enumerated},
                          {"structure_violations", o.structure_violations}};
    } else {
      const ConstraintSolveResult r = algorithm == "dp-batched" ? solve_constraint_batched(inst, par)
                                                                : solve_constraint_naive(inst);
      value = r.value;
      assignment = r.assignment;
      cell_updates = r.cell_updates;
      structure["before_set"] = indices(r.before_set);
      structure["chosen_item"] = r.chosen_item ? json(*r.chosen_item) : json(nullptr);
      structure["w1"] = r.w1;
      structure["follower_fill"] = r.follower_fill;
      structure["residual"] = r.residual;
    }
    replay_discrete(assignment);
  }

  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report["value"] = io::to_json(value);
  report["structure"] = structure;
  report["assignment"] = io::to_json(assignment);
  report["replay"] = {{"confirmed", confirmed}, {"payoff", replay_payoff}};
  report["stats"] = {{"elapsed_ms", elapsed_ms}, {"cell_updates", cell_updates}};
  out << report.dump(2) << "\n";
  if (!confirmed) {
    err << "error: replay of the emitted assignment does not reproduce the reported value\n";
    return kClaimMismatch;
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string file;
  std::string assignment_file;
  std::string claim;
  std::string model;
};

std::optional<DualWeight> parse_claim(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const long long base = std::stoll(a, &used_a);
    const long long eps = std::stoll(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) return std::nullopt;
    return DualWeight{base, eps};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<Model> override_model;
  if (!args.model.empty()) {
    override_model = parse_model(args.model);
    if (!override_model) {
      err << "error: unknown model '" << args.model << "'\n";
      return kInvalidInput;
    }
  }
  Instance inst = io::parse_instance(io::read_file(args.file), override_model).instance;
  if (override_model) inst.model = *override_model;
  if (!is_discrete(inst.model)) {
    err << "error: verify replays the discrete Greedy follower; model '" << model_name(inst.model)
        << "' is an LP model\n";
    return kIncompatibleAlgorithm;
  }
  const WeightAssignment a = io::parse_assignment(io::read_file(args.assignment_file));
  std::optional<DualWeight> claim;
  if (!args.claim.empty()) {
    claim = parse_claim(args.claim);
    if (!claim) {
      err << "error: --claim expects 'base,eps_coeff', got '" << args.claim << "'\n";
      return kInvalidInput;
    }
  }
  const PackingOutcome outcome = simulate(inst, a);
  json report{{"model", std::string(model_name(inst.model))},
              {"trace", trace_json(inst, a, outcome)},
              {"consumed", io::to_json(outcome.consumed)},
              {"payoff", io::to_json(outcome.leader_payoff)}};
  if (claim) {
    report["claim"] = io::to_json(*claim);
    report["claim_matches"] = *claim == outcome.leader_payoff;
  }
  out << report.dump(2) << "\n";
  return claim && *claim != outcome.leader_payoff ? kClaimMismatch : kOk;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::vector<std::int64_t> random;
  std::optional<std::uint64_t> seed;
  std::string partition_file;
  int theorem = 0;
  std::optional<std::int64_t> big_m;
  std::int64_t scale = 2;
  std::string model = "objective";
  std::string output;
  bool no_self_check = false;
};

std::vector<std::int64_t> parse_numbers(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::Parse, std::string("malformed partition file: ") + e.what());
    }
    if (doc.is_object()) {
      if (!doc.contains("numbers")) throw Error(ErrorCode::Parse, "missing field 'numbers'");
      doc = doc["numbers"];
    }
    if (!doc.is_array()) throw Error(ErrorCode::Parse, "field 'numbers' must be a list");
    std::vector<std::int64_t> out;
    for (const auto& v : doc) {
      if (!v.is_number_integer()) throw Error(ErrorCode::Parse, "partition numbers must be integers");
      out.push_back(v.get<std::int64_t>());
    }
    return out;
  }
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<std::int64_t> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw Error(ErrorCode::Parse, "bad partition number '" + token + "'");
    out.push_back(v);
  }
  return out;
}

int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
  std::string text;
  if (!args.random.empty()) {
    if (!args.seed) {
      err << "error: --random needs --seed\n";
      return kInvalidInput;
    }
    const auto model = parse_model(args.model);
    if (!model) {
      err << "error: unknown model '" << args.model << "'\n";
      return kInvalidInput;
    }
    const auto& r = args.random;
    if (r[0] < 0 || r[1] < 0 || r[2] < 1 || r[3] < 1) {
      err << "error: --random expects n_L >= 0, n_F >= 0, w_max >= 1, c >= 1\n";
      return kInvalidInput;
    }
    const Instance inst = random_instance(*model, static_cast<std::size_t>(r[0]),
                                          static_cast<std::size_t>(r[1]), r[2], r[3], *args.seed);
    validate(inst);
    text = io::serialize(inst);
  } else if (!args.partition_file.empty()) {
    const PartitionInstance p = PartitionInstance::make(parse_numbers(io::read_file(args.partition_file)));
    GadgetOptions opts;
    if (args.no_self_check) opts.self_check_max_numbers = 0;
    GadgetBundle g;
    if (args.theorem == 2) {
      g = gen_objective_gadget(p, args.big_m ? *args.big_m : default_big_m(p), opts);
    } else if (args.theorem == 4) {
      g = gen_constraint_gadget(p, args.scale, opts);
    } else {
      err << "error: --theorem must be 2 or 4\n";
      return kInvalidInput;
    }
    text = io::serialize(g.instance, g.provenance.to_json());
  } else {
    err << "error: generate needs --random or --from-partition\n";
    return kInvalidInput;
  }

  if (args.output.empty()) {
    out << text;
  } else {
    std::ofstream f(args.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << args.output << "'\n";
      return kInvalidInput;
    }
    f << text;
  }
  return kOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string model = "constraint";
  std::string sizes;
  std::int64_t capacity = 1000;
  std::uint64_t seed = 1;
  std::int64_t max_weight = 100;
  std::optional<std::size_t> followers;
  int threads = 1;
  std::string format = "json";
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  if (args.model != "constraint") {
    err << "error: bench compares the constraint-model solvers only\n";
    return kIncompatibleAlgorithm;
  }
  std::vector<std::size_t> sizes;
  {
    std::string cleaned = args.sizes;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || v < 1) {
        err << "error: malformed size '" << token << "'\n";
        return kInvalidInput;
      }
      sizes.push_back(static_cast<std::size_t>(v));
    }
  }
  if (sizes.empty() || args.capacity < 1 || args.max_weight < 1) {
    err << "error: bench needs --sizes, and positive --capacity and --w-max\n";
    return kInvalidInput;
  }

  json rows = json::array();
  for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
    const std::size_t n = sizes[idx];
    const std::size_t nf = args.followers ? *args.followers : std::max<std::size_t>(1, n / 4);
    const Instance inst = random_instance(Model::ConstraintControl, n, nf, args.max_weight,
                                          args.capacity, args.seed + idx);
    const auto naive = solve_constraint_naive(inst);
    const auto batched = solve_constraint_batched(inst, Parallelism{args.threads});
    const double ratio = batched.cell_updates == 0
                             ? 1.0
                             : static_cast<double>(naive.cell_updates) /
                                   static_cast<double>(batched.cell_updates);
    rows.push_back({{"n", n},
                    {"naive", naive.cell_updates},
                    {"batched", batched.cell_updates},
                    {"ratio", ratio},
                    {"values_match", naive.value == batched.value}});
  }

  if (args.format == "table") {
    out << std::setw(8) << "n" << std::setw(16) << "naive" << std::setw(16) << "batched"
        << std::setw(10) << "ratio" << "\n";
    for (const auto& row : rows) {
      out << std::setw(8) << row["n"].get<std::size_t>() << std::setw(16)
          << row["naive"].get<std::uint64_t>() << std::setw(16) << row["batched"].get<std::uint64_t>()
          << std::setw(10) << std::fixed << std::setprecision(3) << row["ratio"].get<double>() << "\n";
    }
  } else {
    out << json{{"model", "constraint"}, {"capacity", args.capacity}, {"seed", args.seed}, {"rows", rows}}
               .dump(2)
        << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leader pricing against a Greedy follower in Stackelberg subset sum games"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute the leader-optimal weight revision");
  solve_cmd->add_option("file", solve.file, "Instance file")->required();
  solve_cmd->add_option("--model", solve.model, "Override the instance's model");
  solve_cmd->add_option("--algorithm", solve.algorithm, "dp | dp-batched | oracle | closed-form")
      ->check(CLI::IsMember({"dp", "dp-batched", "oracle", "closed-form"}));
  solve_cmd->add_option("--threads", solve.threads, "Worker threads")->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Replay Greedy under a given assignment");
  verify_cmd->add_option("file", verify.file, "Instance file")->required();
  verify_cmd->add_option("assignment", verify.assignment_file, "Assignment file")->required();
  verify_cmd->add_option("--claim", verify.claim, "Expected payoff as base,eps_coeff");
  verify_cmd->add_option("--model", verify.model, "Override the instance's model");

  GenerateArgs gen;
  std::uint64_t seed_value = 0;
  std::int64_t m_value = 0;
  auto* gen_cmd = app.add_subcommand("generate", "Write a random or gadget instance");
  auto* random_opt = gen_cmd->add_option("--random", gen.random, "n_L n_F w_max c")->expected(4);
  auto* partition_opt =
      gen_cmd->add_option("--from-partition", gen.partition_file, "Partition numbers file");
  random_opt->excludes(partition_opt);
  auto* seed_opt = gen_cmd->add_option("--seed", seed_value, "RNG seed");
  gen_cmd->add_option("--theorem", gen.theorem, "2 (objective gadget) or 4 (constraint gadget)");
  auto* m_opt = gen_cmd->add_option("--M", m_value, "Big item weight for the objective gadget");
  gen_cmd->add_option("--scale", gen.scale, "Scale factor for the constraint gadget");
  gen_cmd->add_option("--model", gen.model, "Model of a random instance");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");
  gen_cmd->add_flag("--no-self-check", gen.no_self_check, "Skip the oracle check of small gadgets");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Count DP cell updates, naive vs batched");
  bench_cmd->add_option("--model", bench.model, "Only 'constraint' is supported");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated leader counts")->required();
  bench_cmd->add_option("--capacity", bench.capacity, "Knapsack capacity");
  bench_cmd->add_option("--seed", bench.seed, "RNG seed");
  bench_cmd->add_option("--w-max", bench.max_weight, "Largest item weight");
  std::size_t followers = 0;
  auto* followers_opt = bench_cmd->add_option("--followers", followers, "Follower item count");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--format", bench.format, "json | table")->check(CLI::IsMember({"json", "table"}));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  if (*seed_opt) gen.seed = seed_value;
  if (*m_opt) gen.big_m = m_value;
  if (*followers_opt) bench.followers = followers;

  try {
    if (*solve_cmd) return cmd_solve(solve, out, err);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*gen_cmd) return cmd_generate(gen, out, err);
    if (*bench_cmd) return cmd_bench(bench, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kInvalidInput;
}

}  // namespace stackprice::cli
