#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "stackprice/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace stackprice::cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "stackprice");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("stackprice_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string running_example() {
    return write("running.json",
                 R"({"model":"objective","capacity":20,"leader":[9,8,5,3],"follower":[12,11,10,4]})");
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SolveRunningExampleWithDp) {
  const CliRun r = run_cli({"solve", running_example(), "--model", "objective", "--algorithm", "dp"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json d = r.doc();
  EXPECT_EQ(d["value"], (json{{"base", 5}, {"eps_coeff", -2}}));
  EXPECT_EQ(d["replay"]["confirmed"], true);
  EXPECT_EQ(d["structure"]["before_set"], json::array({1, 3}));
  EXPECT_EQ(d["structure"]["after_set"], json::array({2}));
  EXPECT_EQ(d["structure"]["follower_fill"], 4);
  EXPECT_EQ(d["structure"]["follower_packed"], json::array({3}));
  EXPECT_EQ(d["assignment"].size(), 4u);
  EXPECT_GT(d["stats"]["cell_updates"].get<std::uint64_t>(), 0u);
}

TEST_F(Cli, OracleAgreesWithDp) {
  const CliRun r = run_cli({"solve", running_example(), "--algorithm", "oracle"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.doc()["value"], (json{{"base", 5}, {"eps_coeff", -2}}));
  EXPECT_EQ(r.doc()["oracle"]["value"], 5);
}

TEST_F(Cli, EmptyLeaderConstraint) {
  const auto f = write("e.json", R"({"model":"constraint","capacity":9,"leader":[],"follower":[4]})");
  for (const char* algo : {"dp", "dp-batched", "oracle"}) {
    const CliRun r = run_cli({"solve", f, "--algorithm", algo});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(r.doc()["value"], (json{{"base", 0}, {"eps_coeff", 0}}));
    EXPECT_EQ(r.doc()["replay"]["confirmed"], true);
  }
}

TEST_F(Cli, ClosedFormModels) {
  const auto f = write("s.json", R"({"model":"lp-constraint","capacity":20,"leader":[9,8],"follower":[5]})");
  const CliRun r = run_cli({"solve", f});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.doc()["algorithm"], "closed-form");
  EXPECT_EQ(r.doc()["value"]["base"], 15);
  EXPECT_EQ(r.doc()["closed_form"]["finite_m"], 20'000'000);
  EXPECT_EQ(r.doc()["replay"]["confirmed"], true);
  const CliRun s = run_cli({"solve", f, "--model", "constraint-simple"});
  ASSERT_EQ(s.code, kOk) << s.err;
  EXPECT_EQ(s.doc()["value"]["base"], 17);
}

TEST_F(Cli, IncompatibleAlgorithm) {
  EXPECT_EQ(run_cli({"solve", running_example(), "--algorithm", "dp-batched"}).code, kIncompatibleAlgorithm);
  EXPECT_EQ(run_cli({"solve", running_example(), "--algorithm", "closed-form"}).code, kIncompatibleAlgorithm);
  EXPECT_EQ(run_cli({"solve", running_example(), "--model", "lp-objective", "--algorithm", "dp"}).code,
            kIncompatibleAlgorithm);
}

TEST_F(Cli, InvalidInputNamesTheField) {
  const auto f = write("bad.json", R"({"model":"objective","capacity":0,"leader":[1],"follower":[]})");
  const CliRun r = run_cli({"solve", f});
  EXPECT_EQ(r.code, kInvalidInput);
  EXPECT_NE(r.err.find("capacity"), std::string::npos) << r.err;
  EXPECT_EQ(run_cli({"solve", write("x.json", "not json")}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"solve", (dir_ / "missing.json").string()}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kInvalidInput);
}

TEST_F(Cli, OracleSizeLimit) {
  const auto f = write("big.json", R"({"model":"constraint","capacity":50,"leader":[1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1],"follower":[]})");
  EXPECT_EQ(run_cli({"solve", f, "--algorithm", "oracle"}).code, kSizeLimit);
}

TEST_F(Cli, VerifyClaims) {
  const auto inst = running_example();
  const auto best = write("b.json", R"({"assignment":[{"base":0,"eps_coeff":0},{"base":8,"eps_coeff":1},{"base":0,"eps_coeff":0},{"base":3,"eps_coeff":1}]})");
  const auto weak = write("a.json", R"({"assignment":[{"base":9,"eps_coeff":1},{"base":8,"eps_coeff":1},{"base":0,"eps_coeff":0},{"base":0,"eps_coeff":0}]})");
  const CliRun ok = run_cli({"verify", inst, best, "--claim", "5,-2"});
  EXPECT_EQ(ok.code, kOk) << ok.err;
  EXPECT_EQ(ok.doc()["claim_matches"], true);
  EXPECT_EQ(ok.doc()["trace"].size(), 8u);
  const CliRun bad = run_cli({"verify", inst, weak, "--claim", "5,-2"});
  EXPECT_EQ(bad.code, kClaimMismatch);
  EXPECT_EQ(bad.doc()["payoff"], (json{{"base", 3}, {"eps_coeff", -2}}));
  EXPECT_EQ(run_cli({"verify", inst, write("m.json", R"({"assignment":[{"base":1}]})")}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"verify", inst, best, "--claim", "five"}).code, kInvalidInput);
}

TEST_F(Cli, VerifyIdentityInConstraintModel) {
  const auto inst = write("c.json", R"({"model":"constraint","capacity":10,"leader":[3,4],"follower":[5]})");
  const auto id = write("id.json", R"({"assignment":[{"base":3,"eps_coeff":0},{"base":4,"eps_coeff":0}]})");
  EXPECT_EQ(run_cli({"verify", inst, id, "--claim", "0,0"}).code, kOk);
  const auto lp = write("lp.json", R"({"model":"lp-objective","capacity":10,"leader":[3,4],"follower":[5]})");
  EXPECT_EQ(run_cli({"verify", lp, id}).code, kIncompatibleAlgorithm);
}

TEST_F(Cli, SolveReportFeedsVerify) {
  const auto inst = running_example();
  const CliRun r = run_cli({"solve", inst});
  const auto report = write("report.json", r.out);
  EXPECT_EQ(run_cli({"verify", inst, report, "--claim", "5,-2"}).code, kOk);
}

TEST_F(Cli, GeneratePartitionGadget) {
  const auto p = write("p.txt", "1 2 3\n");
  const CliRun r = run_cli({"generate", "--from-partition", p, "--theorem", "2", "--M", "100"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json d = r.doc();
  EXPECT_EQ(d["capacity"], 103);
  EXPECT_EQ(d["leader"], json::array({1, 2, 3, 100}));
  EXPECT_EQ(d["follower"], json::array({101}));
  EXPECT_EQ(d["provenance"]["predicted_optimum"], 100);
  EXPECT_EQ(d["provenance"]["verified"], true);

  const auto out = (dir_ / "gadget.json").string();
  ASSERT_EQ(run_cli({"generate", "--from-partition", p, "--theorem", "2", "--M", "100", "-o", out}).code, kOk);
  const CliRun s = run_cli({"solve", out});
  ASSERT_EQ(s.code, kOk) << s.err;
  EXPECT_EQ(s.doc()["value"]["base"], 100);
}

TEST_F(Cli, GenerateParity) {
  EXPECT_EQ(run_cli({"generate", "--from-partition", write("even.json", "[2,2]"), "--theorem", "2"}).code, kOk);
  EXPECT_EQ(run_cli({"generate", "--from-partition", write("odd.json", "{\"numbers\":[1,2]}"), "--theorem", "2"}).code,
            kInvalidInput);
  EXPECT_EQ(run_cli({"generate", "--from-partition", write("m.txt", "1,1"), "--theorem", "2", "--M", "2"}).code,
            kInvalidInput);
  EXPECT_EQ(run_cli({"generate", "--from-partition", write("t.txt", "1,1"), "--theorem", "3"}).code, kInvalidInput);
}

TEST_F(Cli, GenerateConstraintGadget) {
  const auto yes = write("yes.txt", "1 1");
  const CliRun r = run_cli({"generate", "--from-partition", yes, "--theorem", "4", "--scale", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.doc()["capacity"], 38);
  EXPECT_EQ(r.doc()["provenance"]["k"], 3);
  const auto no = write("no.txt", "2 2 2");
  EXPECT_EQ(run_cli({"generate", "--from-partition", no, "--theorem", "4"}).code, kInvalidInput);
  const CliRun unchecked = run_cli({"generate", "--from-partition", no, "--theorem", "4", "--no-self-check"});
  ASSERT_EQ(unchecked.code, kOk);
  EXPECT_EQ(unchecked.doc()["provenance"]["verified"], false);
}

TEST_F(Cli, GenerateRandomIsSeeded) {
  const CliRun a = run_cli({"generate", "--random", "4", "4", "12", "20", "--seed", "7"});
  const CliRun b = run_cli({"generate", "--random", "4", "4", "12", "20", "--seed", "7"});
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.doc()["leader"].size(), 4u);
  EXPECT_EQ(a.doc()["capacity"], 20);
  EXPECT_NE(a.out, run_cli({"generate", "--random", "4", "4", "12", "20", "--seed", "8"}).out);
  EXPECT_EQ(run_cli({"generate", "--random", "4", "4", "12", "20"}).code, kInvalidInput);
}

TEST_F(Cli, BenchCounts) {
  const CliRun r = run_cli({"bench", "--model", "constraint", "--sizes", "64,256", "--capacity", "300", "--seed", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json rows = r.doc()["rows"];
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_GT(rows[1]["ratio"].get<double>(), rows[0]["ratio"].get<double>());
  for (const auto& row : rows) EXPECT_EQ(row["values_match"], true);
  EXPECT_EQ(r.out, run_cli({"bench", "--sizes", "64,256", "--capacity", "300", "--seed", "1"}).out);

  const CliRun one = run_cli({"bench", "--sizes", "1", "--capacity", "50"});
  ASSERT_EQ(one.code, kOk);
  EXPECT_EQ(one.doc()["rows"][0]["naive"], one.doc()["rows"][0]["batched"]);

  EXPECT_EQ(run_cli({"bench", "--sizes", "4,x"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"bench", "--model", "objective", "--sizes", "4"}).code, kIncompatibleAlgorithm);
  EXPECT_EQ(run_cli({"bench", "--sizes", "8", "--format", "table"}).code, kOk);
}
