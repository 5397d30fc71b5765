#include "qnoise_cli/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using qnoise::cli::cli_main;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qnoise");
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qnoise_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, BudgetWritesThreeFiles) {
  const auto r = run({"budget", "--out", dir_.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "budget.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "summary.json"));
  EXPECT_TRUE(fs::exists(dir_ / "spectrum.svg"));
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, BudgetFormatSelectsOneFile) {
  EXPECT_EQ(run({"budget", "--out", dir_.string(), "--format", "json"}).code, 0);
  EXPECT_TRUE(fs::exists(dir_ / "summary.json"));
  EXPECT_FALSE(fs::exists(dir_ / "budget.csv"));
}

TEST_F(CliTest, BadConfigExitsTwoAndNamesKey) {
  const fs::path cfg = dir_ / "bad.cfg";
  std::ofstream(cfg) << "# broken\neta_total = 1.3\n";
  const auto r = run({"budget", "--config", cfg.string(), "--out", dir_.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("eta_total"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "budget.csv"));
}

TEST_F(CliTest, UnknownFlagAndMissingSubcommand) {
  EXPECT_EQ(run({"budget", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, OracleSeed42Passes) {
  const auto r = run({"oracle", "--seed", "42", "--out", dir_.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"all_pass\": true"), std::string::npos);
  EXPECT_EQ(slurp(dir_ / "oracle.json"), r.out);
}

TEST_F(CliTest, OracleTooFewSamplesIsConfigError) {
  EXPECT_EQ(run({"oracle", "--samples", "1", "--out", dir_.string()}).code, 2);
}

TEST_F(CliTest, LedgerPrintsTable) {
  const auto r = run({"ledger", "--out", dir_.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("detection,0.8,0.648"), std::string::npos);
  EXPECT_EQ(slurp(dir_ / "ledger.csv"), r.out);
}

TEST_F(CliTest, SweepWithInversion) {
  const auto r = run({"sweep", "--axis", "eta", "--from", "0.1", "--to", "1", "--steps", "10",
                      "--target-db", "6", "--out", dir_.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("required_eta_closed_form,0.832012619"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "sweep.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "sweep.json"));
}

TEST_F(CliTest, SweepBadValueExitsTwo) {
  const auto r = run({"sweep", "--axis", "eta", "--values", "0.5,1.5", "--out", dir_.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("sweep point 1"), std::string::npos);
}

TEST_F(CliTest, PresetRoundTripsThroughConfig) {
  const auto r = run({"preset"});
  EXPECT_EQ(r.code, 0);
  const fs::path cfg = dir_ / "preset.cfg";
  std::ofstream(cfg) << r.out;
  EXPECT_EQ(run({"preset", "--config", cfg.string()}).out, r.out);
}

TEST_F(CliTest, UnwritableOutputExitsOne) {
  const fs::path blocker = dir_ / "file";
  std::ofstream(blocker) << "x";
  EXPECT_EQ(run({"budget", "--out", (blocker / "sub").string()}).code, 1);
}
