#include "qnoise/mc_oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "qnoise/errors.hpp"

using namespace qnoise;

namespace {
constexpr std::size_t kN = 1000000;
}

TEST(SampleLossySqueezed, PaperLossCase) {
  const SampleRun run = sample_lossy_squeezed(0.1, 0.62, 0.0, kN, 7);
  EXPECT_EQ(run.n_samples, kN);
  EXPECT_TRUE(oracle_compare(0.442, run).pass);
}

TEST(SampleLossySqueezed, VacuumStaysVacuum) {
  for (double eta : {0.1, 0.5, 1.0}) {
    EXPECT_TRUE(oracle_compare(1.0, sample_lossy_squeezed(1.0, eta, 0.0, kN, 11)).pass) << eta;
  }
}

TEST(SampleLossySqueezed, LosslessPassThrough) {
  EXPECT_TRUE(oracle_compare(0.1, sample_lossy_squeezed(0.1, 1.0, 0.0, kN, 3)).pass);
}

TEST(SampleLossySqueezed, StandardErrorFormula) {
  const SampleRun run = sample_lossy_squeezed(0.1, 0.62, 0.0, 10000, 5);
  EXPECT_NEAR(run.standard_error, run.estimated_variance * std::sqrt(2.0 / 9999.0), 1e-15);
}

TEST(SampleLossySqueezed, SeedDeterminism) {
  const auto a = sample_lossy_squeezed(0.1, 0.62, 0.1, 200000, 99);
  const auto b = sample_lossy_squeezed(0.1, 0.62, 0.1, 200000, 99);
  const auto c = sample_lossy_squeezed(0.1, 0.62, 0.1, 200000, 100);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.estimated_variance, c.estimated_variance);
}

TEST(SampleLossySqueezed, WorkerCountDoesNotChangeBits) {
  const auto s = state_from_db({10.0, 15.0}, 0.2);
  const double etas[] = {0.9, 0.8};
  const auto one = sample_lossy_squeezed(s, etas, 0.05, 300000, 1234, 1);
  const auto four = sample_lossy_squeezed(s, etas, 0.05, 300000, 1234, 4);
  EXPECT_EQ(one, four);
}

TEST(SampleLossySqueezed, Errors) {
  EXPECT_THROW(sample_lossy_squeezed(0.1, 0.62, 0.0, 1, 1), UsageError);
  EXPECT_THROW(sample_lossy_squeezed(0.1, 0.0, 0.0, 100, 1), DomainError);
  EXPECT_THROW(sample_lossy_squeezed(0.1, 0.5, -0.1, 100, 1), DomainError);
}

TEST(SampleLossySqueezed, ChainMatchesSingleBeamsplitter) {
  const auto s = state_from_db({10.0, 15.0});
  const double chain[] = {0.9, 0.8};
  const double merged[] = {0.72};
  const auto a = sample_lossy_squeezed(s, chain, 0.0, kN, 21);
  const auto b = sample_lossy_squeezed(s, merged, 0.0, kN, 22);
  EXPECT_TRUE(oracle_compare(a, b).pass);
  EXPECT_TRUE(oracle_compare(apply_loss(s, 0.72).v_sq(), a).pass);
}

TEST(SampleLossySqueezed, JitterMatchesDephaseClosedForm) {
  const auto s = state_from_db({10.0, 15.0});
  const double eta[] = {0.62};
  for (double sigma : {0.05, 0.2, 0.5}) {
    const auto run = sample_lossy_squeezed(s, eta, sigma, kN, 31);
    const double analytic = readout_variance(dephase(apply_loss(s, 0.62), sigma));
    EXPECT_TRUE(oracle_compare(analytic, run).pass) << sigma << " z=" << oracle_compare(analytic, run).z;
  }
}

TEST(OracleCompare, Verdicts) {
  const SampleRun close{1000000, 0, 0.4418, 4e-4};
  const auto v = oracle_compare(0.442, close);
  EXPECT_TRUE(v.pass);
  EXPECT_NEAR(std::abs(v.z), 0.5, 1e-9);

  EXPECT_FALSE(oracle_compare(0.442, SampleRun{1000000, 0, 0.50, 4e-4}).pass);

  const auto exact = oracle_compare(0.442, SampleRun{1000000, 0, 0.442, 4e-4});
  EXPECT_TRUE(exact.pass);
  EXPECT_EQ(exact.z, 0.0);
}

TEST(OracleSuite, AllChecksPass) {
  const auto checks = run_oracle_suite(42, kN);
  EXPECT_GE(checks.size(), 3u);
  for (const auto& c : checks) EXPECT_TRUE(c.verdict.pass) << c.name << " z=" << c.verdict.z;
}
