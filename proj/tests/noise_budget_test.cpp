#include "qnoise/noise_budget.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "qnoise/errors.hpp"

using namespace qnoise;

TEST(TotalNoise, AnchorPassThrough) {
  const IfoConfig cfg;
  const FrequencyGrid at({3000.0});
  EXPECT_NEAR(total_noise(cfg, at, 1.0).total[0], 1.0e-21, 1e-35);
  const double squeezed = total_noise(cfg, at, std::sqrt(0.442)).total[0];
  // mpmath evaluation of the quadrature sum at the default operating point.
  EXPECT_NEAR(squeezed, 6.65694093817280218e-22, 1e-33);
  EXPECT_NEAR(squeezed, 6.7e-22, 0.02 * 6.7e-22);
}

TEST(TotalNoise, LowFrequencyUnchangedBySqueezing) {
  const IfoConfig cfg;
  const FrequencyGrid at({100.0});
  const double off = total_noise(cfg, at, 1.0).total[0];
  const double on = total_noise(cfg, at, std::sqrt(0.442)).total[0];
  EXPECT_NEAR(off, 8.44372662604752335e-22, 1e-33);
  EXPECT_LT(std::abs(off / on - 1.0), 0.01);
}

TEST(TotalNoise, QuadratureSumHolds) {
  const auto grid = FrequencyGrid::log_spaced(10.0, 10000.0, 200);
  const auto s = total_noise(IfoConfig{}, grid, 0.7);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double sum = s.shot[i] * s.shot[i] + s.tech[i] * s.tech[i];
    EXPECT_NEAR(s.total[i] * s.total[i], sum, sum * 1e-12);
    EXPECT_GT(s.total[i], 0.0);
  }
}

TEST(ImprovementDb, ShotBandAndIdentity) {
  IfoConfig cfg;
  cfg.tech_displacement_asd = 0.0;
  const auto grid = FrequencyGrid::log_spaced(1000.0, 5000.0, 51);
  const auto off = total_noise(cfg, grid, 1.0);
  const auto on = total_noise(cfg, grid, 0.665);
  const auto imp = improvement_db(off, on);
  for (double d : imp.per_bin_db) EXPECT_NEAR(d, -20.0 * std::log10(0.665), 1e-12);
  ASSERT_TRUE(imp.band_median_db);
  EXPECT_NEAR(*imp.band_median_db, 3.55, 0.01);

  const auto same = improvement_db(off, off);
  for (double d : same.per_bin_db) EXPECT_EQ(d, 0.0);
}

TEST(ImprovementDb, TechnicalBinIsNeutral) {
  const FrequencyGrid at({100.0});
  const auto imp = improvement_db(total_noise(IfoConfig{}, at, 1.0),
                                  total_noise(IfoConfig{}, at, std::sqrt(0.442)), Band{50, 150});
  EXPECT_LT(imp.per_bin_db[0], 0.1);
  EXPECT_NEAR(imp.per_bin_db[0], 0.0634125908436474773, 1e-10);
}

TEST(ImprovementDb, GridMismatchAndEmptyBand) {
  const auto a = total_noise(IfoConfig{}, FrequencyGrid({100.0, 200.0}), 1.0);
  const auto b = total_noise(IfoConfig{}, FrequencyGrid({100.0, 300.0}), 1.0);
  EXPECT_THROW(improvement_db(a, b), UsageError);
  EXPECT_FALSE(improvement_db(a, a, Band{1000, 5000}).band_median_db.has_value());
}

TEST(DetectionRateGain, Values) {
  EXPECT_NEAR(detection_rate_gain(1.5), 3.375, 1e-12);
  EXPECT_EQ(detection_rate_gain(1.0), 1.0);
  EXPECT_NEAR(detection_rate_gain(1.0 / 0.665), 3.40043959182823359, 1e-12);
  EXPECT_THROW(detection_rate_gain(0.0), DomainError);
  EXPECT_THROW(detection_rate_gain(-2.0), DomainError);
}

TEST(DetectionRateGain, Multiplicative) {
  for (double a : {0.5, 1.2, 1.5, 3.0}) {
    for (double b : {0.8, 1.1, 2.5}) {
      const double lhs = detection_rate_gain(a * b);
      EXPECT_NEAR(lhs, detection_rate_gain(a) * detection_rate_gain(b), lhs * 1e-14);
    }
  }
}

TEST(RunBudget, DefaultReport) {
  const BudgetReport r = run_budget(BudgetInputs{});
  EXPECT_EQ(r.efficiency, 0.62);
  EXPECT_NEAR(r.anchor.asd_off, 1.0e-21, 1e-35);
  EXPECT_NEAR(r.shot_limited_improvement_db, 3.54577730650908107, 1e-10);
  EXPECT_NEAR(r.rate_gain, 3.4, 0.01);
  ASSERT_TRUE(r.improvement.band_median_db);
  EXPECT_GT(*r.improvement.band_median_db, 3.3);
  EXPECT_LE(*r.improvement.band_median_db, r.shot_limited_improvement_db);
  EXPECT_EQ(r.ledger.size(), 3u);
  EXPECT_EQ(r.off.grid.size(), 1000u);
}

TEST(RunBudget, ChainProductWhenNoTotal) {
  BudgetInputs in;
  in.eta_total.reset();
  EXPECT_NEAR(run_budget(in).efficiency, 0.648, 1e-15);
}

TEST(Sweep, EtaBehaviour) {
  const std::vector<double> etas{1e-6, 0.1, 0.3, 0.62, 0.9, 1.0};
  const auto rows = sweep(BudgetInputs{}, SweepAxis::kEta, etas);
  ASSERT_EQ(rows.size(), etas.size());
  EXPECT_NEAR(rows[0].shot_limited_improvement_db, 0.0, 1e-4);
  EXPECT_NEAR(rows[3].shot_limited_improvement_db, 3.55, 0.01);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GT(rows[i].shot_limited_improvement_db, rows[i - 1].shot_limited_improvement_db);
  }
}

TEST(Sweep, InjectedDbRaisesAntisqueeze) {
  const std::vector<double> db{0.0, 5.0, 10.0, 20.0, 60.0};
  const auto rows = sweep(BudgetInputs{}, SweepAxis::kInjectedDb, db);
  EXPECT_NEAR(rows[0].shot_limited_improvement_db, 0.0, 1e-12);
  EXPECT_NEAR(rows.back().shot_limited_improvement_db, 4.20216403383189843, 1e-5);
}

TEST(Sweep, SigmaDegrades) {
  const std::vector<double> sigma{0.0, 0.05, 0.1, 0.2};
  const auto rows = sweep(BudgetInputs{}, SweepAxis::kSigma, sigma);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LT(rows[i].shot_limited_improvement_db, rows[i - 1].shot_limited_improvement_db);
  }
}

TEST(Sweep, BadPointReportsIndex) {
  const std::vector<double> etas{0.5, 0.7, 1.3, 0.2};
  try {
    sweep(BudgetInputs{}, SweepAxis::kEta, etas);
    FAIL();
  } catch (const SweepPointError& e) {
    EXPECT_EQ(e.index(), 2u);
    EXPECT_NE(std::string(e.what()).find("sweep point 2"), std::string::npos);
  }
}

TEST(Sweep, AxisNames) {
  EXPECT_EQ(parse_sweep_axis("eta"), SweepAxis::kEta);
  EXPECT_EQ(parse_sweep_axis("injected_db"), SweepAxis::kInjectedDb);
  EXPECT_EQ(parse_sweep_axis("sigma"), SweepAxis::kSigma);
  EXPECT_THROW(parse_sweep_axis("power"), UsageError);
}

TEST(Inversion, SixDbNeedsEta0832) {
  const auto injected = state_from_db({10.0, 15.0});
  // (1 - 10^-0.6) / (1 - 0.1), evaluated with mpmath.
  EXPECT_NEAR(required_efficiency(injected, 0.0, 6.0), 0.832012618721157765, 1e-12);
  EXPECT_NEAR(solve_efficiency_by_sweep(BudgetInputs{}, 6.0), 0.832012618721157765, 1e-8);
  EXPECT_THROW(required_efficiency(injected, 0.0, 12.0), DomainError);
}
