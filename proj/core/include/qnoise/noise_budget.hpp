#pragma once

// Total strain spectra with and without squeezing, improvement metrics,
// detection-rate gain and parameter sweeps.
//
// dB conventions: variance and noise-power ratios use 10 log10; amplitude
// (ASD) ratios are reported as power dB, i.e. 20 log10.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qnoise/ifo_model.hpp"
#include "qnoise/loss_ledger.hpp"
#include "qnoise/quadrature.hpp"

namespace qnoise {

/// Strain ASDs on a grid, 1/sqrt(Hz). total^2 = shot^2 + tech^2 pointwise.
/// `shot` already includes the squeezing factor.
struct NoiseSpectrum {
  FrequencyGrid grid;
  std::vector<double> shot;
  std::vector<double> tech;
  std::vector<double> total;
};

/// Frequency band for the improvement summary, inclusive.
struct Band {
  double lo_hz = 1000.0;
  double hi_hz = 5000.0;

  friend bool operator==(const Band&, const Band&) = default;
};

struct Improvement {
  std::vector<double> per_bin_db;       // 20 log10(off / on)
  std::optional<double> band_median_db; // empty when no bin falls in the band
};

/// Everything needed to compute one budget.
struct BudgetInputs {
  IfoConfig ifo;
  SqueezeLevel injected{10.0, 15.0};
  double squeeze_angle = 0.0;  // rad, squeezed quadrature vs readout
  double sigma_jitter = 0.0;   // rad RMS
  LossChain chain = reference_loss_chain();
  /// Total efficiency used by the budget; the chain product when empty.
  std::optional<double> eta_total = 0.62;
  FrequencyGrid grid = FrequencyGrid::log_spaced(10.0, 10000.0, 1000);
  Band band;

  double efficiency() const;
  QuadratureState injected_state() const;
};

struct AnchorCheck {
  double f_hz;
  double asd_off;
  double asd_on;
};

struct BudgetReport {
  NoiseSpectrum off;
  NoiseSpectrum on;
  Improvement improvement;
  double efficiency;
  double squeezing_factor;
  /// -20 log10(squeezing_factor): the improvement where shot noise dominates.
  double shot_limited_improvement_db;
  double amplitude_ratio;  // 1 / squeezing_factor
  double rate_gain;        // amplitude_ratio^3
  AnchorCheck anchor;
  std::vector<LedgerRow> ledger;

  // Inputs echoed for serialization.
  Band band;
  SqueezeLevel injected;
  double sigma_jitter;
  double arm_length_eff;  // m, converts strain to displacement
};

/// total(f) = sqrt((sqz * shot(f))^2 + tech(f)^2) over the grid.
NoiseSpectrum total_noise(const IfoConfig& cfg, const FrequencyGrid& grid, double sqz = 1.0);

/// Per-bin 20 log10(off/on) and the median over `band`. Throws UsageError on
/// grid mismatch.
Improvement improvement_db(const NoiseSpectrum& off, const NoiseSpectrum& on, const Band& band = {});

/// Event-rate gain for isotropic sources: amplitude_ratio^3.
double detection_rate_gain(double amplitude_ratio);

BudgetReport run_budget(const BudgetInputs& in);

enum class SweepAxis { kEta, kInjectedDb, kSigma };

/// Parses "eta", "injected_db" or "sigma"; throws UsageError otherwise.
SweepAxis parse_sweep_axis(std::string_view name);
std::string_view to_string(SweepAxis axis);

struct SweepRow {
  double value;
  double shot_limited_improvement_db;
  std::optional<double> band_improvement_db;
  double rate_gain;
};

/// One budget summary per value. The injected_db axis sets squeeze_db and
/// raises antisqueeze_db to match when it would fall below. Throws
/// SweepPointError identifying the first invalid value.
std::vector<SweepRow> sweep(const BudgetInputs& base, SweepAxis axis, std::span<const double> values);

/// Closed-form efficiency at which the shot-limited improvement equals
/// target_db for the given injected state and jitter.
double required_efficiency(const QuadratureState& injected, double sigma, double target_db);

/// Same quantity found by bisection over eta sweeps of `base`.
double solve_efficiency_by_sweep(const BudgetInputs& base, double target_db, double tol = 1e-9);

}  // namespace qnoise
