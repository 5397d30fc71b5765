#pragma once

// Strain-referred noise floors of a dual-recycled Michelson interferometer.

#include <span>
#include <vector>

#include "qnoise/loss_ledger.hpp"
#include "qnoise/quadrature.hpp"

namespace qnoise {

/// How the flat shot-noise level is obtained.
enum class Normalization {
  /// Calibrated so the unsqueezed total noise passes through the anchor point
  /// at the anchor power and arm length, then scaled as 1/(L sqrt(P)).
  kAnchored,
  /// sqrt(hbar c lambda / (2 pi P)) / L for a simple Michelson; ignores the
  /// readout-chain and signal-recycling gains.
  kFirstPrinciples,
};

struct IfoConfig {
  double arm_length_eff = 1200.0;  // m, single folded arm
  double power_bs = 2700.0;        // W at the beamsplitter
  double wavelength = 1064e-9;     // m
  double sr_pole_hz = 400.0;       // signal-recycling response pole, not a measured value

  double anchor_hz = 3000.0;   // frequency of the calibration anchor
  double anchor_asd = 1.0e-21; // unsqueezed total strain ASD there, 1/sqrt(Hz)
  // Operating point the anchor was measured at. Power or length changes in
  // the config move the shot-noise level away from the anchor.
  double anchor_power_bs = 2700.0;
  double anchor_arm_length = 1200.0;

  double tech_displacement_asd = 1.0e-18;  // m/sqrt(Hz); 0 disables
  double tech_corner_hz = 700.0;

  Normalization normalization = Normalization::kAnchored;

  /// Throws ConfigError naming the first offending field.
  void validate() const;

  friend bool operator==(const IfoConfig&, const IfoConfig&) = default;
};

/// Preset for the 600 m folded-arm instrument with 2.7 kW at the beamsplitter.
IfoConfig geo600_preset();

/// Strictly increasing positive frequencies in hertz.
class FrequencyGrid {
 public:
  /// Throws UsageError unless non-empty, strictly increasing and all > 0.
  explicit FrequencyGrid(std::vector<double> hz);

  static FrequencyGrid log_spaced(double f_min, double f_max, std::size_t points);
  static FrequencyGrid linear(double f_min, double f_max, std::size_t points);

  std::span<const double> hz() const noexcept { return hz_; }
  std::size_t size() const noexcept { return hz_.size(); }
  double operator[](std::size_t i) const noexcept { return hz_[i]; }

  friend bool operator==(const FrequencyGrid&, const FrequencyGrid&) = default;

 private:
  std::vector<double> hz_;
};

/// Flat (below-pole) shot-noise strain level of the unsqueezed interferometer.
double shot_noise_level(const IfoConfig& cfg);

/// Unsqueezed shot-noise strain ASD: level * sqrt(1 + (f / sr_pole_hz)^2).
double shot_noise_asd(const IfoConfig& cfg, double f_hz);

/// Low-frequency technical floor converted to strain. Flat in displacement up
/// to tech_corner_hz, falling as (tech_corner_hz / f)^2 above it.
double technical_noise_asd(const IfoConfig& cfg, double f_hz);

/// Factor on the shot-noise amplitude after loss and phase jitter:
/// sqrt(readout_variance(dephase(apply_loss(injected, eta), sigma))).
double squeezing_factor(const QuadratureState& injected, double eta, double sigma);
double squeezing_factor(const QuadratureState& injected, const LossChain& chain, double sigma);

}  // namespace qnoise
