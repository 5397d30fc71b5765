#include "qnoise/ifo_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qnoise/errors.hpp"

namespace qnoise {
namespace {

constexpr double kHbar = 1.054571817e-34;  // J s
constexpr double kSpeedOfLight = 299792458.0;

void require_positive(double value, const char* key) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw ConfigError(key, 0, std::string(key) + " must be positive and finite, got " +
                                  std::to_string(value));
  }
}

void require_frequency(double f_hz) {
  if (!std::isfinite(f_hz) || f_hz <= 0.0) {
    throw DomainError("frequency must be positive, got " + std::to_string(f_hz));
  }
}

double pole_response(const IfoConfig& cfg, double f_hz) {
  const double x = f_hz / cfg.sr_pole_hz;
  return std::sqrt(1.0 + x * x);
}

double technical_at(double displacement_asd, double arm_length, double corner_hz, double f_hz) {
  const double flat = displacement_asd / arm_length;
  if (f_hz <= corner_hz) return flat;
  const double r = corner_hz / f_hz;
  return flat * r * r;
}

}  // namespace

void IfoConfig::validate() const {
  require_positive(arm_length_eff, "arm_length_eff_m");
  require_positive(power_bs, "power_bs_w");
  require_positive(wavelength, "wavelength_m");
  require_positive(sr_pole_hz, "sr_pole_hz");
  require_positive(anchor_hz, "anchor_hz");
  require_positive(anchor_asd, "anchor_asd");
  require_positive(anchor_power_bs, "anchor_power_bs_w");
  require_positive(anchor_arm_length, "anchor_arm_length_m");
  if (!std::isfinite(tech_displacement_asd) || tech_displacement_asd < 0.0) {
    throw ConfigError("tech_displacement_asd", 0,
                      "tech_displacement_asd must be >= 0 and finite, got " +
                          std::to_string(tech_displacement_asd));
  }
  require_positive(tech_corner_hz, "tech_corner_hz");
  if (normalization == Normalization::kAnchored) {
    const double tech =
        technical_at(tech_displacement_asd, anchor_arm_length, tech_corner_hz, anchor_hz);
    if (tech >= anchor_asd) {
      throw ConfigError("anchor_asd", 0,
                        "anchor_asd must exceed the technical noise at the anchor frequency (" +
                            std::to_string(tech) + ")");
    }
  }
}

IfoConfig geo600_preset() { return IfoConfig{}; }

FrequencyGrid::FrequencyGrid(std::vector<double> hz) : hz_(std::move(hz)) {
  if (hz_.empty()) throw UsageError("frequency grid is empty");
  for (std::size_t i = 0; i < hz_.size(); ++i) {
    if (!std::isfinite(hz_[i]) || hz_[i] <= 0.0) {
      throw UsageError("grid frequency " + std::to_string(i) + " is not positive");
    }
    if (i > 0 && hz_[i] <= hz_[i - 1]) {
      throw UsageError("grid is not strictly increasing at index " + std::to_string(i));
    }
  }
}

FrequencyGrid FrequencyGrid::log_spaced(double f_min, double f_max, std::size_t points) {
  if (points == 1) return FrequencyGrid({f_min});
  if (!(f_min > 0.0) || !(f_max > f_min) || points == 0) {
    throw UsageError("log grid needs 0 < f_min < f_max and points >= 1");
  }
  std::vector<double> hz(points);
  const double lo = std::log10(f_min);
  const double step = (std::log10(f_max) - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    hz[i] = std::pow(10.0, lo + step * static_cast<double>(i));
  }
  hz.front() = f_min;
  hz.back() = f_max;
  return FrequencyGrid(std::move(hz));
}

FrequencyGrid FrequencyGrid::linear(double f_min, double f_max, std::size_t points) {
  if (points == 1) return FrequencyGrid({f_min});
  if (!(f_min > 0.0) || !(f_max > f_min) || points == 0) {
    throw UsageError("linear grid needs 0 < f_min < f_max and points >= 1");
  }
  std::vector<double> hz(points);
  const double step = (f_max - f_min) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) hz[i] = f_min + step * static_cast<double>(i);
  hz.back() = f_max;
  return FrequencyGrid(std::move(hz));
}

double shot_noise_level(const IfoConfig& cfg) {
  if (cfg.normalization == Normalization::kFirstPrinciples) {
    return std::sqrt(kHbar * kSpeedOfLight * cfg.wavelength /
                     (2.0 * std::numbers::pi * cfg.power_bs)) /
           cfg.arm_length_eff;
  }
  // Flat level at the anchor operating point, chosen so that
  // level^2 * response^2 + tech^2 = anchor_asd^2 at anchor_hz.
  const double tech = technical_at(cfg.tech_displacement_asd, cfg.anchor_arm_length,
                                   cfg.tech_corner_hz, cfg.anchor_hz);
  const double shot_at_anchor =
      std::sqrt(cfg.anchor_asd * cfg.anchor_asd - tech * tech);
  const double reference_level = shot_at_anchor / pole_response(cfg, cfg.anchor_hz);
  return reference_level * std::sqrt(cfg.anchor_power_bs / cfg.power_bs) *
         (cfg.anchor_arm_length / cfg.arm_length_eff);
}

double shot_noise_asd(const IfoConfig& cfg, double f_hz) {
  require_frequency(f_hz);
  return shot_noise_level(cfg) * pole_response(cfg, f_hz);
}

double technical_noise_asd(const IfoConfig& cfg, double f_hz) {
  require_frequency(f_hz);
  return technical_at(cfg.tech_displacement_asd, cfg.arm_length_eff, cfg.tech_corner_hz, f_hz);
}

double squeezing_factor(const QuadratureState& injected, double eta, double sigma) {
  return std::sqrt(readout_variance(dephase(apply_loss(injected, eta), sigma)));
}

double squeezing_factor(const QuadratureState& injected, const LossChain& chain, double sigma) {
  return squeezing_factor(injected, chain_efficiency(chain), sigma);
}

}  // namespace qnoise
