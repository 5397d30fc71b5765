#pragma once

// Flat key = value run configuration. '#' starts a comment line; blank lines
// are ignored; every key may appear at most once; unknown keys are rejected.
// An empty file yields the geo600 preset.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "qnoise/noise_budget.hpp"

namespace qnoise {

struct GridSpec {
  double f_min_hz = 10.0;
  double f_max_hz = 10000.0;
  std::size_t points = 1000;
  bool log_spaced = true;

  FrequencyGrid build() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct RunConfig {
  std::string preset = "geo600";
  IfoConfig ifo = geo600_preset();
  SqueezeLevel injected{10.0, 15.0};
  double squeeze_angle = 0.0;
  double sigma_jitter = 0.0;
  LossChain loss_stages = reference_loss_chain();
  std::optional<double> eta_total = 0.62;  // empty: use the chain product
  GridSpec grid;
  Band band;
  std::uint64_t seed = 42;
  std::size_t oracle_samples = 1000000;
  std::string out_dir = ".";
  std::string format = "all";

  /// Throws ConfigError naming the first invalid field.
  void validate() const;
  BudgetInputs budget_inputs() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses and validates. Syntax errors carry the line number; domain errors
/// name the key and its bound.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

/// Every key, in documented order, with round-trip exact numbers.
std::string serialize_config(const RunConfig& cfg);

}  // namespace qnoise
