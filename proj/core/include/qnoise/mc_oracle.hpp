#pragma once

// Monte-Carlo check of the variance algebra. Each sample draws the two
// principal-axis quadratures of the input state, projects them onto a
// jittered readout angle, then passes the result through one or more
// beamsplitters that each mix in an independent vacuum draw:
//
//   x' = sqrt(eta) x + sqrt(1 - eta) v,   v ~ N(0, 1)
//
// Random stream: samples are split into shards of kShardSize. Shard k uses
// std::mt19937_64 seeded with splitmix64(seed + k); Gaussians come from the
// Box-Muller transform of 53-bit uniforms. Shard statistics are merged in
// shard order, so a run is bit-identical for any number of workers.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qnoise/quadrature.hpp"

namespace qnoise {

inline constexpr std::size_t kShardSize = 1 << 16;

struct SampleRun {
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  double estimated_variance = 0.0;
  /// estimated_variance * sqrt(2 / (n - 1)), the Gaussian-data standard error.
  double standard_error = 0.0;

  friend bool operator==(const SampleRun&, const SampleRun&) = default;
};

/// Samples `n` readout values of `state` after the beamsplitters `etas`
/// (applied in order) with Gaussian angle jitter `sigma`. Throws UsageError
/// when n < 2 and DomainError for out-of-range efficiencies or jitter.
SampleRun sample_lossy_squeezed(const QuadratureState& state, std::span<const double> etas,
                                double sigma, std::size_t n, std::uint64_t seed,
                                unsigned workers = 1);

/// Single beamsplitter on an aligned pure state with squeezed variance v_in.
SampleRun sample_lossy_squeezed(double v_in, double eta, double sigma, std::size_t n,
                                std::uint64_t seed);

struct OracleVerdict {
  bool pass = false;
  double z = 0.0;  // (estimate - reference) / combined standard error
};

/// Passes iff |estimated - analytic| <= 3 standard errors.
OracleVerdict oracle_compare(double analytic, const SampleRun& run);

/// Two-sample version: both runs estimate the same variance.
OracleVerdict oracle_compare(const SampleRun& a, const SampleRun& b);

struct OracleCheck {
  std::string name;
  double analytic;  // reference variance; for two-sample checks the second run's estimate
  SampleRun run;
  OracleVerdict verdict;
};

/// Acceptance cases (aligned single beamsplitter at (0.1, 0.62), (1, 0.5),
/// (0.126, 0.833)) plus chain, jitter and rotated-readout equivalence checks.
std::vector<OracleCheck> run_oracle_suite(std::uint64_t seed, std::size_t n, unsigned workers = 1);

}  // namespace qnoise
