#pragma once

#include <string>
#include <vector>

#include "qnoise/quadrature.hpp"

namespace qnoise {

/// One optical stage between the squeezed-light source and the photodiode.
struct LossElement {
  std::string name;
  double efficiency = 1.0;  // power transmission in (0, 1]

  friend bool operator==(const LossElement&, const LossElement&) = default;
};

/// Ordered stages, source first.
using LossChain = std::vector<LossElement>;

/// Cumulative state after one stage of the chain.
struct LedgerRow {
  std::string stage;
  double efficiency;             // this stage alone
  double cumulative_efficiency;  // product of all stages so far
  double cumulative_v_sq;        // squeezed-quadrature variance after this stage
  double cumulative_squeeze_db;  // -10 log10(cumulative_v_sq)
};

/// Product of stage efficiencies. Throws ConfigError for an empty chain and
/// DomainError for a stage outside (0, 1].
double chain_efficiency(const LossChain& chain);

/// Tabulates the squeezed variance after each stage, starting from the
/// injected level. The last row equals apply_loss(state, chain_efficiency).
std::vector<LedgerRow> degradation_report(const SqueezeLevel& level, const LossChain& chain);

/// The three aggregate stages of the reference instrument: signal-recycling
/// cavity, output mode-cleaner, and detection (photodiode quantum efficiency,
/// Faraday isolators, residual mode mismatch).
LossChain reference_loss_chain();

}  // namespace qnoise
