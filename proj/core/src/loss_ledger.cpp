#include "qnoise/loss_ledger.hpp"

#include <cmath>

#include "qnoise/errors.hpp"

namespace qnoise {
namespace {

void check_stage(const LossElement& e) {
  if (!std::isfinite(e.efficiency) || e.efficiency <= 0.0 || e.efficiency > 1.0) {
    throw DomainError("loss stage '" + e.name + "' efficiency must lie in (0, 1], got " +
                      std::to_string(e.efficiency));
  }
}

}  // namespace

double chain_efficiency(const LossChain& chain) {
  if (chain.empty()) throw ConfigError("loss_stages", 0, "loss chain is empty");
  double eta = 1.0;
  for (const auto& e : chain) {
    check_stage(e);
    eta *= e.efficiency;
  }
  return eta;
}

std::vector<LedgerRow> degradation_report(const SqueezeLevel& level, const LossChain& chain) {
  if (chain.empty()) throw ConfigError("loss_stages", 0, "loss chain is empty");
  const QuadratureState injected = state_from_db(level);

  std::vector<LedgerRow> rows;
  rows.reserve(chain.size());
  double eta = 1.0;
  for (const auto& e : chain) {
    check_stage(e);
    eta *= e.efficiency;
    // Recompute from the injected state with the cumulative efficiency so the
    // rows depend only on the running product, not on stage order.
    const double v = apply_loss(injected, eta).v_sq();
    rows.push_back({e.name, e.efficiency, eta, v, variance_to_db(v)});
  }
  return rows;
}

LossChain reference_loss_chain() {
  return {
      {"signal_recycling_cavity", 0.90},
      {"output_mode_cleaner", 0.90},
      {"detection", 0.80},
  };
}

}  // namespace qnoise
