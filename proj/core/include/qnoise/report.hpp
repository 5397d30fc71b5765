#pragma once

// Serialization of budgets, ledgers, sweeps and oracle verdicts. Numbers are
// written with 9 significant digits; identical inputs give identical bytes.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qnoise/loss_ledger.hpp"
#include "qnoise/mc_oracle.hpp"
#include "qnoise/noise_budget.hpp"

namespace qnoise {

inline constexpr int kSchemaVersion = 1;

/// "%.9g" formatting.
std::string format_number(double v);

/// Columns: f_hz, asd_off, asd_on, improvement_db, shot_off, tech, disp_off,
/// disp_on. A leading '#' line states units and dB convention.
std::string budget_csv(const BudgetReport& report);

/// Summary: anchor check, improvements, rate gain, ledger.
std::string budget_json(const BudgetReport& report);

/// Log-log plot of the unsqueezed (black) and squeezed (red) total ASD.
std::string budget_svg(const BudgetReport& report);

std::string ledger_csv(std::span<const LedgerRow> rows);
std::string sweep_csv(SweepAxis axis, std::span<const SweepRow> rows);
std::string sweep_json(SweepAxis axis, std::span<const SweepRow> rows);
std::string oracle_json(std::span<const OracleCheck> checks);

/// Writes bytes verbatim; throws std::runtime_error when the path is not
/// writable.
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace qnoise
