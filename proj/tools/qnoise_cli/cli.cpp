#include "qnoise_cli/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <sstream>
#include <vector>

#include "qnoise/config.hpp"
#include "qnoise/errors.hpp"
#include "qnoise/mc_oracle.hpp"
#include "qnoise/noise_budget.hpp"
#include "qnoise/report.hpp"

namespace qnoise::cli {
namespace {

namespace fs = std::filesystem;

struct CommonFlags {
  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "Run configuration (key = value)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", flags.out_dir, "Output directory");
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "svg", "all"}));
  cmd->add_option("--seed", flags.seed, "Random seed for Monte-Carlo checks");
}

RunConfig resolve(const CommonFlags& flags) {
  RunConfig cfg = flags.config_path.empty() ? RunConfig{} : load_config(flags.config_path);
  if (flags.out_dir) cfg.out_dir = *flags.out_dir;
  if (flags.format) cfg.format = *flags.format;
  if (flags.seed) cfg.seed = *flags.seed;
  return cfg;
}

bool wants(const RunConfig& cfg, std::string_view fmt) {
  return cfg.format == "all" || cfg.format == fmt;
}

class Diagnostics {
 public:
  Diagnostics(std::ostream& err, bool color) : err_(err), color_(color) {}

  void error(std::string_view msg) const {
    err_ << (color_ ? "\x1b[31merror:\x1b[0m " : "error: ") << msg << "\n";
  }
  void info(std::string_view msg) const { err_ << msg << "\n"; }

 private:
  std::ostream& err_;
  bool color_;
};

fs::path emit(const RunConfig& cfg, const std::string& name, std::string_view bytes,
              const Diagnostics& diag) {
  fs::create_directories(cfg.out_dir);
  const fs::path path = fs::path(cfg.out_dir) / name;
  write_file(path, bytes);
  diag.info("wrote " + path.string());
  return path;
}

int run_budget_cmd(const RunConfig& cfg, const Diagnostics& diag) {
  const BudgetReport report = run_budget(cfg.budget_inputs());
  if (wants(cfg, "csv")) emit(cfg, "budget.csv", budget_csv(report), diag);
  if (wants(cfg, "json")) emit(cfg, "summary.json", budget_json(report), diag);
  if (wants(cfg, "svg")) emit(cfg, "spectrum.svg", budget_svg(report), diag);
  return kExitOk;
}

int run_ledger_cmd(const RunConfig& cfg, std::ostream& out, const Diagnostics& diag) {
  const auto rows = degradation_report(cfg.injected, cfg.loss_stages);
  const std::string csv = ledger_csv(rows);
  emit(cfg, "ledger.csv", csv, diag);
  out << csv;
  return kExitOk;
}

struct SweepFlags {
  std::string axis = "eta";
  std::vector<double> values;
  std::optional<double> from;
  std::optional<double> to;
  std::size_t steps = 11;
  std::optional<double> target_db;
};

std::vector<double> sweep_values(const SweepFlags& f) {
  if (!f.values.empty()) return f.values;
  if (!f.from || !f.to) throw UsageError("sweep needs --values or both --from and --to");
  if (f.steps < 2) throw UsageError("--steps must be >= 2");
  std::vector<double> v(f.steps);
  for (std::size_t i = 0; i < f.steps; ++i) {
    v[i] = *f.from + (*f.to - *f.from) * static_cast<double>(i) / static_cast<double>(f.steps - 1);
  }
  return v;
}

int run_sweep_cmd(const RunConfig& cfg, const SweepFlags& flags, std::ostream& out,
                  const Diagnostics& diag) {
  const SweepAxis axis = parse_sweep_axis(flags.axis);
  const BudgetInputs base = cfg.budget_inputs();
  const std::vector<double> values = sweep_values(flags);
  const auto rows = sweep(base, axis, values);
  if (wants(cfg, "csv")) emit(cfg, "sweep.csv", sweep_csv(axis, rows), diag);
  if (wants(cfg, "json")) emit(cfg, "sweep.json", sweep_json(axis, rows), diag);
  if (flags.target_db) {
    const double closed = required_efficiency(base.injected_state(), base.sigma_jitter, *flags.target_db);
    const double solved = solve_efficiency_by_sweep(base, *flags.target_db);
    out << "target_db," << format_number(*flags.target_db) << "\n"
        << "required_eta_closed_form," << format_number(closed) << "\n"
        << "required_eta_sweep," << format_number(solved) << "\n";
  }
  return kExitOk;
}

int run_oracle_cmd(const RunConfig& cfg, unsigned workers, std::ostream& out,
                   const Diagnostics& diag) {
  const auto checks = run_oracle_suite(cfg.seed, cfg.oracle_samples, workers);
  const std::string json = oracle_json(checks);
  emit(cfg, "oracle.json", json, diag);
  out << json;
  bool ok = true;
  for (const auto& c : checks) {
    if (!c.verdict.pass) {
      ok = false;
      diag.error("oracle check '" + c.name + "' failed, z = " + format_number(c.verdict.z));
    }
  }
  return ok ? kExitOk : kExitOracle;
}

}  // namespace

int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err, bool color) {
  const Diagnostics diag(err, color);

  CLI::App app{"Quantum-noise budget for squeezed-light interferometers", "qnoise"};
  app.require_subcommand(1);

  CommonFlags common;
  auto* budget = app.add_subcommand("budget", "Spectra with and without squeezing plus summary");
  auto* ledger = app.add_subcommand("ledger", "Per-stage squeezing degradation table");
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one parameter and summarize each point");
  auto* oracle = app.add_subcommand("oracle", "Monte-Carlo checks of the variance algebra");
  auto* preset = app.add_subcommand("preset", "Print the full configuration");
  for (auto* cmd : {budget, ledger, sweep_cmd, oracle, preset}) add_common(cmd, common);

  SweepFlags sweep_flags;
  sweep_cmd->add_option("--axis", sweep_flags.axis, "eta|injected_db|sigma")
      ->check(CLI::IsMember({"eta", "injected_db", "sigma"}));
  sweep_cmd->add_option("--values", sweep_flags.values, "Explicit values")->delimiter(',');
  sweep_cmd->add_option("--from", sweep_flags.from, "First value");
  sweep_cmd->add_option("--to", sweep_flags.to, "Last value");
  sweep_cmd->add_option("--steps", sweep_flags.steps, "Number of evenly spaced values");
  sweep_cmd->add_option("--target-db", sweep_flags.target_db,
                        "Also solve for the efficiency reaching this improvement");

  std::optional<std::size_t> samples;
  unsigned workers = 1;
  oracle->add_option("--samples", samples, "Samples per check");
  oracle->add_option("--workers", workers, "Worker threads (results do not depend on it)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  std::ostringstream cli_out;
  std::ostringstream cli_err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    RunConfig cfg = resolve(common);
    if (samples) {
      cfg.oracle_samples = *samples;
      cfg.validate();
    }
    if (*budget) return run_budget_cmd(cfg, diag);
    if (*ledger) return run_ledger_cmd(cfg, out, diag);
    if (*sweep_cmd) return run_sweep_cmd(cfg, sweep_flags, out, diag);
    if (*oracle) return run_oracle_cmd(cfg, workers, out, diag);
    out << serialize_config(cfg);
    return kExitOk;
  } catch (const ConfigError& e) {
    diag.error(std::string("config: ") + e.what());
    return kExitConfig;
  } catch (const std::logic_error& e) {
    // DomainError and UsageError.
    diag.error(e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    diag.error(e.what());
    return kExitError;
  }
}

}  // namespace qnoise::cli
