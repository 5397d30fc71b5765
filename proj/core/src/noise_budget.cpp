#include "qnoise/noise_budget.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qnoise/errors.hpp"

namespace qnoise {
namespace {

std::optional<double> median_in_band(const FrequencyGrid& grid, const std::vector<double>& values,
                                     const Band& band) {
  std::vector<double> picked;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] >= band.lo_hz && grid[i] <= band.hi_hz) picked.push_back(values[i]);
  }
  if (picked.empty()) return std::nullopt;
  std::sort(picked.begin(), picked.end());
  const std::size_t mid = picked.size() / 2;
  if (picked.size() % 2 == 1) return picked[mid];
  return 0.5 * (picked[mid - 1] + picked[mid]);
}

BudgetInputs with_value(const BudgetInputs& base, SweepAxis axis, double value) {
  BudgetInputs in = base;
  switch (axis) {
    case SweepAxis::kEta:
      in.eta_total = value;
      break;
    case SweepAxis::kInjectedDb:
      in.injected.squeeze_db = value;
      in.injected.antisqueeze_db = std::max(in.injected.antisqueeze_db, value);
      break;
    case SweepAxis::kSigma:
      in.sigma_jitter = value;
      break;
  }
  return in;
}

}  // namespace

double BudgetInputs::efficiency() const {
  if (eta_total) {
    const double eta = *eta_total;
    if (!std::isfinite(eta) || eta <= 0.0 || eta > 1.0) {
      throw DomainError("eta_total must lie in (0, 1], got " + std::to_string(eta));
    }
    return eta;
  }
  return chain_efficiency(chain);
}

QuadratureState BudgetInputs::injected_state() const { return state_from_db(injected, squeeze_angle); }

NoiseSpectrum total_noise(const IfoConfig& cfg, const FrequencyGrid& grid, double sqz) {
  if (!std::isfinite(sqz) || sqz <= 0.0) {
    throw DomainError("squeezing factor must be positive, got " + std::to_string(sqz));
  }
  const std::size_t n = grid.size();
  NoiseSpectrum s{grid, std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const double shot = sqz * shot_noise_asd(cfg, grid[i]);
    const double tech = technical_noise_asd(cfg, grid[i]);
    s.shot[i] = shot;
    s.tech[i] = tech;
    s.total[i] = std::hypot(shot, tech);
  }
  return s;
}

Improvement improvement_db(const NoiseSpectrum& off, const NoiseSpectrum& on, const Band& band) {
  if (!(off.grid == on.grid)) throw UsageError("improvement_db: spectra are on different grids");
  Improvement out;
  out.per_bin_db.resize(off.grid.size());
  for (std::size_t i = 0; i < off.grid.size(); ++i) {
    out.per_bin_db[i] = 20.0 * std::log10(off.total[i] / on.total[i]);
  }
  out.band_median_db = median_in_band(off.grid, out.per_bin_db, band);
  return out;
}

double detection_rate_gain(double amplitude_ratio) {
  if (!std::isfinite(amplitude_ratio) || amplitude_ratio <= 0.0) {
    throw DomainError("amplitude ratio must be positive, got " + std::to_string(amplitude_ratio));
  }
  return amplitude_ratio * amplitude_ratio * amplitude_ratio;
}

BudgetReport run_budget(const BudgetInputs& in) {
  in.ifo.validate();
  const QuadratureState injected = in.injected_state();
  const double eta = in.efficiency();
  const double sqz = squeezing_factor(injected, eta, in.sigma_jitter);

  BudgetReport r{
      .off = total_noise(in.ifo, in.grid, 1.0),
      .on = total_noise(in.ifo, in.grid, sqz),
      .improvement = {},
      .efficiency = eta,
      .squeezing_factor = sqz,
      .shot_limited_improvement_db = -20.0 * std::log10(sqz),
      .amplitude_ratio = 1.0 / sqz,
      .rate_gain = detection_rate_gain(1.0 / sqz),
      .anchor = {},
      .ledger = degradation_report(in.injected, in.chain),
      .band = in.band,
      .injected = in.injected,
      .sigma_jitter = in.sigma_jitter,
      .arm_length_eff = in.ifo.arm_length_eff,
  };
  r.improvement = improvement_db(r.off, r.on, in.band);

  const FrequencyGrid at_anchor({in.ifo.anchor_hz});
  r.anchor = {in.ifo.anchor_hz, total_noise(in.ifo, at_anchor, 1.0).total[0],
              total_noise(in.ifo, at_anchor, sqz).total[0]};
  return r;
}

SweepAxis parse_sweep_axis(std::string_view name) {
  if (name == "eta") return SweepAxis::kEta;
  if (name == "injected_db") return SweepAxis::kInjectedDb;
  if (name == "sigma") return SweepAxis::kSigma;
  throw UsageError("unknown sweep axis '" + std::string(name) + "' (eta|injected_db|sigma)");
}

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kEta:
      return "eta";
    case SweepAxis::kInjectedDb:
      return "injected_db";
    case SweepAxis::kSigma:
      return "sigma";
  }
  return "?";
}

std::vector<SweepRow> sweep(const BudgetInputs& base, SweepAxis axis, std::span<const double> values) {
  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    try {
      const BudgetReport r = run_budget(with_value(base, axis, values[i]));
      rows.push_back({values[i], r.shot_limited_improvement_db, r.improvement.band_median_db,
                      r.rate_gain});
    } catch (const std::exception& e) {
      throw SweepPointError(i, "sweep point " + std::to_string(i) + " (" +
                                   std::string(to_string(axis)) + " = " + std::to_string(values[i]) +
                                   "): " + e.what());
    }
  }
  return rows;
}

double required_efficiency(const QuadratureState& injected, double sigma, double target_db) {
  // Loss and dephasing commute, so the readout variance after loss eta is
  // 1 + eta (v - 1) with v the dephased readout variance of the input.
  const double v = readout_variance(dephase(injected, sigma));
  const double target = db_to_variance(target_db);
  if (!(target_db > 0.0) || !(v < target)) {
    throw DomainError("target " + std::to_string(target_db) +
                      " dB is not reachable with this injected state");
  }
  return (1.0 - target) / (1.0 - v);
}

double solve_efficiency_by_sweep(const BudgetInputs& base, double target_db, double tol) {
  auto improvement_at = [&](double eta) {
    const double value[] = {eta};
    return sweep(base, SweepAxis::kEta, value).front().shot_limited_improvement_db;
  };
  double lo = 0.0;
  double hi = 1.0;
  if (improvement_at(hi) < target_db) {
    throw DomainError("target " + std::to_string(target_db) + " dB exceeds the lossless improvement");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= 0.0) break;
    (improvement_at(mid) < target_db ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace qnoise
