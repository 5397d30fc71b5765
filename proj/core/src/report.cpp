#include "qnoise/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qnoise {
namespace {

using Json = nlohmann::ordered_json;

// JSON numbers go through the 9-digit text form so the shortest round-trip
// printer emits at most 9 significant digits.
Json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::strtod(format_number(v).c_str(), nullptr);
}

Json optional_number(const std::optional<double>& v) { return v ? number(*v) : Json(nullptr); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

Json ledger_array(std::span<const LedgerRow> rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back({{"stage", r.stage},
                   {"efficiency", number(r.efficiency)},
                   {"cumulative_efficiency", number(r.cumulative_efficiency)},
                   {"cumulative_v_sq", number(r.cumulative_v_sq)},
                   {"cumulative_squeeze_db", number(r.cumulative_squeeze_db)}});
  }
  return arr;
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string budget_csv(const BudgetReport& r) {
  std::string out =
      "# strain ASD in 1/sqrt(Hz), displacement ASD in m/sqrt(Hz); "
      "improvement_db = 20*log10(asd_off/asd_on) (power dB)\n"
      "f_hz,asd_off,asd_on,improvement_db,shot_off,tech,disp_off,disp_on\n";
  const auto& grid = r.off.grid;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out += format_number(grid[i]);
    for (double v : {r.off.total[i], r.on.total[i], r.improvement.per_bin_db[i], r.off.shot[i],
                     r.off.tech[i], r.off.total[i] * r.arm_length_eff,
                     r.on.total[i] * r.arm_length_eff}) {
      out += ',';
      out += format_number(v);
    }
    out += '\n';
  }
  return out;
}

std::string budget_json(const BudgetReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["conventions"] = {
      {"asd", "single-sided strain ASD, 1/sqrt(Hz)"},
      {"improvement_db", "20*log10(asd_off/asd_on), power dB"},
      {"variance_db", "-10*log10(variance), power dB"},
  };
  j["anchor_check"] = {
      {"f_hz", number(r.anchor.f_hz)},
      {"asd_off", number(r.anchor.asd_off)},
      {"asd_on", number(r.anchor.asd_on)},
      {"improvement_db", number(20.0 * std::log10(r.anchor.asd_off / r.anchor.asd_on))},
  };
  j["injected"] = {{"squeeze_db", number(r.injected.squeeze_db)},
                   {"antisqueeze_db", number(r.injected.antisqueeze_db)},
                   {"sigma_jitter_rad", number(r.sigma_jitter)}};
  j["eta_total"] = number(r.efficiency);
  j["detected_squeeze_db"] = number(-20.0 * std::log10(r.squeezing_factor));
  j["squeezing_factor"] = number(r.squeezing_factor);
  j["band"] = {{"min_hz", number(r.band.lo_hz)}, {"max_hz", number(r.band.hi_hz)}};
  j["broadband_improvement_db"] = optional_number(r.improvement.band_median_db);
  j["shot_limited_improvement_db"] = number(r.shot_limited_improvement_db);
  j["amplitude_ratio"] = number(r.amplitude_ratio);
  j["rate_gain"] = number(r.rate_gain);
  j["ledger"] = ledger_array(r.ledger);
  return dump(j);
}

std::string budget_svg(const BudgetReport& r) {
  constexpr double kWidth = 800.0;
  constexpr double kHeight = 500.0;
  constexpr double kLeft = 80.0;
  constexpr double kRight = 20.0;
  constexpr double kTop = 40.0;
  constexpr double kBottom = 60.0;

  const auto f = r.off.grid.hz();
  const double x_lo = std::floor(std::log10(f.front()));
  double x_hi = std::ceil(std::log10(f.back()));
  if (x_hi <= x_lo) x_hi = x_lo + 1.0;

  double y_min = INFINITY;
  double y_max = 0.0;
  for (const auto* s : {&r.off.total, &r.on.total}) {
    for (double v : *s) {
      y_min = std::min(y_min, v);
      y_max = std::max(y_max, v);
    }
  }
  const double y_lo = std::floor(std::log10(y_min));
  double y_hi = std::ceil(std::log10(y_max));
  if (y_hi <= y_lo) y_hi = y_lo + 1.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double hz) { return kLeft + (std::log10(hz) - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double asd) {
    return kTop + (y_hi - std::log10(asd)) / (y_hi - y_lo) * plot_h;
  };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << fixed2(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
    << "Strain noise amplitude spectral density</text>\n";

  o << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (int d = static_cast<int>(x_lo); d <= static_cast<int>(x_hi); ++d) {
    const double x = px(std::pow(10.0, d));
    o << "<line x1=\"" << fixed2(x) << "\" y1=\"" << fixed2(kTop) << "\" x2=\"" << fixed2(x)
      << "\" y2=\"" << fixed2(kTop + plot_h) << "\"/>\n";
  }
  for (int d = static_cast<int>(y_lo); d <= static_cast<int>(y_hi); ++d) {
    const double y = py(std::pow(10.0, d));
    o << "<line x1=\"" << fixed2(kLeft) << "\" y1=\"" << fixed2(y) << "\" x2=\""
      << fixed2(kLeft + plot_w) << "\" y2=\"" << fixed2(y) << "\"/>\n";
  }
  o << "</g>\n";

  for (int d = static_cast<int>(x_lo); d <= static_cast<int>(x_hi); ++d) {
    o << "<text x=\"" << fixed2(px(std::pow(10.0, d))) << "\" y=\"" << fixed2(kTop + plot_h + 18)
      << "\" text-anchor=\"middle\">1e" << d << "</text>\n";
  }
  for (int d = static_cast<int>(y_lo); d <= static_cast<int>(y_hi); ++d) {
    o << "<text x=\"" << fixed2(kLeft - 8) << "\" y=\"" << fixed2(py(std::pow(10.0, d)) + 4)
      << "\" text-anchor=\"end\">1e" << d << "</text>\n";
  }
  o << "<text x=\"" << fixed2(kLeft + plot_w / 2) << "\" y=\"" << fixed2(kHeight - 16)
    << "\" text-anchor=\"middle\">Frequency [Hz]</text>\n";
  o << "<text x=\"16\" y=\"" << fixed2(kTop + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
    << fixed2(kTop + plot_h / 2) << ")\">Strain [1/sqrt(Hz)]</text>\n";
  o << "<rect x=\"" << fixed2(kLeft) << "\" y=\"" << fixed2(kTop) << "\" width=\"" << fixed2(plot_w)
    << "\" height=\"" << fixed2(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";

  auto trace = [&](const std::vector<double>& asd, const char* color) {
    o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < f.size(); ++i) {
      o << (i ? " " : "") << fixed2(px(f[i])) << "," << fixed2(py(asd[i]));
    }
    o << "\"/>\n";
  };
  trace(r.off.total, "black");
  trace(r.on.total, "red");

  const double lx = kLeft + plot_w - 170;
  const double ly = kTop + 16;
  o << "<line x1=\"" << fixed2(lx) << "\" y1=\"" << fixed2(ly) << "\" x2=\"" << fixed2(lx + 24)
    << "\" y2=\"" << fixed2(ly) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  o << "<text x=\"" << fixed2(lx + 30) << "\" y=\"" << fixed2(ly + 4) << "\">squeezing off</text>\n";
  o << "<line x1=\"" << fixed2(lx) << "\" y1=\"" << fixed2(ly + 18) << "\" x2=\"" << fixed2(lx + 24)
    << "\" y2=\"" << fixed2(ly + 18) << "\" stroke=\"red\" stroke-width=\"1.5\"/>\n";
  o << "<text x=\"" << fixed2(lx + 30) << "\" y=\"" << fixed2(ly + 22) << "\">squeezing on</text>\n";
  o << "</svg>\n";
  return o.str();
}

std::string ledger_csv(std::span<const LedgerRow> rows) {
  std::string out =
      "# cumulative_squeeze_db = -10*log10(cumulative_v_sq) (power dB)\n"
      "stage,efficiency,cumulative_efficiency,cumulative_v_sq,cumulative_squeeze_db\n";
  for (const auto& r : rows) {
    out += r.stage + "," + format_number(r.efficiency) + "," + format_number(r.cumulative_efficiency) +
           "," + format_number(r.cumulative_v_sq) + "," + format_number(r.cumulative_squeeze_db) + "\n";
  }
  return out;
}

std::string sweep_csv(SweepAxis axis, std::span<const SweepRow> rows) {
  std::string out =
      "# improvement in power dB: 20*log10(asd_off/asd_on)\n" + std::string(to_string(axis)) +
      ",shot_limited_improvement_db,broadband_improvement_db,rate_gain\n";
  for (const auto& r : rows) {
    out += format_number(r.value) + "," + format_number(r.shot_limited_improvement_db) + "," +
           (r.band_improvement_db ? format_number(*r.band_improvement_db) : std::string("nan")) +
           "," + format_number(r.rate_gain) + "\n";
  }
  return out;
}

std::string sweep_json(SweepAxis axis, std::span<const SweepRow> rows) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["axis"] = std::string(to_string(axis));
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back({{"value", number(r.value)},
                   {"shot_limited_improvement_db", number(r.shot_limited_improvement_db)},
                   {"broadband_improvement_db", optional_number(r.band_improvement_db)},
                   {"rate_gain", number(r.rate_gain)}});
  }
  j["rows"] = std::move(arr);
  return dump(j);
}

std::string oracle_json(std::span<const OracleCheck> checks) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  bool all = true;
  Json arr = Json::array();
  for (const auto& c : checks) {
    all = all && c.verdict.pass;
    arr.push_back({{"name", c.name},
                   {"pass", c.verdict.pass},
                   {"z", number(c.verdict.z)},
                   {"reference_variance", number(c.analytic)},
                   {"estimated_variance", number(c.run.estimated_variance)},
                   {"standard_error", number(c.run.standard_error)},
                   {"n_samples", c.run.n_samples},
                   {"seed", c.run.seed}});
  }
  j["all_pass"] = all;
  j["checks"] = std::move(arr);
  return dump(j);
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace qnoise
