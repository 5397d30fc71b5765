#include "qnoise/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "qnoise/errors.hpp"

namespace qnoise {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string exact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[noreturn]] void bad_value(const std::string& key, std::size_t line, std::string_view value,
                            const char* expected) {
  throw ConfigError(key, line,
                    "line " + std::to_string(line) + ": " + key + ": cannot parse '" +
                        std::string(value) + "' as " + expected);
}

double parse_double(const std::string& key, std::size_t line, std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty() || !std::isfinite(v)) {
    bad_value(key, line, text, "a finite number");
  }
  return v;
}

std::uint64_t parse_uint(const std::string& key, std::size_t line, std::string_view text) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    bad_value(key, line, text, "a non-negative integer");
  }
  return v;
}

LossChain parse_stages(const std::string& key, std::size_t line, std::string_view text) {
  LossChain chain;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos || trim(item.substr(0, colon)).empty()) {
      bad_value(key, line, item, "name:efficiency");
    }
    chain.push_back({std::string(trim(item.substr(0, colon))),
                     parse_double(key, line, trim(item.substr(colon + 1)))});
  }
  return chain;
}

[[noreturn]] void out_of_range(const char* key, double value, const char* bound) {
  throw ConfigError(key, 0,
                    std::string(key) + " = " + exact(value) + " is outside " + bound);
}

using Setter = std::function<void(RunConfig&, std::string_view, std::size_t)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = [] {
    std::map<std::string, Setter, std::less<>> t;
    auto real = [&t](const char* key, auto member_access) {
      t[key] = [key, member_access](RunConfig& c, std::string_view v, std::size_t line) {
        member_access(c) = parse_double(key, line, v);
      };
    };
    real("arm_length_eff_m", [](RunConfig& c) -> double& { return c.ifo.arm_length_eff; });
    real("power_bs_w", [](RunConfig& c) -> double& { return c.ifo.power_bs; });
    real("wavelength_m", [](RunConfig& c) -> double& { return c.ifo.wavelength; });
    real("sr_pole_hz", [](RunConfig& c) -> double& { return c.ifo.sr_pole_hz; });
    real("anchor_hz", [](RunConfig& c) -> double& { return c.ifo.anchor_hz; });
    real("anchor_asd", [](RunConfig& c) -> double& { return c.ifo.anchor_asd; });
    real("anchor_power_bs_w", [](RunConfig& c) -> double& { return c.ifo.anchor_power_bs; });
    real("anchor_arm_length_m", [](RunConfig& c) -> double& { return c.ifo.anchor_arm_length; });
    real("tech_displacement_asd", [](RunConfig& c) -> double& { return c.ifo.tech_displacement_asd; });
    real("tech_corner_hz", [](RunConfig& c) -> double& { return c.ifo.tech_corner_hz; });
    real("squeeze_db", [](RunConfig& c) -> double& { return c.injected.squeeze_db; });
    real("antisqueeze_db", [](RunConfig& c) -> double& { return c.injected.antisqueeze_db; });
    real("squeeze_angle_rad", [](RunConfig& c) -> double& { return c.squeeze_angle; });
    real("sigma_jitter_rad", [](RunConfig& c) -> double& { return c.sigma_jitter; });
    real("grid_f_min_hz", [](RunConfig& c) -> double& { return c.grid.f_min_hz; });
    real("grid_f_max_hz", [](RunConfig& c) -> double& { return c.grid.f_max_hz; });
    real("band_min_hz", [](RunConfig& c) -> double& { return c.band.lo_hz; });
    real("band_max_hz", [](RunConfig& c) -> double& { return c.band.hi_hz; });

    t["preset"] = [](RunConfig& c, std::string_view v, std::size_t line) {
      if (v != "geo600") bad_value("preset", line, v, "a known preset (geo600)");
      c.preset = std::string(v);
    };
    t["normalization"] = [](RunConfig& c, std::string_view v, std::size_t line) {
      if (v == "anchored") {
        c.ifo.normalization = Normalization::kAnchored;
      } else if (v == "first_principles") {
        c.ifo.normalization = Normalization::kFirstPrinciples;
      } else {
        bad_value("normalization", line, v, "anchored|first_principles");
      }
    };
    t["loss_stages"] = [](RunConfig& c, std::string_view v, std::size_t line) {
      c.loss_stages = parse_stages("loss_stages", line, v);
    };
    t["eta_total"] = [](RunConfig& c, std::string_view v, std::size_t line) {
      if (v == "chain") {
        c.eta_total.reset();
      } else {
        c.eta_total = parse_double("eta_total", line, v);
      }
    };
    t["grid_points"] = [](RunConfig& c, std::string_view v, std::size_t line) {
      c.grid.points = parse_uint("grid_points", line, v);
    };
    t["grid_spacing"] = [](RunConfig& c, std::string_view v, std::size_t line) {
      if (v == "log") {
        c.grid.log_spaced = true;
      } else if (v == "linear") {
        c.grid.log_spaced = false;
      } else {
        bad_value("grid_spacing", line, v, "log|linear");
      }
    };
    t["seed"] = [](RunConfig& c, std::string_view v, std::size_t line) {
      c.seed = parse_uint("seed", line, v);
    };
    t["oracle_samples"] = [](RunConfig& c, std::string_view v, std::size_t line) {
      c.oracle_samples = parse_uint("oracle_samples", line, v);
    };
    t["out_dir"] = [](RunConfig& c, std::string_view v, std::size_t) { c.out_dir = std::string(v); };
    t["format"] = [](RunConfig& c, std::string_view v, std::size_t line) {
      if (v != "csv" && v != "json" && v != "svg" && v != "all") {
        bad_value("format", line, v, "csv|json|svg|all");
      }
      c.format = std::string(v);
    };
    return t;
  }();
  return table;
}

}  // namespace

FrequencyGrid GridSpec::build() const {
  return log_spaced ? FrequencyGrid::log_spaced(f_min_hz, f_max_hz, points)
                    : FrequencyGrid::linear(f_min_hz, f_max_hz, points);
}

void RunConfig::validate() const {
  ifo.validate();
  if (injected.squeeze_db < 0.0) out_of_range("squeeze_db", injected.squeeze_db, "[0, inf)");
  if (injected.antisqueeze_db < injected.squeeze_db) {
    out_of_range("antisqueeze_db", injected.antisqueeze_db, "[squeeze_db, inf)");
  }
  if (sigma_jitter < 0.0) out_of_range("sigma_jitter_rad", sigma_jitter, "[0, inf)");
  if (loss_stages.empty()) throw ConfigError("loss_stages", 0, "loss_stages must not be empty");
  for (const auto& stage : loss_stages) {
    if (stage.efficiency <= 0.0 || stage.efficiency > 1.0) {
      throw ConfigError("loss_stages", 0,
                        "loss_stages: stage '" + stage.name + "' efficiency " +
                            exact(stage.efficiency) + " is outside (0, 1]");
    }
  }
  if (eta_total && (*eta_total <= 0.0 || *eta_total > 1.0)) {
    out_of_range("eta_total", *eta_total, "(0, 1]");
  }
  if (grid.f_min_hz <= 0.0) out_of_range("grid_f_min_hz", grid.f_min_hz, "(0, inf)");
  if (grid.f_max_hz <= grid.f_min_hz) out_of_range("grid_f_max_hz", grid.f_max_hz, "(grid_f_min_hz, inf)");
  if (grid.points < 2) {
    throw ConfigError("grid_points", 0, "grid_points = " + std::to_string(grid.points) + " is below 2");
  }
  if (band.lo_hz <= 0.0) out_of_range("band_min_hz", band.lo_hz, "(0, inf)");
  if (band.hi_hz < band.lo_hz) out_of_range("band_max_hz", band.hi_hz, "[band_min_hz, inf)");
  if (oracle_samples < 2) {
    throw ConfigError("oracle_samples", 0,
                      "oracle_samples = " + std::to_string(oracle_samples) + " is below 2");
  }
}

BudgetInputs RunConfig::budget_inputs() const {
  BudgetInputs in;
  in.ifo = ifo;
  in.injected = injected;
  in.squeeze_angle = squeeze_angle;
  in.sigma_jitter = sigma_jitter;
  in.chain = loss_stages;
  in.eta_total = eta_total;
  in.grid = grid.build();
  in.band = band;
  return in;
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty() || line_no == 0) {
    ++line_no;
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", line_no,
                        "line " + std::to_string(line_no) + ": expected 'key = value', got '" +
                            std::string(line) + "'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("", line_no, "line " + std::to_string(line_no) + ": missing key before '='");
    }
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw ConfigError(key, line_no,
                        "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (!seen.insert(key).second) {
      throw ConfigError(key, line_no,
                        "line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    it->second(cfg, value, line_no);
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", 0, "cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream out;
  out << "# qnoise run configuration\n";
  out << "preset = " << c.preset << "\n";
  out << "\n# interferometer\n";
  out << "arm_length_eff_m = " << exact(c.ifo.arm_length_eff) << "\n";
  out << "power_bs_w = " << exact(c.ifo.power_bs) << "\n";
  out << "wavelength_m = " << exact(c.ifo.wavelength) << "\n";
  out << "sr_pole_hz = " << exact(c.ifo.sr_pole_hz) << "\n";
  out << "normalization = "
      << (c.ifo.normalization == Normalization::kAnchored ? "anchored" : "first_principles") << "\n";
  out << "anchor_hz = " << exact(c.ifo.anchor_hz) << "\n";
  out << "anchor_asd = " << exact(c.ifo.anchor_asd) << "\n";
  out << "anchor_power_bs_w = " << exact(c.ifo.anchor_power_bs) << "\n";
  out << "anchor_arm_length_m = " << exact(c.ifo.anchor_arm_length) << "\n";
  out << "tech_displacement_asd = " << exact(c.ifo.tech_displacement_asd) << "\n";
  out << "tech_corner_hz = " << exact(c.ifo.tech_corner_hz) << "\n";
  out << "\n# squeezed light\n";
  out << "squeeze_db = " << exact(c.injected.squeeze_db) << "\n";
  out << "antisqueeze_db = " << exact(c.injected.antisqueeze_db) << "\n";
  out << "squeeze_angle_rad = " << exact(c.squeeze_angle) << "\n";
  out << "sigma_jitter_rad = " << exact(c.sigma_jitter) << "\n";
  out << "\n# optical loss, source to photodiode\n";
  out << "loss_stages = ";
  for (std::size_t i = 0; i < c.loss_stages.size(); ++i) {
    out << (i ? ", " : "") << c.loss_stages[i].name << ":" << exact(c.loss_stages[i].efficiency);
  }
  out << "\n";
  out << "eta_total = " << (c.eta_total ? exact(*c.eta_total) : std::string("chain")) << "\n";
  out << "\n# frequency grid and improvement band\n";
  out << "grid_f_min_hz = " << exact(c.grid.f_min_hz) << "\n";
  out << "grid_f_max_hz = " << exact(c.grid.f_max_hz) << "\n";
  out << "grid_points = " << c.grid.points << "\n";
  out << "grid_spacing = " << (c.grid.log_spaced ? "log" : "linear") << "\n";
  out << "band_min_hz = " << exact(c.band.lo_hz) << "\n";
  out << "band_max_hz = " << exact(c.band.hi_hz) << "\n";
  out << "\n# run\n";
  out << "seed = " << c.seed << "\n";
  out << "oracle_samples = " << c.oracle_samples << "\n";
  out << "out_dir = " << c.out_dir << "\n";
  out << "format = " << c.format << "\n";
  return out.str();
}

}  // namespace qnoise
