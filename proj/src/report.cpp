#include "spinex/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "spinex/error.hpp"
#include "spinex/exchange.hpp"
#include "spinex/random.hpp"
#include "spinex/suites.hpp"
#include "spinex/tilted_basis.hpp"

namespace spinex {

const char* to_string(Command c) noexcept {
  switch (c) {
    case Command::kPhaseTable: return "phase-table";
    case Command::kVerifyAll: return "verify-all";
    case Command::kTilted: return "tilted";
  }
  return "?";
}

const char* to_string(OutputFormat f) noexcept {
  switch (f) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kText: return "text";
  }
  return "?";
}

std::optional<Command> parse_command(const std::string& name) {
  for (Command c : {Command::kPhaseTable, Command::kVerifyAll, Command::kTilted}) {
    if (name == to_string(c)) return c;
  }
  return std::nullopt;
}

std::optional<OutputFormat> parse_format(const std::string& name) {
  for (OutputFormat f : {OutputFormat::kJson, OutputFormat::kCsv, OutputFormat::kText}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

void RunConfig::validate() const {
  if (!(tolerance > 0.0)) fail(ErrorCode::kDomain, "tolerance must be positive");
  if (twice_spin_max < 0 || twice_spin_max > kMaxTwiceSpin) {
    fail(ErrorCode::kDomain, "twice_spin_max must lie in 0..16");
  }
  if (geometry_trials < 1) fail(ErrorCode::kDomain, "geometry_trials must be at least 1");
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

Report cmd_phase_table(const RunConfig& cfg) {
  cfg.validate();
  Report rep;
  rep.command = Command::kPhaseTable;
  rep.config = cfg;
  rep.columns = {"twice_spin", "expected", "measured_re", "measured_im", "residual", "passed"};
  rep.passed = true;

  Rng rng(cfg.random_seed);
  for (int twice = 0; twice <= cfg.twice_spin_max; ++twice) {
    const SpinValue s = make_spin(twice);
    ExchangeReport worst;
    worst.residual = -1.0;
    for (int trial = 0; trial < cfg.geometry_trials; ++trial) {
      Point3 a, b;
      do {
        a = rng.point(10.0);
        b = rng.point(10.0);
      } while ((a - b).norm() <= 1e-3);
      ExchangeReport r = exchange_phase(s, a, b, cfg.tolerance);
      if (r.residual > worst.residual) worst = r;
    }
    const bool ok = worst.residual < cfg.tolerance;
    rep.passed = rep.passed && ok;
    rep.rows.push_back({std::int64_t{twice}, std::int64_t{s.exchange_sign()}, worst.measured_phase.real(),
                        worst.measured_phase.imag(), worst.residual, ok});
  }
  return rep;
}

Report cmd_verify_all(const RunConfig& cfg) {
  cfg.validate();
  Report rep;
  rep.command = Command::kVerifyAll;
  rep.config = cfg;
  rep.columns = {"suite", "check", "residual", "threshold", "comparison", "passed"};
  rep.passed = true;

  SuiteConfig suite_cfg;
  suite_cfg.seed = cfg.random_seed;
  suite_cfg.tolerance = cfg.tolerance;
  suite_cfg.geometry_trials = cfg.geometry_trials;
  for (const auto& c : all_suites(suite_cfg)) {
    rep.passed = rep.passed && c.passed;
    rep.rows.push_back({c.suite, c.check, c.residual, c.threshold, std::string(to_string(c.comparison)), c.passed});
  }
  return rep;
}

Report cmd_tilted(const RunConfig& cfg) {
  cfg.validate();
  Report rep;
  rep.command = Command::kTilted;
  rep.config = cfg;
  rep.columns = {"twice_spin", "l", "theta", "gram_row_re", "gram_row_im",
                 "min_singular_value", "tilt_transfer_residual", "passed"};
  rep.passed = true;

  for (int twice = 0; twice <= cfg.twice_spin_max; ++twice) {
    const SpinValue s = make_spin(twice);
    const TiltedGram g = tilted_gram(s);
    for (int l = 0; l <= twice; ++l) {
      std::string re, im;
      for (int k = 0; k <= twice; ++k) {
        if (k > 0) {
          re += ';';
          im += ';';
        }
        re += format_double(g.gram(l, k).real());
        im += format_double(g.gram(l, k).imag());
      }
      double transfer = 0.0;
      for (int lb = 0; lb <= twice; ++lb) {
        transfer = std::max(transfer, verify_tilt_transfer(s, l, lb, cfg.tolerance).residual);
      }
      const bool ok = g.min_singular_value > 1e-8 && transfer < cfg.tolerance;
      rep.passed = rep.passed && ok;
      rep.rows.push_back({std::int64_t{twice}, std::int64_t{l}, theta_l(s, l), re, im, g.min_singular_value,
                          transfer, ok});
    }
  }
  return rep;
}

Report run_command(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::kPhaseTable: return cmd_phase_table(cfg);
    case Command::kVerifyAll: return cmd_verify_all(cfg);
    case Command::kTilted: return cmd_tilted(cfg);
  }
  fail(ErrorCode::kDomain, "unknown command");
}

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const Cell& cell) {
  return std::visit([](const auto& v) -> Json {
    using T = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<T, double>) {
      if (!std::isfinite(v)) return Json(format_double(v));
    }
    return Json(v);
  }, cell);
}

std::string to_text(const Cell& cell) {
  return std::visit([](const auto& v) -> std::string {
    using T = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<T, double>) {
      return format_double(v);
    } else if constexpr (std::is_same_v<T, bool>) {
      return v ? "true" : "false";
    } else if constexpr (std::is_same_v<T, std::string>) {
      return v;
    } else {
      return std::to_string(v);
    }
  }, cell);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_json(const Report& rep) {
  Json doc;
  doc["command"] = to_string(rep.command);
  doc["config"] = {
      {"twice_spin_max", rep.config.twice_spin_max},
      {"tolerance", rep.config.tolerance},
      {"seed", rep.config.random_seed},
      {"trials", rep.config.geometry_trials},
  };
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json obj = Json::object();
    for (std::size_t c = 0; c < rep.columns.size(); ++c) obj[rep.columns[c]] = to_json(row[c]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  doc["passed"] = rep.passed;
  return doc.dump(2) + "\n";
}

std::string render_csv(const Report& rep) {
  std::string out;
  for (std::size_t c = 0; c < rep.columns.size(); ++c) {
    out += (c ? "," : "") + csv_field(rep.columns[c]);
  }
  out += "\r\n";
  for (const auto& row : rep.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + csv_field(to_text(row[c]));
    out += "\r\n";
  }
  return out;
}

std::string render_text(const Report& rep) {
  std::vector<std::size_t> width(rep.columns.size());
  for (std::size_t c = 0; c < rep.columns.size(); ++c) width[c] = rep.columns[c].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rep.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t c = 0; c < row.size(); ++c) {
      line.push_back(to_text(row[c]));
      width[c] = std::max(width[c], line.back().size());
    }
  }

  std::ostringstream os;
  os << to_string(rep.command) << "  (seed " << rep.config.random_seed << ", tol "
     << format_double(rep.config.tolerance) << ", trials " << rep.config.geometry_trials << ")\n";
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      os << (c ? "  " : "") << line[c] << std::string(width[c] - line[c].size(), ' ');
    }
    os << '\n';
  };
  emit(rep.columns);
  for (const auto& line : cells) emit(line);
  os << (rep.passed ? "PASSED" : "FAILED") << '\n';
  return os.str();
}

}  // namespace

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: return render_json(report);
    case OutputFormat::kCsv: return render_csv(report);
    case OutputFormat::kText: return render_text(report);
  }
  fail(ErrorCode::kDomain, "unknown output format");
}

}  // namespace spinex
