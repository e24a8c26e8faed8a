#pragma once

// Report documents for the command-line front end.
//
// A report is a flat table: every row has the same columns, so JSON, CSV and
// text renderings carry identical values. JSON layout:
//   {"command": ..., "config": {...}, "rows": [{...}, ...], "passed": bool}

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace spinex {

enum class Command { kPhaseTable, kVerifyAll, kTilted };
enum class OutputFormat { kJson, kCsv, kText };

const char* to_string(Command c) noexcept;
const char* to_string(OutputFormat f) noexcept;
std::optional<Command> parse_command(const std::string& name);
std::optional<OutputFormat> parse_format(const std::string& name);

struct RunConfig {
  Command command = Command::kVerifyAll;
  int twice_spin_max = 8;
  double tolerance = 1e-10;
  std::uint64_t random_seed = 0;
  int geometry_trials = 20;
  std::optional<std::string> output_path;
  OutputFormat output_format = OutputFormat::kJson;

  /// Throws Error(kDomain) unless tolerance > 0, 0 <= twice_spin_max <= 16
  /// and geometry_trials >= 1.
  void validate() const;
};

inline constexpr int kMaxTwiceSpin = 16;

using Cell = std::variant<std::int64_t, double, bool, std::string>;

struct Report {
  Command command = Command::kVerifyAll;
  RunConfig config;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  bool passed = false;
};

/// One row per 2s: exchange phase over geometry_trials random point pairs,
/// keeping the worst trial. Columns: twice_spin, expected, measured_re,
/// measured_im, residual, passed.
Report cmd_phase_table(const RunConfig& cfg);

/// Every invariant suite. Columns: suite, check, residual, threshold,
/// comparison, passed.
Report cmd_verify_all(const RunConfig& cfg);

/// One row per (2s, l): theta_l, the Gram row, the family's minimum singular
/// value and the worst tilt-transfer residual with la = l.
Report cmd_tilted(const RunConfig& cfg);

Report run_command(const RunConfig& cfg);

std::string render(const Report& report, OutputFormat format);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

}  // namespace spinex
