#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace xychain::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,          ///< any other analysis failure (no interior maximum, degenerate fit, ...)
  kInvalidInput = 2,     ///< bad flags or parameters outside the model domain
  kCriticalDivergence = 3,
  kNonConvergence = 4,
};

inline constexpr std::string_view kVersion = "1.0.0";

/// Parses a temperature: a plain number or e<exp> shorthand for exp(<exp>), e.g. e-5.5.
double parse_temperature(std::string_view text);

/// Comma-separated temperature list.
std::vector<double> parse_temperature_list(std::string_view text);

struct Range {
  double min = 0.0;
  double max = 0.0;
  int count = 0;
};

/// MIN:MAX:COUNT with count >= 2 and min < max.
Range parse_range(std::string_view text);

/// Runs `xychain <subcommand> [flags]`. args excludes the program name. Output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xychain::cli
