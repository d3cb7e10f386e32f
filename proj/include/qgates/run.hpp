#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qgates/qdeform.hpp"
#include "qgates/report.hpp"
#include "qgates/schwinger.hpp"

namespace qgates {

enum class Suite { Algebra, Gates, Constraints, Limits, All };
std::string_view to_string(Suite suite);
Suite parse_suite(std::string_view name);

struct Thresholds {
  /// Exact-identity residuals.
  double exact = 1e-12;
  /// q -> 1 comparisons.
  double limit = 1e-6;
};

struct RunConfig {
  Suite suite = Suite::All;
  /// q grid for the algebra, gates and constraints suites.
  std::vector<double> q{0.5, 0.9, 1.1, 2.0};
  /// Sequence approaching 1 for the limits suite.
  std::vector<double> limit_q{1.1, 1.01, 1.001};
  /// Fock cutoff for the algebra and limits suites; gates always use d = 2.
  int cutoff = 8;
  /// Replaces the default psi grid: every (psi_a, psi_b) pair in the algebra
  /// suite and the constraint sweep grid.
  std::optional<std::vector<double>> psi_grid;
  OperatorConvention convention = OperatorConvention::MatrixElement;
  ExponentConvention exponent = ExponentConvention::EigenvalueOfResult;
  Thresholds thresholds;
  std::optional<std::string> output;
  Format format = Format::Json;
};

/// Malformed or invalid configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the JSON config schema; keys are optional, unknown keys are
/// rejected. Throws ConfigError.
RunConfig parse_run_config(std::string_view json_text);

/// Throws ConfigError when an invariant of RunConfig is violated.
void validate(const RunConfig& config);

/// The config echo written into reports. The output path is left out so the
/// same run written to two places stays byte-identical.
nlohmann::ordered_json config_echo(const RunConfig& config);

VerificationReport run(const RunConfig& config);

/// 0 when every record passes, 1 otherwise.
int exit_status(const VerificationReport& report);

}  // namespace qgates
