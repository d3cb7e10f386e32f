#pragma once

#include <cstddef>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qgates {

inline constexpr std::string_view kToolName = "qgates";
inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Format { Json, Csv };
std::string_view to_string(Format format);
Format parse_format(std::string_view name);

/// A check asserts residual <= threshold. An audit records a computed value
/// next to a published one; it passes once the comparison is recorded.
enum class RecordKind { Check, Audit };
std::string_view to_string(RecordKind kind);

using ParameterValue = std::variant<double, long long, bool, std::string>;
using Parameters = std::vector<std::pair<std::string, ParameterValue>>;

struct CheckRecord {
  std::string id;
  std::string suite;
  /// One of report_tags().
  std::string tag;
  RecordKind kind = RecordKind::Check;
  std::string convention;
  Parameters parameters;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string notes;
};

/// Closed set of tags a record may carry; "derived" marks checks with no
/// published counterpart.
const std::vector<std::string_view>& report_tags();

struct ReportSummary {
  std::size_t records = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t audits = 0;
  std::size_t warnings = 0;
};

struct VerificationReport {
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  nlohmann::ordered_json conventions = nlohmann::ordered_json::object();
  std::vector<CheckRecord> records;
  std::vector<std::string> warnings;

  /// Throws std::invalid_argument for a tag outside report_tags().
  void add(CheckRecord record);
  ReportSummary summary() const;
  bool all_passed() const;
};

/// JSON: fixed key order, two-space indent, trailing newline. CSV: header
/// row then one row per record, LF line ends, RFC 4180 quoting. Reals use
/// 17 significant digits; non-finite reals become null (JSON) or an empty
/// cell (CSV).
std::string serialize_report(const VerificationReport& report, Format format);

/// Column order of the CSV rendering.
const std::vector<std::string_view>& csv_columns();

/// JSON text with every real printed as %.17g; used for the config echo too.
std::string dump_json(const nlohmann::ordered_json& value, int indent = 2);

std::string format_real(double value);

}  // namespace qgates
