#include "qgates/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qgates {

namespace {

using ordered_json = nlohmann::ordered_json;

void write_json(std::string& out, const ordered_json& value, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  const char* newline = indent > 0 ? "\n" : "";
  switch (value.type()) {
    case ordered_json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += newline;
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) {
          out += ",";
          out += newline;
        }
        first = false;
        out += pad;
        out += ordered_json(key).dump();
        out += indent > 0 ? ": " : ":";
        write_json(out, item, indent, depth + 1);
      }
      out += newline;
      out += close_pad;
      out += "}";
      return;
    }
    case ordered_json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += newline;
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) {
          out += ",";
          out += newline;
        }
        out += pad;
        write_json(out, value[i], indent, depth + 1);
      }
      out += newline;
      out += close_pad;
      out += "]";
      return;
    }
    case ordered_json::value_t::number_float: {
      const double v = value.get<double>();
      out += std::isfinite(v) ? format_real(v) : "null";
      return;
    }
    default:
      out += value.dump();
      return;
  }
}

ordered_json parameter_json(const ParameterValue& value) {
  return std::visit([](const auto& v) { return ordered_json(v); }, value);
}

std::string parameter_text(const ParameterValue& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_real(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
        else return v;
      },
      value);
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_real(double v) { return std::isfinite(v) ? format_real(v) : ""; }

ordered_json record_json(const CheckRecord& r) {
  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : r.parameters) params[name] = parameter_json(value);
  ordered_json j;
  j["id"] = r.id;
  j["suite"] = r.suite;
  j["tag"] = r.tag;
  j["kind"] = std::string(to_string(r.kind));
  j["convention"] = r.convention;
  j["parameters"] = std::move(params);
  j["residual"] = r.residual;
  j["threshold"] = r.threshold;
  j["pass"] = r.pass;
  j["notes"] = r.notes;
  return j;
}

}  // namespace

std::string_view to_string(Format format) { return format == Format::Json ? "json" : "csv"; }

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unsupported format '" + std::string(name) + "'");
}

std::string_view to_string(RecordKind kind) { return kind == RecordKind::Check ? "check" : "audit"; }

const std::vector<std::string_view>& report_tags() {
  static const std::vector<std::string_view> tags{
      "boson-algebra",   "q-commutation",  "number-commutator", "bracket-product",
      "deformed-ladder", "deformed-number", "gate-action",      "deformed-qubit",
      "deformed-gate",   "fixed-parameters", "fixed-qubit",     "fixed-gate",
      "hadamard-ratio",  "constraint-claim", "derived"};
  return tags;
}

void VerificationReport::add(CheckRecord record) {
  const auto& tags = report_tags();
  if (std::find(tags.begin(), tags.end(), record.tag) == tags.end()) {
    throw std::invalid_argument("unknown report tag '" + record.tag + "'");
  }
  records.push_back(std::move(record));
}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  s.records = records.size();
  for (const auto& r : records) {
    (r.pass ? s.passed : s.failed) += 1;
    if (r.kind == RecordKind::Audit) ++s.audits;
  }
  s.warnings = warnings.size();
  return s;
}

bool VerificationReport::all_passed() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

const std::vector<std::string_view>& csv_columns() {
  static const std::vector<std::string_view> columns{"id",        "suite",     "tag",  "kind",
                                                     "convention", "parameters", "residual",
                                                     "threshold", "pass",      "notes"};
  return columns;
}

std::string format_real(double value) {
  if (value == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string dump_json(const ordered_json& value, int indent) {
  std::string out;
  write_json(out, value, indent, 0);
  return out;
}

std::string serialize_report(const VerificationReport& report, Format format) {
  if (format == Format::Csv) {
    std::string out;
    for (std::size_t i = 0; i < csv_columns().size(); ++i) {
      if (i) out += ',';
      out += csv_columns()[i];
    }
    out += '\n';
    for (const auto& r : report.records) {
      std::string params;
      for (std::size_t i = 0; i < r.parameters.size(); ++i) {
        if (i) params += ';';
        params += r.parameters[i].first + "=" + parameter_text(r.parameters[i].second);
      }
      const std::string cells[] = {csv_cell(r.id),         csv_cell(r.suite),
                                   csv_cell(r.tag),        std::string(to_string(r.kind)),
                                   csv_cell(r.convention), csv_cell(params),
                                   csv_real(r.residual),   csv_real(r.threshold),
                                   r.pass ? "true" : "false", csv_cell(r.notes)};
      for (std::size_t i = 0; i < std::size(cells); ++i) {
        if (i) out += ',';
        out += cells[i];
      }
      out += '\n';
    }
    return out;
  }

  const ReportSummary s = report.summary();
  ordered_json doc;
  doc["tool"] = std::string(kToolName);
  doc["version"] = std::string(kToolVersion);
  doc["config"] = report.config;
  doc["conventions"] = report.conventions;
  doc["records"] = ordered_json::array();
  for (const auto& r : report.records) doc["records"].push_back(record_json(r));
  doc["warnings"] = report.warnings;
  doc["summary"] = {{"records", s.records},
                    {"passed", s.passed},
                    {"failed", s.failed},
                    {"audits", s.audits},
                    {"warnings", s.warnings}};
  return dump_json(doc) + "\n";
}

}  // namespace qgates
