#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qgates/run.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr const char* kOutputDirEnv = "QGATES_OUTPUT_DIR";

struct Flags {
  std::string config_path;
  std::vector<double> q;
  std::optional<int> cutoff;
  std::vector<double> psi;
  std::vector<std::string> conventions;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::vector<std::string> thresholds;
};

void add_flags(CLI::App& cmd, Flags& f) {
  cmd.add_option("--config", f.config_path, "JSON run configuration; flags override it");
  cmd.add_option("--q", f.q, "q values, comma separated")->delimiter(',');
  cmd.add_option("--cutoff", f.cutoff, "Fock cutoff d for the algebra and limit suites");
  cmd.add_option("--psi", f.psi, "psi grid values, comma separated")->delimiter(',');
  cmd.add_option("--convention", f.conventions,
                 "matrix-element | left-scaling | eigenvalue-of-result | eigenvalue-of-vacuum (repeatable)");
  cmd.add_option("--out", f.out, "report path; stdout when absent");
  cmd.add_option("--format", f.format, "json | csv");
  cmd.add_option("--threshold", f.thresholds, "VALUE, exact=VALUE or limit=VALUE (repeatable)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::ios_base::failure("error reading config file '" + path + "'");
  return buf.str();
}

double parse_threshold_value(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw qgates::ConfigError("bad threshold value '" + text + "'");
  return v;
}

void apply_flags(qgates::RunConfig& c, const Flags& f) {
  if (!f.q.empty()) {
    if (c.suite == qgates::Suite::Limits) {
      c.limit_q = f.q;
    } else {
      c.q = f.q;
    }
  }
  if (f.cutoff) c.cutoff = *f.cutoff;
  if (!f.psi.empty()) c.psi_grid = f.psi;
  for (const auto& name : f.conventions) {
    if (name == "matrix-element" || name == "left-scaling") {
      c.convention = qgates::parse_operator_convention(name);
    } else if (name == "eigenvalue-of-result" || name == "eigenvalue-of-vacuum") {
      c.exponent = qgates::parse_exponent_convention(name);
    } else {
      throw qgates::ConfigError("unknown convention '" + name + "'");
    }
  }
  if (f.out) c.output = *f.out;
  if (f.format) {
    try {
      c.format = qgates::parse_format(*f.format);
    } catch (const std::invalid_argument& e) {
      throw qgates::ConfigError(e.what());
    }
  }
  for (const auto& t : f.thresholds) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      c.thresholds.exact = parse_threshold_value(t);
    } else if (t.substr(0, eq) == "exact") {
      c.thresholds.exact = parse_threshold_value(t.substr(eq + 1));
    } else if (t.substr(0, eq) == "limit") {
      c.thresholds.limit = parse_threshold_value(t.substr(eq + 1));
    } else {
      throw qgates::ConfigError("unknown threshold '" + t.substr(0, eq) + "'");
    }
  }
}

std::optional<std::filesystem::path> output_path(const qgates::RunConfig& c) {
  const char* dir = std::getenv(kOutputDirEnv);
  if (dir && *dir) {
    const std::string name = c.output ? std::filesystem::path(*c.output).filename().string()
                                      : "qgates-report." + std::string(qgates::to_string(c.format));
    return std::filesystem::path(dir) / name;
  }
  if (c.output) return std::filesystem::path(*c.output);
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for q-deformed oscillators and Schwinger-encoded quantum gates"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, qgates::Suite>> commands{
      {"verify-algebra", qgates::Suite::Algebra},
      {"verify-gates", qgates::Suite::Gates},
      {"discover", qgates::Suite::Constraints},
      {"limit-study", qgates::Suite::Limits},
      {"all", qgates::Suite::All},
  };
  Flags flags;
  std::vector<std::pair<CLI::App*, qgates::Suite>> subs;
  for (const auto& [name, suite] : commands) {
    const std::string help = suite == qgates::Suite::All
                                 ? "run every suite"
                                 : "run the " + std::string(qgates::to_string(suite)) + " suite";
    CLI::App* sub = app.add_subcommand(name, help);
    add_flags(*sub, flags);
    subs.emplace_back(sub, suite);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  qgates::RunConfig config;
  try {
    if (!flags.config_path.empty()) config = qgates::parse_run_config(read_file(flags.config_path));
    for (const auto& [sub, suite] : subs) {
      if (sub->parsed()) config.suite = suite;
    }
    apply_flags(config, flags);
    qgates::validate(config);
  } catch (const qgates::ConfigError& e) {
    std::cerr << "qgates: config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "qgates: " << e.what() << "\n";
    return kExitIo;
  }

  const qgates::VerificationReport report = qgates::run(config);
  const std::string text = qgates::serialize_report(report, config.format);

  if (const auto path = output_path(config)) {
    std::ofstream out(*path, std::ios::binary | std::ios::trunc);
    out << text;
    out.close();
    if (!out) {
      std::cerr << "qgates: cannot write report to '" << path->string() << "'\n";
      return kExitIo;
    }
  } else {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) return kExitIo;
  }

  const auto s = report.summary();
  std::cerr << "qgates: " << s.records << " records, " << s.passed << " passed, " << s.failed << " failed, "
            << s.audits << " audits, " << s.warnings << " warnings\n";
  return qgates::exit_status(report);
}
