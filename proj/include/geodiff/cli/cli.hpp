#pragma once

// Verification runner behind the geodiff executable: configuration, the four
// suites, and the CSV/JSON report.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace geodiff::cli {

enum class Suite { Theorems, Derive, Scale, Roots, All };
enum class Format { Csv, Json };

std::string to_string(Suite s);
std::string to_string(Format f);

struct RunConfig {
  Suite suite = Suite::All;
  std::uint64_t cases = 1000;
  std::uint64_t seed = 0;
  /// Replaces the primary tolerance of each suite when set.
  std::optional<double> tol;
  std::vector<double> h_values{1e-1, 1e-2, 1e-3};
  std::string output = "-";  // "-" is stdout
  Format format = Format::Csv;
};

/// --help / --version: the text to print, exit status 0.
struct InfoRequested {
  std::string text;
};

/// args excludes the program name. Flags override the --config JSON file,
/// which overrides the defaults. Throws ErrorKind::Config naming the
/// offending key or flag, or InfoRequested.
RunConfig parse_config(const std::vector<std::string>& args);

/// Parses the JSON config body on top of `base`; unknown keys are rejected.
RunConfig apply_config_json(const std::string& text, RunConfig base);

/// Throws ErrorKind::Config unless cases >= 1, tol > 0 and h_values holds at
/// least three positive, strictly decreasing steps.
void validate(const RunConfig& cfg);

struct Record {
  std::string suite;
  std::uint64_t case_id = 0;
  std::string op;
  std::array<std::optional<double>, 5> in{};
  double expected = 0.0;
  double actual = 0.0;
  double rel_err = 0.0;
  bool pass = false;
};

struct Summary {
  double max_error = 0.0;    // over finite rel_err
  std::uint64_t failures = 0;
  /// Derive suite only; nullopt marks entries that RK4 integrates exactly.
  std::map<std::string, std::optional<double>> fitted_orders;
};

struct Report {
  RunConfig config;
  std::string tool_version;
  std::string generated_at;
  std::string isa;
  std::vector<Record> records;
  Summary summary;
};

/// max_error and failures recomputed from the records; fitted_orders is
/// left empty.
Summary summarize(const std::vector<Record>& records);

Report run(const RunConfig& cfg);

// Per-suite runners, appended to `out` in case-id order.
void run_theorems(const RunConfig& cfg, std::vector<Record>& out);
void run_derive(const RunConfig& cfg, std::vector<Record>& out, std::map<std::string, std::optional<double>>& orders);
void run_scale(const RunConfig& cfg, std::vector<Record>& out);
void run_roots(const RunConfig& cfg, std::vector<Record>& out);

/// CSV: '#'-prefixed header lines (version, timestamp, summary), then the
/// column row and one line per record.
void write_csv(const Report& r, std::ostream& os);
/// JSON: {config, summary, records}; the timestamp lives in summary.
void write_json(const Report& r, std::ostream& os);
/// Writes to cfg.output in cfg.format. Throws ErrorKind::Io.
void write_report(const Report& r);

enum ExitCode : int { kOk = 0, kFailures = 1, kUsage = 2, kIo = 3 };

/// Full driver used by main(): parse, run, write. Diagnostics go to err.
int main_entry(const std::vector<std::string>& args, std::ostream& err, std::ostream& info);

}  // namespace geodiff::cli
