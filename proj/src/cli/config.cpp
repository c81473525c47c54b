#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "geodiff/cli/cli.hpp"
#include "geodiff/error.hpp"
#include "json.hpp"

namespace geodiff::cli {
namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorKind::Config, msg); }

Suite parse_suite(const std::string& s) {
  if (s == "theorems") return Suite::Theorems;
  if (s == "derive") return Suite::Derive;
  if (s == "scale") return Suite::Scale;
  if (s == "roots") return Suite::Roots;
  if (s == "all") return Suite::All;
  config_error("suite: unknown value '" + s + "' (theorems, derive, scale, roots, all)");
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  config_error("format: unknown value '" + s + "' (csv, json)");
}

std::uint64_t json_count(const json& v, const std::string& key) {
  if (!v.is_number_integer()) config_error("config key '" + key + "' must be a non-negative integer");
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  const auto i = v.get<std::int64_t>();
  if (i < 0) config_error("config key '" + key + "' must be a non-negative integer");
  return static_cast<std::uint64_t>(i);
}

double json_number(const json& v, const std::string& key) {
  if (!v.is_number()) config_error("config key '" + key + "' must be a number");
  return v.get<double>();
}

std::string json_string(const json& v, const std::string& key) {
  if (!v.is_string()) config_error("config key '" + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<double> split_steps(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) config_error("h: cannot parse step '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::string to_string(Suite s) {
  switch (s) {
    case Suite::Theorems: return "theorems";
    case Suite::Derive: return "derive";
    case Suite::Scale: return "scale";
    case Suite::Roots: return "roots";
    case Suite::All: return "all";
  }
  return "unknown";
}

std::string to_string(Format f) { return f == Format::Csv ? "csv" : "json"; }

RunConfig apply_config_json(const std::string& text, RunConfig cfg) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    config_error(std::string("malformed config file: ") + e.what());
  }
  if (!doc.is_object()) config_error("config file must hold a JSON object");
  for (const auto& [key, v] : doc.items()) {
    if (key == "suite") {
      cfg.suite = parse_suite(json_string(v, key));
    } else if (key == "cases") {
      cfg.cases = json_count(v, key);
    } else if (key == "seed") {
      cfg.seed = json_count(v, key);
    } else if (key == "tol") {
      if (v.is_null()) {
        cfg.tol.reset();
      } else {
        cfg.tol = json_number(v, key);
      }
    } else if (key == "h") {
      if (v.is_string()) {
        cfg.h_values = split_steps(v.get<std::string>());
      } else if (v.is_array()) {
        cfg.h_values.clear();
        for (const auto& e : v) cfg.h_values.push_back(json_number(e, key));
      } else {
        config_error("config key 'h' must be an array of numbers or a comma-separated string");
      }
    } else if (key == "output") {
      cfg.output = json_string(v, key);
    } else if (key == "format") {
      cfg.format = parse_format(json_string(v, key));
    } else {
      config_error("unknown config key '" + key + "'");
    }
  }
  return cfg;
}

void validate(const RunConfig& cfg) {
  if (cfg.cases < 1) config_error("cases: must be at least 1");
  if (cfg.tol && !(*cfg.tol > 0.0 && std::isfinite(*cfg.tol))) config_error("tol: must be positive");
  if (cfg.h_values.size() < 3) config_error("h: the order fit needs at least three step sizes");
  for (std::size_t i = 0; i < cfg.h_values.size(); ++i) {
    const double h = cfg.h_values[i];
    if (!(h > 0.0 && std::isfinite(h))) config_error("h: step sizes must be positive");
    if (i > 0 && !(h < cfg.h_values[i - 1])) config_error("h: step sizes must be strictly decreasing");
  }
  if (cfg.output.empty()) config_error("output: path must not be empty");
}

RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Verification runner for calculus-derived Euclidean theorems", "geodiff"};
  app.set_help_flag("--help", "print this help and exit");
  app.set_version_flag("--version", std::string("geodiff ") + GEODIFF_VERSION);

  std::string suite, format, output, config_path, h_text;
  std::uint64_t cases = 0, seed = 0;
  double tol = 0.0;
  auto* o_suite = app.add_option("--suite", suite, "theorems | derive | scale | roots | all");
  auto* o_cases = app.add_option("--cases", cases, "random cases per suite (default 1000)");
  auto* o_seed = app.add_option("--seed", seed, "64-bit seed (default 0)");
  auto* o_tol = app.add_option("--tol", tol, "override the primary tolerance of each suite");
  auto* o_h = app.add_option("--h", h_text, "comma-separated, strictly decreasing RK4 steps");
  auto* o_output = app.add_option("--output", output, "report path, '-' for stdout");
  auto* o_format = app.add_option("--format", format, "csv | json");
  app.add_option("--config", config_path, "JSON file with the same keys");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw InfoRequested{app.help()};
  } catch (const CLI::CallForVersion&) {
    throw InfoRequested{std::string("geodiff ") + GEODIFF_VERSION + "\n"};
  } catch (const CLI::ParseError& e) {
    config_error(e.what());
  }

  RunConfig cfg;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) config_error("config: cannot read '" + config_path + "'");
    std::stringstream body;
    body << in.rdbuf();
    cfg = apply_config_json(body.str(), cfg);
  }
  if (o_suite->count()) cfg.suite = parse_suite(suite);
  if (o_cases->count()) cfg.cases = cases;
  if (o_seed->count()) cfg.seed = seed;
  if (o_tol->count()) cfg.tol = tol;
  if (o_h->count()) cfg.h_values = split_steps(h_text);
  if (o_output->count()) cfg.output = output;
  if (o_format->count()) cfg.format = parse_format(format);
  validate(cfg);
  return cfg;
}

}  // namespace geodiff::cli
