#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "geodiff/cli/cli.hpp"
#include "geodiff/error.hpp"

using namespace geodiff;
using namespace geodiff::cli;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no geodiff::Error thrown");
  return ErrorKind::InvariantViolation;
}

std::string body_lines(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line))
    if (!line.starts_with('#')) out += line + '\n';
  return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("defaults") {
  const RunConfig c = parse_config({});
  CHECK(c.suite == Suite::All);
  CHECK(c.cases == 1000);
  CHECK(c.seed == 0);
  CHECK_FALSE(c.tol);
  CHECK(c.h_values == std::vector<double>{0.1, 0.01, 0.001});
  CHECK(c.format == Format::Csv);
}

TEST_CASE("flags") {
  const RunConfig c = parse_config({"--suite", "roots", "--cases", "50"});
  CHECK(c.suite == Suite::Roots);
  CHECK(c.cases == 50);
  const RunConfig d = parse_config({"--h", "0.2,0.02,0.002", "--format", "json", "--tol", "1e-6", "--seed", "9"});
  CHECK(d.h_values == std::vector<double>{0.2, 0.02, 0.002});
  CHECK(d.format == Format::Json);
  CHECK(*d.tol == 1e-6);
  CHECK(d.seed == 9);
}

TEST_CASE("invalid configurations are rejected") {
  CHECK(kind_of([] { parse_config({"--tol", "-1"}); }) == ErrorKind::Config);
  CHECK(kind_of([] { parse_config({"--cases", "0"}); }) == ErrorKind::Config);
  CHECK(kind_of([] { parse_config({"--suite", "everything"}); }) == ErrorKind::Config);
  CHECK(kind_of([] { parse_config({"--h", "0.1,0.2,0.01"}); }) == ErrorKind::Config);
  CHECK(kind_of([] { parse_config({"--bogus"}); }) == ErrorKind::Config);
}

TEST_CASE("config file: unknown keys named, flags take precedence") {
  try {
    apply_config_json(R"({"suite":"scale","mystery":1})", RunConfig{});
    FAIL("expected Config error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Config);
    CHECK(std::string(e.what()).find("mystery") != std::string::npos);
  }
  CHECK(kind_of([] { apply_config_json("{oops", RunConfig{}); }) == ErrorKind::Config);

  const auto path = temp_file("geodiff_test_cfg.json", R"({"suite":"scale","cases":7,"seed":3,"h":[0.5,0.05,0.005]})");
  const RunConfig c = parse_config({"--config", path.string(), "--cases", "11"});
  CHECK(c.suite == Suite::Scale);
  CHECK(c.cases == 11);
  CHECK(c.seed == 3);
  CHECK(c.h_values == std::vector<double>{0.5, 0.05, 0.005});
}

TEST_CASE("help and version are informational") {
  CHECK_THROWS_AS(parse_config({"--help"}), InfoRequested);
  CHECK_THROWS_AS(parse_config({"--version"}), InfoRequested);
}

TEST_CASE("scale suite, 100 cases, seed 42") {
  RunConfig c;
  c.suite = Suite::Scale;
  c.cases = 100;
  c.seed = 42;
  const Report r = run(c);
  CHECK(r.summary.failures == 0);
  for (const auto& rec : r.records)
    if (rec.op.find(':') == std::string::npos) CHECK(rec.rel_err < 1e-10);
}

TEST_CASE("derive suite reports an order per anchored entry") {
  RunConfig c;
  c.suite = Suite::Derive;
  c.cases = 10;
  const Report r = run(c);
  CHECK(r.summary.failures == 0);
  CHECK(r.summary.fitted_orders.size() == 17);
  CHECK(r.summary.fitted_orders.count("pythagoras") == 1);
  CHECK_FALSE(r.summary.fitted_orders.at("thales"));
  CHECK(r.summary.fitted_orders.count("ptolemy") == 0);
}

TEST_CASE("summary is recomputable from records") {
  RunConfig c;
  c.suite = Suite::Theorems;
  c.cases = 20;
  const Report r = run(c);
  CHECK(r.records.size() == 20 * 17);
  const Summary s = summarize(r.records);
  CHECK(s.failures == r.summary.failures);
  CHECK(s.max_error == r.summary.max_error);
}

TEST_CASE("a tightened tolerance produces failures and exit 1") {
  std::ostringstream err, info;
  const auto out = std::filesystem::temp_directory_path() / "geodiff_test_tight.csv";
  CHECK(main_entry({"--suite", "theorems", "--cases", "5", "--tol", "1e-300", "--output", out.string()}, err,
                   info) == kFailures);
}

TEST_CASE("exit codes") {
  std::ostringstream err, info;
  const auto out = std::filesystem::temp_directory_path() / "geodiff_test_ok.json";
  CHECK(main_entry({"--suite", "roots", "--cases", "5", "--format", "json", "--output", out.string()}, err, info) ==
        kOk);
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  CHECK(j.at("summary").at("failures") == 0);
  CHECK(j.at("records").size() == 10);
  CHECK(j.at("config").at("suite") == "roots");

  CHECK(main_entry({"--tol", "-1"}, err, info) == kUsage);
  CHECK(main_entry({"--suite", "scale", "--cases", "1", "--output", "/nonexistent-dir/x.csv"}, err, info) == kIo);
  CHECK(main_entry({"--version"}, err, info) == kOk);
  CHECK(info.str().find("geodiff") != std::string::npos);
}

TEST_CASE("same seed, same records") {
  RunConfig c;
  c.suite = Suite::All;
  c.cases = 15;
  c.seed = 77;
  std::ostringstream a, b;
  write_csv(run(c), a);
  write_csv(run(c), b);
  CHECK(body_lines(a.str()) == body_lines(b.str()));
  CHECK(body_lines(a.str()).starts_with("suite,case_id,op,in0,in1,in2,in3,in4,expected,actual,rel_err,pass\n"));

  c.seed = 78;
  std::ostringstream d;
  write_csv(run(c), d);
  CHECK(body_lines(a.str()) != body_lines(d.str()));
}
