#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "geodiff/cli/cli.hpp"
#include "geodiff/error.hpp"
#include "geodiff/geom/batch.hpp"
#include "json.hpp"

namespace geodiff::cli {
namespace {

using nlohmann::ordered_json;

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// Shortest decimal form that round-trips.
std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

ordered_json json_num(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["suite"] = to_string(c.suite);
  j["cases"] = c.cases;
  j["seed"] = c.seed;
  j["tol"] = c.tol ? ordered_json(*c.tol) : ordered_json(nullptr);
  j["h"] = c.h_values;
  j["output"] = c.output;
  j["format"] = to_string(c.format);
  return j;
}

ordered_json orders_json(const Summary& s) {
  ordered_json j = ordered_json::object();
  for (const auto& [name, p] : s.fitted_orders) j[name] = p ? ordered_json(*p) : ordered_json(nullptr);
  return j;
}

}  // namespace

Summary summarize(const std::vector<Record>& records) {
  Summary s;
  for (const auto& r : records) {
    if (std::isfinite(r.rel_err)) s.max_error = std::max(s.max_error, r.rel_err);
    if (!r.pass) ++s.failures;
  }
  return s;
}

Report run(const RunConfig& cfg) {
  validate(cfg);
  Report rep;
  rep.config = cfg;
  rep.tool_version = GEODIFF_VERSION;
  rep.generated_at = utc_now();
  rep.isa = std::string(geom::batch::isa_name(geom::batch::best_isa()));

  const bool all = cfg.suite == Suite::All;
  std::map<std::string, std::optional<double>> orders;
  if (all || cfg.suite == Suite::Theorems) run_theorems(cfg, rep.records);
  if (all || cfg.suite == Suite::Derive) run_derive(cfg, rep.records, orders);
  if (all || cfg.suite == Suite::Scale) run_scale(cfg, rep.records);
  if (all || cfg.suite == Suite::Roots) run_roots(cfg, rep.records);
  rep.summary = summarize(rep.records);
  rep.summary.fitted_orders = std::move(orders);
  return rep;
}

void write_csv(const Report& r, std::ostream& os) {
  os << "# tool_version=" << r.tool_version << "\n";
  os << "# generated_at=" << r.generated_at << "\n";
  os << "# isa=" << r.isa << "\n";
  os << "# config=" << config_json(r.config).dump() << "\n";
  os << "# summary: records=" << r.records.size() << " failures=" << r.summary.failures
     << " max_error=" << num(r.summary.max_error) << "\n";
  if (!r.summary.fitted_orders.empty()) os << "# fitted_orders=" << orders_json(r.summary).dump() << "\n";
  os << "suite,case_id,op,in0,in1,in2,in3,in4,expected,actual,rel_err,pass\n";
  for (const auto& rec : r.records) {
    os << rec.suite << ',' << rec.case_id << ',' << rec.op;
    for (const auto& v : rec.in) {
      os << ',';
      if (v) os << num(*v);
    }
    os << ',' << num(rec.expected) << ',' << num(rec.actual) << ',' << num(rec.rel_err) << ','
       << (rec.pass ? "true" : "false") << '\n';
  }
}

void write_json(const Report& r, std::ostream& os) {
  ordered_json doc;
  doc["config"] = config_json(r.config);
  ordered_json s;
  s["tool_version"] = r.tool_version;
  s["generated_at"] = r.generated_at;
  s["isa"] = r.isa;
  s["records"] = r.records.size();
  s["failures"] = r.summary.failures;
  s["max_error"] = r.summary.max_error;
  s["fitted_orders"] = orders_json(r.summary);
  doc["summary"] = s;
  ordered_json recs = ordered_json::array();
  for (const auto& rec : r.records) {
    ordered_json j;
    j["suite"] = rec.suite;
    j["case_id"] = rec.case_id;
    j["op"] = rec.op;
    for (std::size_t k = 0; k < rec.in.size(); ++k) {
      j["in" + std::to_string(k)] = rec.in[k] ? json_num(*rec.in[k]) : ordered_json(nullptr);
    }
    j["expected"] = json_num(rec.expected);
    j["actual"] = json_num(rec.actual);
    j["rel_err"] = json_num(rec.rel_err);
    j["pass"] = rec.pass;
    recs.push_back(std::move(j));
  }
  doc["records"] = std::move(recs);
  os << doc.dump(1) << '\n';
}

void write_report(const Report& r) {
  auto emit = [&](std::ostream& os) {
    if (r.config.format == Format::Json) {
      write_json(r, os);
    } else {
      write_csv(r, os);
    }
  };
  if (r.config.output == "-") {
    emit(std::cout);
    std::cout.flush();
    if (!std::cout) throw Error(ErrorKind::Io, "cannot write report to stdout");
    return;
  }
  std::ofstream out(r.config.output, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + r.config.output + "' for writing");
  emit(out);
  out.close();
  if (!out) throw Error(ErrorKind::Io, "write to '" + r.config.output + "' failed");
}

int main_entry(const std::vector<std::string>& args, std::ostream& err, std::ostream& info) {
  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const InfoRequested& i) {
    info << i.text;
    return kOk;
  } catch (const Error& e) {
    err << "geodiff: " << e.what() << "\nRun with --help for usage.\n";
    return kUsage;
  }
  try {
    const Report rep = run(cfg);
    write_report(rep);
    if (rep.summary.failures > 0) {
      err << "geodiff: " << rep.summary.failures << " of " << rep.records.size() << " records failed\n";
      return kFailures;
    }
    return kOk;
  } catch (const Error& e) {
    err << "geodiff: " << e.what() << '\n';
    return e.kind() == ErrorKind::Io ? kIo : kUsage;
  }
}

}  // namespace geodiff::cli
