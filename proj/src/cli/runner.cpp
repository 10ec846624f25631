#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "schrogeo/cli/runner.hpp"

namespace schrogeo::cli {
namespace {

using nlohmann::ordered_json;

ordered_json config_json(const SuiteConfig& c) {
  ordered_json j;
  j["suite"] = c.suite;
  j["dim"] = c.dims;
  j["lambda"] = c.lambdas;
  j["mu"] = c.mus;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["tol"] = c.tol;
  j["fd_tol"] = c.fd_tol;
  j["format"] = c.format;
  return j;
}

ordered_json check_json(const CheckRecord& r) {
  ordered_json j;
  j["name"] = r.name;
  j["suite"] = r.suite;
  j["status"] = to_string(r.status);
  j["residual"] = r.residual;
  j["tolerance"] = r.tolerance;
  j["comparison"] = r.comparison;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["identity"] = r.identity;
  ordered_json cfg = ordered_json::object();
  for (const auto& [key, value] : r.config) cfg[key] = value;
  j["config"] = cfg;
  if (r.expected) j["expected"] = *r.expected;
  if (r.got) j["got"] = *r.got;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

// Flags given on the command line; unset ones leave lower layers untouched.
struct Overrides {
  std::string suite;
  std::vector<int> dims;
  std::vector<double> lambdas, mus;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol, fd_tol;
  std::optional<std::string> format, out;
  std::string config_path;
};

SuiteConfig compose(const Overrides& o) {
  SuiteConfig cfg;
  if (!o.config_path.empty()) cfg = load_config_file(o.config_path, cfg);
  apply_environment(cfg);
  if (!o.suite.empty()) cfg.suite = o.suite;
  if (!o.dims.empty()) cfg.dims = o.dims;
  if (!o.lambdas.empty()) cfg.lambdas = o.lambdas;
  if (!o.mus.empty()) cfg.mus = o.mus;
  if (o.samples) cfg.samples = *o.samples;
  if (o.seed) cfg.seed = *o.seed;
  if (o.tol) cfg.tol = *o.tol;
  if (o.fd_tol) cfg.fd_tol = *o.fd_tol;
  if (o.format) cfg.format = *o.format;
  if (o.out) cfg.out = *o.out;
  return cfg;
}

}  // namespace

std::string emit_json(const RunReport& r) {
  ordered_json j;
  j["version"] = "1";
  j["config"] = config_json(r.config);
  ordered_json checks = ordered_json::array();
  for (const CheckRecord& c : r.report.checks()) checks.push_back(check_json(c));
  j["checks"] = std::move(checks);
  const auto& rep = r.report;
  j["summary"] = {{"total", rep.checks().size()},
                  {"pass", rep.count(CheckStatus::Pass)},
                  {"fail", rep.count(CheckStatus::Fail)},
                  {"error", rep.count(CheckStatus::Error)}};
  return j.dump(2) + "\n";
}

std::string emit_text(const RunReport& r) {
  std::ostringstream os;
  os.precision(6);
  for (const CheckRecord& c : r.report.checks()) {
    os << to_string(c.status) << ' ' << c.suite << ' ' << c.name;
    for (const auto& [key, value] : c.config) os << ' ' << key << '=' << value;
    os << " residual=" << c.residual << ' ' << c.comparison << ' ' << c.tolerance;
    if (c.expected) os << " expected=" << *c.expected;
    if (c.got) os << " got=" << *c.got;
    if (!c.detail.empty()) os << " (" << c.detail << ')';
    os << '\n';
  }
  os << "summary: " << r.report.checks().size() << " checks, " << r.report.count(CheckStatus::Pass) << " pass, "
     << r.report.count(CheckStatus::Fail) << " fail, " << r.report.count(CheckStatus::Error) << " error\n";
  return os.str();
}

int exit_code(const RunReport& r) { return r.report.passed() ? kExitOk : kExitCheckFailed; }

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification runner for Schrodinger geometry identities", "schrogeo"};
  Overrides o;
  std::string suites;
  for (const std::string& s : suite_names()) suites += (suites.empty() ? "" : ", ") + s;
  app.add_option("suite", o.suite, "Suite to run: " + suites);
  app.add_option("--dim", o.dims, "Spatial dimension (repeatable)")->allow_extra_args(false);
  app.add_option("--lambda", o.lambdas, "Bulk parameter lambda (repeatable)")->allow_extra_args(false);
  app.add_option("--mu", o.mus, "Null-fluid parameter mu (repeatable)")->allow_extra_args(false);
  app.add_option("--samples", o.samples, "Sample points per check");
  app.add_option("--seed", o.seed, "Random seed (overrides SCHROGEO_SEED)");
  app.add_option("--tol", o.tol, "Tolerance of autodiff identities");
  app.add_option("--fd-tol", o.fd_tol, "Tolerance of finite-difference cross-checks");
  app.add_option("--format", o.format, "Report format: json or text");
  app.add_option("--config", o.config_path, "JSON configuration file");
  app.add_option("--out", o.out, "Write the report to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "schrogeo: " << e.what() << "\n" << "run 'schrogeo --help' for usage\n";
    return kExitUsage;
  }

  try {
    const SuiteConfig cfg = compose(o);
    validate(cfg);

    std::ofstream file;
    if (!cfg.out.empty()) {
      file.open(cfg.out, std::ios::binary | std::ios::trunc);
      if (!file) throw CliError(kExitIo, "cannot write report to '" + cfg.out + "'");
    }

    const auto start = std::chrono::steady_clock::now();
    const RunReport run = run_suite(cfg);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    const std::string text = cfg.format == "text" ? emit_text(run) : emit_json(run);
    std::ostream& sink = cfg.out.empty() ? out : static_cast<std::ostream&>(file);
    sink << text;
    sink.flush();
    if (!sink) throw CliError(kExitIo, "failed writing report");

    err << "schrogeo: " << cfg.suite << " finished in " << elapsed.count() << " s\n";
    return exit_code(run);
  } catch (const CliError& e) {
    err << "schrogeo: " << e.what() << "\n";
    return e.code();
  }
}

}  // namespace schrogeo::cli
