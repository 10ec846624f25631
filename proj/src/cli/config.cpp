#include "schrogeo/cli/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace schrogeo::cli {
namespace {

using nlohmann::json;

constexpr int kMaxDim = 6;

template <typename T>
std::vector<T> scalar_or_list(const json& v, const std::string& key) {
  auto one = [&key](const json& e) -> T {
    if constexpr (std::is_same_v<T, int>) {
      if (!e.is_number_integer()) throw CliError(kExitIo, "config: '" + key + "' must hold integers");
    } else {
      if (!e.is_number()) throw CliError(kExitIo, "config: '" + key + "' must hold numbers");
    }
    return e.get<T>();
  };
  std::vector<T> out;
  if (v.is_array()) {
    for (const json& e : v) out.push_back(one(e));
  } else {
    out.push_back(one(v));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bargmann", "schrodinger-eq", "lie-algebra", "group",
                                              "homogeneous", "boundary", "axioms", "all"};
  return names;
}

bool is_bulk_suite(const std::string& suite) {
  return suite == "homogeneous" || suite == "axioms" || suite == "all";
}

void validate(const SuiteConfig& cfg) {
  if (cfg.suite.empty()) throw CliError(kExitUsage, "missing suite name");
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
    throw CliError(kExitUsage, "unknown suite '" + cfg.suite + "'");
  }
  if (cfg.dims.empty()) throw CliError(kExitValidation, "at least one dimension is required");
  for (int d : cfg.dims) {
    if (d < 1 || d > kMaxDim) {
      throw CliError(kExitValidation, "dimension " + std::to_string(d) + " outside 1.." + std::to_string(kMaxDim));
    }
  }
  if (cfg.samples < 1) throw CliError(kExitValidation, "samples must be at least 1");
  if (!(cfg.tol > 0.0) || !(cfg.fd_tol > 0.0)) throw CliError(kExitValidation, "tolerances must be positive");
  if (cfg.format != "json" && cfg.format != "text") {
    throw CliError(kExitValidation, "format must be json or text");
  }
  for (double mu : cfg.mus) {
    if (!std::isfinite(mu)) throw CliError(kExitValidation, "mu must be finite");
  }
  if (is_bulk_suite(cfg.suite)) {
    if (cfg.lambdas.empty() || cfg.mus.empty()) throw CliError(kExitValidation, "lambda and mu lists must not be empty");
    for (double l : cfg.lambdas) {
      if (!(l < 0.0) || !std::isfinite(l)) {
        std::ostringstream msg;
        msg << "suite '" << cfg.suite << "' needs lambda < 0, got " << l;
        throw CliError(kExitValidation, msg.str());
      }
    }
  }
}

SuiteConfig load_config_file(const std::string& path, SuiteConfig base) {
  std::ifstream in(path);
  if (!in) throw CliError(kExitIo, "cannot read config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw CliError(kExitIo, "malformed config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw CliError(kExitIo, "config file '" + path + "' must hold a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "suite" || key == "format" || key == "out") {
      if (!v.is_string()) throw CliError(kExitIo, "config: '" + key + "' must be a string");
      (key == "suite" ? base.suite : key == "format" ? base.format : base.out) = v.get<std::string>();
    } else if (key == "dim") {
      base.dims = scalar_or_list<int>(v, key);
    } else if (key == "lambda") {
      base.lambdas = scalar_or_list<double>(v, key);
    } else if (key == "mu") {
      base.mus = scalar_or_list<double>(v, key);
    } else if (key == "samples") {
      if (!v.is_number_integer()) throw CliError(kExitIo, "config: 'samples' must be an integer");
      base.samples = v.get<int>();
    } else if (key == "seed") {
      if (!v.is_number_unsigned()) throw CliError(kExitIo, "config: 'seed' must be a non-negative integer");
      base.seed = v.get<std::uint64_t>();
    } else if (key == "tol" || key == "fd_tol") {
      if (!v.is_number()) throw CliError(kExitIo, "config: '" + key + "' must be a number");
      (key == "tol" ? base.tol : base.fd_tol) = v.get<double>();
    } else {
      throw CliError(kExitIo, "config: unknown key '" + key + "'");
    }
  }
  return base;
}

void apply_environment(SuiteConfig& cfg) {
  const char* env = std::getenv("SCHROGEO_SEED");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || env[0] == '-') {
    throw CliError(kExitValidation, std::string("SCHROGEO_SEED is not an unsigned integer: ") + env);
  }
  cfg.seed = v;
}

}  // namespace schrogeo::cli
