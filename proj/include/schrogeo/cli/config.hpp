#pragma once

// Run configuration for the verification runner. A configuration file is a
// flat JSON object whose keys mirror the command-line flags:
//
//   {"suite": "axioms", "dim": [3], "lambda": -0.5, "mu": [1, 2],
//    "samples": 20, "seed": 42, "tol": 1e-8, "fd_tol": 1e-5,
//    "format": "json", "out": "report.json"}

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace schrogeo::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitCheckFailed = 3,
  kExitIo = 4,
};

// Carries the exit code the runner should terminate with.
class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

struct SuiteConfig {
  std::string suite;
  std::vector<int> dims{1, 2, 3};
  std::vector<double> lambdas{-2.0, -1.0, -0.5, -0.3};
  std::vector<double> mus{-1.0, 0.0, 1.0, 2.0};
  int samples = 20;
  std::uint64_t seed = 42;
  double tol = 1e-8;     // tolerance of the autodiff identities
  double fd_tol = 1e-5;  // tolerance of finite-difference cross-checks
  std::string format = "json";
  std::string out;       // empty: standard output
};

const std::vector<std::string>& suite_names();
// Suites that build the bulk metrics and therefore need lambda < 0.
bool is_bulk_suite(const std::string& suite);

// Throws CliError: kExitUsage for a missing or unknown suite, kExitValidation
// for out-of-range values.
void validate(const SuiteConfig& cfg);

// Reads a configuration file over `base`. Throws CliError(kExitIo) when the
// file cannot be read or is not a flat JSON object of known keys and types.
SuiteConfig load_config_file(const std::string& path, SuiteConfig base = {});

// Applies the SCHROGEO_SEED environment variable, if set. Throws
// CliError(kExitValidation) when it is not an unsigned integer.
void apply_environment(SuiteConfig& cfg);

}  // namespace schrogeo::cli
