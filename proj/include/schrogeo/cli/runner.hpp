#pragma once

#include <iosfwd>
#include <string>

#include "schrogeo/cli/config.hpp"
#include "schrogeo/report.hpp"

namespace schrogeo::cli {

struct RunReport {
  SuiteConfig config;
  VerificationReport report;  // sorted by check name, then suite
};

// Runs one suite. Evaluation failures inside a check become ERROR records
// rather than exceptions. Assumes a validated configuration.
RunReport run_suite(const SuiteConfig& cfg);

// Schema "1": {version, config, checks[], summary}. Byte-identical for equal
// configurations.
std::string emit_json(const RunReport& r);
// One line per check, prefixed with PASS, FAIL or ERROR, then a summary line.
std::string emit_text(const RunReport& r);

// kExitOk when every check passed, kExitCheckFailed otherwise.
int exit_code(const RunReport& r);

// Full command-line entry point: parses argv, runs, writes the report and
// returns the exit code. Wall-clock time goes to `err` only.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schrogeo::cli
