#pragma once

// Named check records shared by every verification routine.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace schrogeo {

enum class CheckStatus { Pass, Fail, Error };

const char* to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  std::string suite;  // set by the runner, empty for direct calls
  CheckStatus status = CheckStatus::Pass;
  double residual = 0.0;
  double tolerance = 0.0;
  // "<": pass iff residual < tolerance.  ">": pass iff residual > tolerance
  // (negative controls).  "==": pass iff expected == got.
  std::string comparison = "<";
  int samples = 0;
  std::uint64_t seed = 0;
  std::string identity;
  std::optional<double> expected;
  std::optional<double> got;
  std::vector<std::pair<std::string, double>> config;
  std::string detail;
};

// Status is derived from the residual; NaN residuals fail.
CheckRecord below(std::string name, double residual, double tolerance, std::string identity);
CheckRecord above(std::string name, double residual, double threshold, std::string identity);
CheckRecord equals(std::string name, double expected, double got, std::string identity);
CheckRecord error_record(std::string name, const std::string& what, std::string identity = {});

class VerificationReport {
 public:
  CheckRecord& add(CheckRecord r);
  void append(const VerificationReport& other);

  const std::vector<CheckRecord>& checks() const { return checks_; }
  std::vector<CheckRecord>& checks() { return checks_; }
  bool passed() const;
  std::size_t count(CheckStatus s) const;
  bool contains(const std::string& name) const;
  // Throws std::out_of_range when absent.
  const CheckRecord& at(const std::string& name) const;

  // Stamps samples/seed/config onto every record that does not carry them yet.
  void stamp(int samples, std::uint64_t seed);
  void stamp_config(const std::vector<std::pair<std::string, double>>& config);
  void stamp_suite(const std::string& suite);
  // Prefixes every record name with `prefix` + ".".
  void prefix(const std::string& prefix);

 private:
  std::vector<CheckRecord> checks_;
};

}  // namespace schrogeo
