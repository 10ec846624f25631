#include "schrogeo/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schrogeo {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Error:
      return "ERROR";
  }
  return "ERROR";
}

CheckRecord below(std::string name, double residual, double tolerance, std::string identity) {
  CheckRecord r;
  r.name = std::move(name);
  r.residual = residual;
  r.tolerance = tolerance;
  r.comparison = "<";
  r.identity = std::move(identity);
  r.status = (std::isfinite(residual) && residual < tolerance) ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

CheckRecord above(std::string name, double residual, double threshold, std::string identity) {
  CheckRecord r;
  r.name = std::move(name);
  r.residual = residual;
  r.tolerance = threshold;
  r.comparison = ">";
  r.identity = std::move(identity);
  r.status = (std::isfinite(residual) && residual > threshold) ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

CheckRecord equals(std::string name, double expected, double got, std::string identity) {
  CheckRecord r;
  r.name = std::move(name);
  r.expected = expected;
  r.got = got;
  r.residual = std::abs(expected - got);
  r.tolerance = 0.0;
  r.comparison = "==";
  r.identity = std::move(identity);
  r.status = expected == got ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

CheckRecord error_record(std::string name, const std::string& what, std::string identity) {
  CheckRecord r;
  r.name = std::move(name);
  r.status = CheckStatus::Error;
  r.residual = std::nan("");
  r.identity = std::move(identity);
  r.detail = what;
  return r;
}

CheckRecord& VerificationReport::add(CheckRecord r) {
  checks_.push_back(std::move(r));
  return checks_.back();
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const CheckRecord& r) { return r.status == CheckStatus::Pass; });
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(
      checks_.begin(), checks_.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

bool VerificationReport::contains(const std::string& name) const {
  return std::any_of(checks_.begin(), checks_.end(),
                     [&name](const CheckRecord& r) { return r.name == name; });
}

const CheckRecord& VerificationReport::at(const std::string& name) const {
  for (const CheckRecord& r : checks_) {
    if (r.name == name) return r;
  }
  throw std::out_of_range("no check named '" + name + "'");
}

void VerificationReport::stamp(int samples, std::uint64_t seed) {
  for (CheckRecord& r : checks_) {
    if (r.samples == 0) r.samples = samples;
    if (r.seed == 0) r.seed = seed;
  }
}

void VerificationReport::stamp_config(const std::vector<std::pair<std::string, double>>& config) {
  for (CheckRecord& r : checks_) {
    if (r.config.empty()) r.config = config;
  }
}

void VerificationReport::stamp_suite(const std::string& suite) {
  for (CheckRecord& r : checks_) {
    if (r.suite.empty()) r.suite = suite;
  }
}

void VerificationReport::prefix(const std::string& p) {
  for (CheckRecord& r : checks_) r.name = p + "." + r.name;
}

}  // namespace schrogeo
