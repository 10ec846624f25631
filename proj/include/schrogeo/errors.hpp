#pragma once

#include <stdexcept>
#include <string>

namespace schrogeo {

// Precondition of an operation was not met by the caller.
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

// Division by a jet whose value is zero.
class JetSingularity : public std::domain_error {
 public:
  explicit JetSingularity(const std::string& what) : std::domain_error(what) {}
};

class DegenerateMetric : public std::runtime_error {
 public:
  explicit DegenerateMetric(const std::string& what) : std::runtime_error(what) {}
};

// A map left the coordinate patch it is defined on (vanishing denominator,
// non-finite flow, ...).
class ChartEscape : public std::runtime_error {
 public:
  explicit ChartEscape(const std::string& what) : std::runtime_error(what) {}
};

// A bulk operation was asked to evaluate at r = 0.
class BoundaryPoint : public std::runtime_error {
 public:
  explicit BoundaryPoint(const std::string& what) : std::runtime_error(what) {}
};

// A group element failed one of the stabilizer constraints.
class ConstraintViolation : public std::runtime_error {
 public:
  ConstraintViolation(int index, const std::string& what)
      : std::runtime_error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

}  // namespace schrogeo
