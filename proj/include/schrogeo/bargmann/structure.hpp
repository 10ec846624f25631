#pragma once

#include <Eigen/Core>

#include <cstdint>

#include "schrogeo/geometry/fields.hpp"
#include "schrogeo/report.hpp"

namespace schrogeo::bargmann {

// A Lorentz metric with a null, parallel vector field xi and its clock
// theta = g(xi).
struct BargmannStructure {
  MetricField metric;
  VectorField xi;
  OneForm theta;
  int d = 1;
};

BargmannStructure flat_structure(int d);

// Same xi and clock, metric replaced by Omega^2 g. The clock is rescaled to
// remain g(xi).
BargmannStructure rescaled_structure(const BargmannStructure& b, const ScalarField& omega);

// Samples of nullity g(xi, xi), nabla xi, d theta, Div xi and theta - g(xi),
// drawn from [-1, 1]^n. Points where the metric degenerates are resampled and
// counted in the records' detail.
VerificationReport bargmann_axioms_check(const BargmannStructure& b, int samples, std::uint64_t seed,
                                         double tol = 1e-10);

struct ConformalEquivalence {
  bool equivalent = false;
  VerificationReport report;
};

// Omega^2 g is Bargmann-equivalent to g iff d Omega ^ theta vanishes.
// Throws ContractViolation when Omega <= 0 at a sample.
ConformalEquivalence conformal_equivalence_check(const ScalarField& omega, const BargmannStructure& b,
                                                 int samples, std::uint64_t seed, double tol = 1e-10);

}  // namespace schrogeo::bargmann
