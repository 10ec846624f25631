#pragma once

#include <cstdint>

#include "schrogeo/homogeneous/metrics.hpp"
#include "schrogeo/report.hpp"

namespace schrogeo::homogeneous {

struct AuditOptions {
  double tol = 1e-8;
  int samples = 20;
  std::uint64_t seed = 42;
};

// Audit of the three defining properties of a Schroedinger manifold for
// (g_{lambda,mu}, xi_hat). Record names start with "axiom1.", "axiom2." or
// "axiom3." so a failure names its item; the remaining records are
// "conformal_infinity" and "defining_function".
//
//   axiom1: xi_hat = d/ds extends to the boundary as xi (null, Killing)
//   axiom2: g^{-1} - mu xi (x) xi = O(r^2) at the boundary, and mu = 1
//   axiom3: g+ = g + mu theta (x) theta is Einstein, Ric + (d + 2) g+ = 0
VerificationReport schrodinger_axiom_audit(const SchrodingerManifoldConfig& cfg, const AuditOptions& opt = {});

// Ratio window for the two-scale decay test at r = 1e-2 and r = 1e-3.
inline constexpr double kDecayRatioLow = 80.0;
inline constexpr double kDecayRatioHigh = 120.0;

}  // namespace schrogeo::homogeneous
