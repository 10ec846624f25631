#pragma once

// Tensors induced on the bulk by the ambient space, each computed twice: once
// by contracting ambient vectors along the embedding, once from the chart
// formulas of metrics.hpp.

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "schrogeo/homogeneous/embedding.hpp"
#include "schrogeo/numkernel/sampler.hpp"
#include "schrogeo/report.hpp"

namespace schrogeo::homogeneous {

struct DualValue {
  double ambient = 0.0;
  double chart = 0.0;
  double difference() const { return ambient - chart; }
};

// Path A: dQbar d'Q - mu theta(d) theta(d').  Path B: chart Gram matrix.
DualValue induced_metric(const SchrodingerManifoldConfig& cfg, const EmbeddedPoint& p, const Eigen::VectorXd& delta,
                         const Eigen::VectorXd& delta_prime);

// Ambient -Qbar Z0 dQ against the chart value dt(delta) (-2 lambda) / r^2.
DualValue theta_hat(const SchrodingerManifoldConfig& cfg, const EmbeddedPoint& p, const Eigen::VectorXd& delta);

// Records: xi_hat_pushforward, xi_hat_nonzero, xi_hat_null, xi_hat_killing.
VerificationReport xi_hat_consistency(const SchrodingerManifoldConfig& cfg, const EmbeddedPoint& p,
                                      double tol = 1e-10);

struct EinsteinResidual {
  Eigen::MatrixXd residual;   // Ric(g+) + (d + 2) g+
  Eigen::MatrixXd predicted;  // factor * g+
  double factor = 0.0;        // (d + 2)(1 + 2 lambda) / (2 lambda)
  double mismatch() const { return (residual - predicted).cwiseAbs().maxCoeff(); }
  double norm() const { return residual.cwiseAbs().maxCoeff(); }
};
// Uses g+ = g_{lambda,0}; throws ContractViolation unless cfg.mu == 0.
EinsteinResidual einstein_residual(const SchrodingerManifoldConfig& cfg, const EmbeddedPoint& p);

struct NullFluidResidual {
  // Ric(g) - ((d + 2) / (2 lambda)) g + mu (d + 4) / (2 lambda) theta (x) theta
  Eigen::MatrixXd residual;
  double cosmological_constant = 0.0;  // (d + 1)(d + 2) / (4 lambda)
  double norm() const { return residual.cwiseAbs().maxCoeff(); }
};
NullFluidResidual nullfluid_residual(const SchrodingerManifoldConfig& cfg, const EmbeddedPoint& p);

// Bulk chart box used by the sampled checks: x, t, s in [-1, 1], r in [0.5, 2].
std::vector<Interval> bulk_box(int d);

// Dual-path agreement of the metric and of theta on random tangent pairs,
// plus signature and integrability: records dual_metric, dual_theta,
// signature, integrability.
VerificationReport induced_tensor_check(const SchrodingerManifoldConfig& cfg, int samples, std::uint64_t seed,
                                        double tol = 1e-10);

}  // namespace schrogeo::homogeneous
