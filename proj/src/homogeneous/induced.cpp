#include "schrogeo/homogeneous/induced.hpp"

#include <algorithm>
#include <cmath>

#include "schrogeo/ambient/ambient.hpp"
#include "schrogeo/errors.hpp"
#include "schrogeo/geometry/tensor_calculus.hpp"
#include "schrogeo/numkernel/linalg.hpp"

namespace schrogeo::homogeneous {
namespace {

void require_tangent(const EmbeddedPoint& p, const Eigen::VectorXd& v) {
  if (v.size() != p.chart.size()) throw ContractViolation("tangent vector must have d + 3 components");
}

double ambient_theta(const EmbeddedPoint& p, const Eigen::VectorXd& dq) {
  const Eigen::MatrixXd g = ambient::ambient_gram(p.d);
  const Eigen::MatrixXd z0 = ambient::build_Z0(p.d).z;
  return -p.q.dot(g * (z0 * dq));
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

std::vector<Interval> bulk_box(int d) {
  std::vector<Interval> box(static_cast<std::size_t>(d + 3), Interval{-1.0, 1.0});
  box.back() = Interval{0.5, 2.0};
  return box;
}

DualValue induced_metric(const SchrodingerManifoldConfig& cfg, const EmbeddedPoint& p, const Eigen::VectorXd& delta,
                         const Eigen::VectorXd& delta_prime) {
  require_tangent(p, delta);
  require_tangent(p, delta_prime);
  const Eigen::MatrixXd jac = embedding_jacobian(p);
  const Eigen::VectorXd dq = jac * delta, dpq = jac * delta_prime;
  const Eigen::MatrixXd g = ambient::ambient_gram(p.d);
  DualValue out;
  out.ambient = dq.dot(g * dpq) - cfg.mu * ambient_theta(p, dq) * ambient_theta(p, dpq);
  out.chart = delta.dot(schrodinger_gram<double>(p.chart, p.d, cfg.lambda, cfg.mu) * delta_prime);
  return out;
}

DualValue theta_hat(const SchrodingerManifoldConfig& cfg, const EmbeddedPoint& p, const Eigen::VectorXd& delta) {
  require_tangent(p, delta);
  DualValue out;
  out.ambient = ambient_theta(p, embedding_jacobian(p) * delta);
  out.chart = theta_hat_components<double>(p.chart, p.d, cfg.lambda).dot(delta);
  return out;
}

VerificationReport xi_hat_consistency(const SchrodingerManifoldConfig& cfg, const EmbeddedPoint& p, double tol) {
  const int d = p.d;
  const Eigen::VectorXd xi = Eigen::VectorXd::Unit(d + 3, d + 1);
  const Eigen::VectorXd z0q = ambient::build_Z0(d).z * p.q;
  const Eigen::VectorXd pushed = embedding_jacobian(p) * xi;
  const MetricField m = schrodinger_metric(cfg);

  VerificationReport report;
  report.add(below("xi_hat_pushforward", max_abs(pushed - z0q), tol, "Q_* (d/ds) = Z0 Q"));
  report.add(above("xi_hat_nonzero", z0q.cwiseAbs().maxCoeff(), 1e-6, "Z0 Q != 0"));
  report.add(below("xi_hat_null", std::abs(xi.dot(m.gram(p.chart) * xi)), tol, "g(xi_hat, xi_hat) = 0"));
  report.add(below("xi_hat_killing", max_abs(lie_derivative_metric(m, xi_hat_field(d), p.chart)), tol,
                   "L_xi_hat g = 0"));
  return report;
}

EinsteinResidual einstein_residual(const SchrodingerManifoldConfig& cfg, const EmbeddedPoint& p) {
  if (cfg.mu != 0.0) throw ContractViolation("einstein_residual: g+ is the mu = 0 member of the family");
  cfg.validate();
  const int d = cfg.d;
  const MetricField m = poincare_metric(d, cfg.lambda);
  const Eigen::MatrixXd g = m.gram(p.chart);
  EinsteinResidual out;
  out.residual = ricci_scalar(m, p.chart).ricci + (d + 2.0) * g;
  out.factor = (d + 2.0) * (1.0 + 2.0 * cfg.lambda) / (2.0 * cfg.lambda);
  out.predicted = out.factor * g;
  return out;
}

NullFluidResidual nullfluid_residual(const SchrodingerManifoldConfig& cfg, const EmbeddedPoint& p) {
  cfg.validate();
  const int d = cfg.d;
  const double lambda = cfg.lambda;
  const MetricField m = schrodinger_metric(cfg);
  const Eigen::MatrixXd g = m.gram(p.chart);
  const Eigen::VectorXd th = theta_hat_components<double>(p.chart, d, lambda);
  NullFluidResidual out;
  out.residual = ricci_scalar(m, p.chart).ricci - ((d + 2.0) / (2.0 * lambda)) * g +
                 (cfg.mu * (d + 4.0) / (2.0 * lambda)) * (th * th.transpose());
  out.cosmological_constant = (d + 1.0) * (d + 2.0) / (4.0 * lambda);
  return out;
}

VerificationReport induced_tensor_check(const SchrodingerManifoldConfig& cfg, int samples, std::uint64_t seed,
                                        double tol) {
  if (samples < 1) throw ContractViolation("induced_tensor_check: samples must be >= 1");
  cfg.validate();
  SeededSampler sampler(seed, bulk_box(cfg.d));
  const Eigen::Index n = cfg.chart_dim();
  const OneForm theta = theta_hat_form(cfg);
  double metric = 0.0, clock = 0.0, integrability = 0.0;
  int worst_negatives = 1;
  for (int k = 0; k < samples; ++k) {
    const EmbeddedPoint p = embed(cfg, sampler.sample());
    const Eigen::VectorXd a = sampler.uniform_vector(n, -1.0, 1.0);
    const Eigen::VectorXd b = sampler.uniform_vector(n, -1.0, 1.0);
    const DualValue gv = induced_metric(cfg, p, a, b);
    metric = std::max(metric, std::abs(gv.difference()) / std::max(1.0, std::abs(gv.chart)));
    clock = std::max(clock, std::abs(theta_hat(cfg, p, a).difference()));
    integrability = std::max(integrability, exterior_wedge(theta, p.chart).omega_wedge_d_omega.max_abs());
    const int neg = static_cast<int>(negative_index(schrodinger_gram<double>(p.chart, cfg.d, cfg.lambda, cfg.mu)));
    if (neg != 1) worst_negatives = neg;
  }
  VerificationReport report;
  report.add(below("dual_metric", metric, tol, "dQbar d'Q - mu theta theta = chart g_{lambda,mu}"));
  report.add(below("dual_theta", clock, tol, "-Qbar Z0 dQ = (-2 lambda / r^2) dt"));
  report.add(equals("signature", 1.0, worst_negatives, "g_{lambda,mu} has exactly one negative eigenvalue"));
  report.add(below("integrability", integrability, 1e-12, "theta ^ d theta = 0"));
  report.stamp(samples, seed);
  return report;
}

}  // namespace schrogeo::homogeneous
