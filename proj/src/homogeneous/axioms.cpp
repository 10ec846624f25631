#include "schrogeo/homogeneous/axioms.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "schrogeo/ambient/ambient.hpp"
#include "schrogeo/bargmann/flat.hpp"
#include "schrogeo/errors.hpp"
#include "schrogeo/geometry/tensor_calculus.hpp"
#include "schrogeo/homogeneous/embedding.hpp"
#include "schrogeo/homogeneous/induced.hpp"
#include "schrogeo/numkernel/sampler.hpp"

namespace schrogeo::homogeneous {
namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

Eigen::VectorXd bulk_point(const Eigen::VectorXd& boundary, double r) {
  Eigen::VectorXd p(boundary.size() + 1);
  p << boundary, r;
  return p;
}

std::string format_factor(double f) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "predicted factor %.6g", f);
  return buf;
}

}  // namespace

VerificationReport schrodinger_axiom_audit(const SchrodingerManifoldConfig& cfg, const AuditOptions& opt) {
  cfg.validate();
  if (opt.samples < 1) throw ContractViolation("schrodinger_axiom_audit: samples must be >= 1");
  const int d = cfg.d;
  const double lambda = cfg.lambda, mu = cfg.mu;
  const double root = std::sqrt(-2.0 * lambda);
  const Eigen::Index n = cfg.chart_dim();
  const MetricField g = schrodinger_metric(cfg);
  const MetricField gplus = poincare_metric(d, lambda);
  const VectorField xi_hat = xi_hat_field(d);
  const Eigen::MatrixXd flat = bargmann::flat_gram(d);
  const Eigen::VectorXd e_s = Eigen::VectorXd::Unit(n, d + 1);

  SeededSampler boundary_sampler(opt.seed, std::vector<Interval>(static_cast<std::size_t>(d + 2), Interval{-1, 1}));
  SeededSampler bulk_sampler(opt.seed + 1, bulk_box(d));

  double extends = 0.0, null = 0.0, killing = 0.0;
  double ratio_low = std::numeric_limits<double>::infinity(), ratio_high = 0.0;
  double identity = 0.0, einstein = 0.0, prediction = 0.0, conformal = 0.0;
  double min_r = std::numeric_limits<double>::infinity(), min_grad = std::numeric_limits<double>::infinity();
  double fitted = 0.0;
  const double factor = (d + 2.0) * (1.0 + 2.0 * lambda) / (2.0 * lambda);

  for (int k = 0; k < opt.samples; ++k) {
    // Near-boundary behavior along r -> 0 above a boundary point.
    const Eigen::VectorXd b = boundary_sampler.sample();
    const BoundaryRay ray = boundary_ray(b, d);
    double decay[2] = {0.0, 0.0};
    const double radii[2] = {1e-2, 1e-3};
    for (int j = 0; j < 2; ++j) {
      const EmbeddedPoint p = embed(cfg, bulk_point(b, radii[j]));
      const Eigen::VectorXd pushed = embedding_jacobian(p) * e_s * (radii[j] / root);
      const Eigen::VectorXd boundary_xi_ambient = ambient::build_Z0(d).z * ray.x;
      extends = std::max(extends, max_abs(pushed - boundary_xi_ambient));
      const Eigen::MatrixXd inv = g.gram(p.chart).fullPivLu().inverse();
      decay[j] = max_abs(inv - mu * e_s * e_s.transpose());
    }
    const double ratio = decay[0] / decay[1];
    ratio_low = std::min(ratio_low, ratio);
    ratio_high = std::max(ratio_high, ratio);

    const Eigen::VectorXd p_near = bulk_point(b, 1e-3);
    const Eigen::MatrixXd rescaled = 1e-6 * gplus.gram(p_near);
    conformal = std::max(conformal, max_abs(rescaled.topLeftCorner(d + 2, d + 2) / (-2.0 * lambda) - flat));

    // Interior samples.
    const Eigen::VectorXd p = bulk_sampler.sample();
    const Eigen::MatrixXd gp = g.gram(p);
    null = std::max(null, std::abs(e_s.dot(gp * e_s)));
    killing = std::max(killing, max_abs(lie_derivative_metric(g, xi_hat, p)));
    const Eigen::VectorXd th = theta_hat_components<double>(p, d, lambda);
    const Eigen::MatrixXd gplus_p = gplus.gram(p);
    identity = std::max(identity, max_abs(gp + mu * th * th.transpose() - gplus_p) / max_abs(gplus_p));
    const Eigen::MatrixXd res = ricci_scalar(gplus, p).ricci + (d + 2.0) * gplus_p;
    einstein = std::max(einstein, max_abs(res));
    prediction = std::max(prediction, max_abs(res - factor * gplus_p));
    fitted = res.cwiseProduct(gplus_p).sum() / gplus_p.squaredNorm();
    min_r = std::min(min_r, p[d + 2]);
    const Eigen::MatrixXd compact = p[d + 2] * p[d + 2] * gplus_p;
    min_grad = std::min(min_grad, compact.inverse()(d + 2, d + 2));
  }

  VerificationReport report;
  report.add(below("axiom1.xi_extends", extends, opt.tol, "r Q_*(d/ds_hat) / sqrt(-2 lambda) = Z0 [X]"));
  report.add(below("axiom1.xi_null", null, opt.tol, "g(xi_hat, xi_hat) = 0"));
  report.add(below("axiom1.xi_killing", killing, opt.tol, "L_xi_hat g = 0"));

  CheckRecord decay = below("axiom2.inverse_decay", std::max(std::abs(ratio_low - 100.0), std::abs(ratio_high - 100.0)),
                            kDecayRatioHigh - 100.0, "|g^-1 - mu xi xi|(1e-2) / |g^-1 - mu xi xi|(1e-3) in [80, 120]");
  decay.expected = 100.0;
  decay.got = ratio_low;
  if (ratio_low < kDecayRatioLow || ratio_high > kDecayRatioHigh) decay.status = CheckStatus::Fail;
  report.add(decay);
  CheckRecord norm = equals("axiom2.normalization", 1.0, mu, "mu = 1");
  if (mu != 1.0) norm.detail = "axiom 2: normalization requires mu = 1";
  report.add(norm);

  report.add(below("axiom3.poincare_identity", identity, 1e-12, "g_{lambda,mu} + mu theta theta = g_{lambda,0}"));
  CheckRecord ein = below("axiom3.einstein", einstein, opt.tol, "Ric(g+) + (d + 2) g+ = 0");
  ein.expected = 0.0;
  ein.got = fitted;
  ein.detail = "axiom 3: " + format_factor(factor);
  report.add(ein);
  CheckRecord pred = below("axiom3.predicted_factor", prediction, opt.tol,
                           "Ric(g+) + (d + 2) g+ = ((d + 2)(1 + 2 lambda) / (2 lambda)) g+");
  pred.expected = factor;
  pred.got = fitted;
  report.add(pred);

  report.add(below("conformal_infinity", conformal, 1e-9, "r^2 g+ on boundary directions = -2 lambda g_flat"));
  report.add(above("defining_function", std::min(min_r, min_grad), 0.0, "r > 0 inside and |dr|^2 > 0"));
  report.stamp(opt.samples, opt.seed);
  return report;
}

}  // namespace schrogeo::homogeneous
