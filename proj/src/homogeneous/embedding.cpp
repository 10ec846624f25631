#include "schrogeo/homogeneous/embedding.hpp"

#include <cmath>

#include "schrogeo/ambient/ambient.hpp"

namespace schrogeo::homogeneous {

EmbeddedPoint embed(const SchrodingerManifoldConfig& cfg, const Eigen::VectorXd& chart, double gauge) {
  cfg.validate();
  const int d = cfg.d;
  if (chart.size() != d + 3) throw ContractViolation("embed: chart point must have d + 3 coordinates");
  const double rh = chart[d + 2];
  if (rh == 0.0) throw BoundaryPoint("boundary point: r = 0 is not in the bulk, use the boundary operations");

  EmbeddedPoint p;
  p.chart = chart;
  p.lambda = cfg.lambda;
  p.d = d;
  p.gauge = gauge;
  p.q = embed_components<double>(chart, d, cfg.lambda);

  // Q = X + lambda Y with X the lift of x = xh - lambda r^2 q xi and
  // Y = r (q xi + (1 - q t) e_u), r the projective radius.
  const double r = p.projective_radius();
  Eigen::VectorXd x = chart.head(d + 2);
  x[d + 1] -= cfg.lambda * r * r * gauge;
  p.x = ambient::bargmann_lift(x, r);
  p.y = Eigen::VectorXd::Zero(d + 4);
  p.y[d + 1] = r * gauge;
  p.y[d + 2] = r * (1.0 - gauge * chart[d]);
  return p;
}

Eigen::VectorXd chart_of(const Eigen::VectorXd& q, int d, double lambda) {
  if (q.size() != d + 4) throw ContractViolation("chart_of: ambient vector must have d + 4 components");
  const double c = q[d + 3];
  if (c == 0.0) throw ChartEscape("chart_of: Q has no v component, outside the chart");
  Eigen::VectorXd p(d + 3);
  p.head(d + 2) = q.head(d + 2) / c;
  p[d + 2] = std::sqrt(-2.0 * lambda) / c;
  return p;
}

Eigen::MatrixXd embedding_jacobian(const EmbeddedPoint& p) {
  const VecX<Jet2> q = embed_components<Jet2>(seed_jets(p.chart), p.d, p.lambda);
  const Eigen::Index n = p.chart.size();
  Eigen::MatrixXd jac(q.size(), n);
  for (Eigen::Index i = 0; i < q.size(); ++i) jac.row(i) = q[i].grad(n).transpose();
  return jac;
}

EmbeddingResiduals embedding_residuals(const EmbeddedPoint& p) {
  const Eigen::MatrixXd g = ambient::ambient_gram(p.d);
  const Eigen::MatrixXd z0 = ambient::build_Z0(p.d).z;
  EmbeddingResiduals out;
  out.quadric = std::abs(p.q.dot(g * p.q) - 2.0 * p.lambda) / std::abs(2.0 * p.lambda);
  out.x_null = std::abs(p.x.dot(g * p.x));
  out.y_null = std::abs(p.y.dot(g * p.y));
  out.pairing = std::abs(p.x.dot(g * p.y) - 1.0);
  out.y_kernel = (z0 * p.y).cwiseAbs().maxCoeff();
  out.z0q_norm = (z0 * p.q).cwiseAbs().maxCoeff();
  return out;
}

BoundaryRay boundary_ray(const Eigen::VectorXd& chart, int d) {
  if (chart.size() != d + 2) throw ContractViolation("boundary_ray: chart point must have d + 2 coordinates");
  return {chart, ambient::bargmann_lift(chart, 1.0)};
}

double f0(const Eigen::VectorXd& x, int d) {
  const double xp = x[ambient::t_index(d)];  // Xbar e_s
  const double xq = x[ambient::v_index(d)];  // Xbar e_u
  return xp * xp + xq * xq;
}

}  // namespace schrogeo::homogeneous
