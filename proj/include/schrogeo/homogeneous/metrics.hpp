#pragma once

// Chart formulas on the bulk chart (x^1..x^d, t, s, r) of the homogeneous
// space, r being the rescaled radial coordinate r = sqrt(-2 lambda) * r_proj:
//
//   g_{lambda,mu} = (-2 lambda / r^2) [ g_flat + dr^2 + 2 lambda mu dt^2 / r^2 ]
//   theta_hat     = (-2 lambda / r^2) dt
//   xi_hat        = d/ds

#include <Eigen/Core>

#include <cmath>

#include "schrogeo/geometry/fields.hpp"

namespace schrogeo::homogeneous {

struct SchrodingerManifoldConfig {
  int d = 3;
  double lambda = -0.5;
  double mu = 1.0;

  // Throws ContractViolation unless d >= 1 and lambda < 0.
  void validate() const;
  int chart_dim() const { return d + 3; }
  Eigen::Index t_index() const { return d; }
  Eigen::Index s_index() const { return d + 1; }
  Eigen::Index r_index() const { return d + 2; }
};

template <typename Scalar>
MatX<Scalar> schrodinger_gram(const VecX<Scalar>& p, int d, double lambda, double mu) {
  const Eigen::Index n = d + 3;
  const Scalar r = p[d + 2];
  const Scalar r2 = r * r;
  const Scalar c = Scalar(-2.0 * lambda) / r2;
  MatX<Scalar> g = MatX<Scalar>::Zero(n, n);
  for (int i = 0; i < d; ++i) g(i, i) = c;
  g(d, d + 1) = c;
  g(d + 1, d) = c;
  g(d + 2, d + 2) = c;
  if (mu != 0.0) g(d, d) = c * Scalar(2.0 * lambda * mu) / r2;
  return g;
}

template <typename Scalar>
VecX<Scalar> theta_hat_components(const VecX<Scalar>& p, int d, double lambda) {
  VecX<Scalar> w = VecX<Scalar>::Zero(d + 3);
  const Scalar r = p[d + 2];
  w[d] = Scalar(-2.0 * lambda) / (r * r);
  return w;
}

MetricField schrodinger_metric(const SchrodingerManifoldConfig& cfg);
// g+ = g_{lambda,0}
MetricField poincare_metric(int d, double lambda);
OneForm theta_hat_form(const SchrodingerManifoldConfig& cfg);
VectorField xi_hat_field(int d);

}  // namespace schrogeo::homogeneous
