#pragma once

// The flat Bargmann structure on R^{d+2} with coordinates (x^1..x^d, t, s):
// g = sum dx^i dx^i + 2 dt ds, xi = d/ds, clock theta = g(xi) = dt.

#include <Eigen/Core>

#include "schrogeo/geometry/fields.hpp"

namespace schrogeo::bargmann {

inline Eigen::Index t_index(int d) { return d; }
inline Eigen::Index s_index(int d) { return d + 1; }

inline Eigen::MatrixXd flat_gram(int d) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(d + 2, d + 2);
  g.topLeftCorner(d, d).setIdentity();
  g(d, d + 1) = g(d + 1, d) = 1.0;
  return g;
}

// xi = e_s
inline Eigen::VectorXd xi_vector(int d) { return Eigen::VectorXd::Unit(d + 2, d + 1); }

// g(x, y) for Scalar-valued vectors against the constant flat Gram matrix.
template <typename Scalar>
Scalar flat_inner(const VecX<Scalar>& x, const VecX<Scalar>& y, int d) {
  Scalar out(0.0);
  for (int i = 0; i < d; ++i) out += x[i] * y[i];
  out += x[d] * y[d + 1] + x[d + 1] * y[d];
  return out;
}

MetricField flat_metric(int d);
VectorField fundamental_field(int d);
OneForm clock_form(int d);

}  // namespace schrogeo::bargmann
