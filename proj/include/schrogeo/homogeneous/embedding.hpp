#pragma once

// Embedding of the bulk chart (x^1..x^d, t, s, r) into the ambient space
// R^{d+2,2}. With c = sqrt(-2 lambda) / r,
//
//   Q = c (xh, -g(xh, xh)/2 - r^2/2, 1),   xh = (x^1..x^d, t, s),
//
// so that Qbar Q = 2 lambda. Q splits as X + lambda Y with X the Bargmann
// lift of the projective point and Y in the kernel of Z0.

#include <Eigen/Core>

#include <cmath>

#include "schrogeo/bargmann/flat.hpp"
#include "schrogeo/errors.hpp"
#include "schrogeo/homogeneous/metrics.hpp"

namespace schrogeo::homogeneous {

// Ambient components of the embedding, generic over the scalar so that the
// Jacobian comes from Jet2 evaluation.
template <typename Scalar>
VecX<Scalar> embed_components(const VecX<Scalar>& p, int d, double lambda) {
  const Scalar r = p[d + 2];
  const Scalar c = Scalar(std::sqrt(-2.0 * lambda)) / r;
  const VecX<Scalar> xh = p.head(d + 2);
  VecX<Scalar> q(d + 4);
  q.head(d + 2) = xh * c;
  q[d + 2] = c * (Scalar(-0.5) * bargmann::flat_inner<Scalar>(xh, xh, d) - Scalar(0.5) * r * r);
  q[d + 3] = c;
  return q;
}

struct EmbeddedPoint {
  Eigen::VectorXd chart;  // (xh, t, s, r), r the rescaled radius
  Eigen::VectorXd q;      // ambient vector, Qbar Q = 2 lambda
  Eigen::VectorXd x;      // null part X
  Eigen::VectorXd y;      // null part Y, Z0 Y = 0, Xbar Y = 1
  double gauge = 0.0;     // parameter of the splitting, 0 by default
  double lambda = -0.5;
  int d = 1;

  // Radius of the projective chart, r / sqrt(-2 lambda).
  double projective_radius() const { return chart[d + 2] / std::sqrt(-2.0 * lambda); }
};

// Throws schrogeo::BoundaryPoint when r = 0 and ContractViolation for
// lambda >= 0 or a chart point of the wrong size.
EmbeddedPoint embed(const SchrodingerManifoldConfig& cfg, const Eigen::VectorXd& chart, double gauge = 0.0);

// Inverse of the embedding on the image: chart coordinates of Q.
Eigen::VectorXd chart_of(const Eigen::VectorXd& q, int d, double lambda);

// (d+4) x (d+3) Jacobian of the embedding: column a is dQ/dp^a.
Eigen::MatrixXd embedding_jacobian(const EmbeddedPoint& p);

struct EmbeddingResiduals {
  double quadric = 0.0;      // |Qbar Q - 2 lambda| / |2 lambda|
  double x_null = 0.0;       // |Xbar X|
  double y_null = 0.0;       // |Ybar Y|
  double pairing = 0.0;      // |Xbar Y - 1|
  double y_kernel = 0.0;     // |Z0 Y|_max
  double z0q_norm = 0.0;     // |Z0 Q|_max, must stay away from 0
};
EmbeddingResiduals embedding_residuals(const EmbeddedPoint& p);

// Boundary representative [X] = (x, -g(x, x)/2, 1) of a boundary chart point
// (x^1..x^d, t, s).
struct BoundaryRay {
  Eigen::VectorXd chart;
  Eigen::VectorXd x;
};
BoundaryRay boundary_ray(const Eigen::VectorXd& chart, int d);

// F0(X) = (Xbar P0)^2 + (Xbar Q0)^2.
double f0(const Eigen::VectorXd& x, int d);

}  // namespace schrogeo::homogeneous
