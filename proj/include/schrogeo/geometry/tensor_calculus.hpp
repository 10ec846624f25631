#pragma once

// Pointwise tensor calculus on a chart. All curvature quantities are built
// from a single second-order jet of the metric at the point; no connection
// objects are stored.

#include <Eigen/Core>

#include <vector>

#include "schrogeo/geometry/fields.hpp"

namespace schrogeo {

// Dense n x n x n array, indexed (a, b, c).
class Array3 {
 public:
  Array3() = default;
  explicit Array3(Eigen::Index n) : n_(n), data_(static_cast<std::size_t>(n * n * n), 0.0) {}

  Eigen::Index dim() const { return n_; }
  double& operator()(Eigen::Index a, Eigen::Index b, Eigen::Index c) {
    return data_[static_cast<std::size_t>((a * n_ + b) * n_ + c)];
  }
  double operator()(Eigen::Index a, Eigen::Index b, Eigen::Index c) const {
    return data_[static_cast<std::size_t>((a * n_ + b) * n_ + c)];
  }
  double max_abs() const;

 private:
  Eigen::Index n_ = 0;
  std::vector<double> data_;
};

// Metric value, inverse, and first/second partial derivatives at a point.
struct MetricJet {
  Eigen::MatrixXd g;
  Eigen::MatrixXd ginv;
  std::vector<Eigen::MatrixXd> dg;   // dg[c](a, b) = d_c g_ab
  std::vector<Eigen::MatrixXd> ddg;  // ddg[a * n + b](c, e) = d_c d_e g_ab
};

// Throws DegenerateMetric on the chart's singular locus or when the Gram
// matrix is numerically singular.
MetricJet metric_jet(const MetricField& m, const Eigen::VectorXd& p);

// Gamma^a_{bc}, returned as (a, b, c).
Array3 christoffel(const MetricField& m, const Eigen::VectorXd& p);
Array3 christoffel(const MetricJet& mj);

struct RicciResult {
  Eigen::MatrixXd ricci;
  double scalar = 0.0;
};
RicciResult ricci_scalar(const MetricField& m, const Eigen::VectorXd& p);

// nabla_c g_ab, returned as (c, a, b); vanishes for the Levi-Civita connection.
Array3 metricity(const MetricField& m, const Eigen::VectorXd& p);

// (a, b) entry is nabla_a w_b.
Eigen::MatrixXd covariant_derivative(const MetricField& m, const OneForm& w,
                                     const Eigen::VectorXd& p);
// (a, b) entry is nabla_a V^b.
Eigen::MatrixXd covariant_derivative(const MetricField& m, const VectorField& v,
                                     const Eigen::VectorXd& p);

Eigen::MatrixXd lie_derivative_metric(const MetricField& m, const VectorField& z,
                                      const Eigen::VectorXd& p);

struct ConformalDeviation {
  double phi = 0.0;       // (1/n) tr(g^-1 L_Z g)
  double residual = 0.0;  // |L_Z g - phi g| / |g|, Frobenius
};
ConformalDeviation conformal_deviation(const MetricField& m, const VectorField& z,
                                       const Eigen::VectorXd& p);

// [X, Y]^a = X^b d_b Y^a - Y^b d_b X^a
Eigen::VectorXd lie_bracket(const VectorField& x, const VectorField& y, const Eigen::VectorXd& p);

// Metric divergence: d_a X^a + Gamma^a_{ab} X^b (volume density |det g|^1/2).
double divergence(const MetricField& m, const VectorField& x, const Eigen::VectorXd& p);

struct WedgeResult {
  Eigen::MatrixXd d_omega;  // d_a w_b - d_b w_a
  Array3 omega_wedge_d_omega;  // w_a dw_bc + w_b dw_ca + w_c dw_ab
};
WedgeResult exterior_wedge(const OneForm& w, const Eigen::VectorXd& p);

// (w ^ v)_ab = w_a v_b - w_b v_a for two covectors.
Eigen::MatrixXd wedge(const Eigen::VectorXd& w, const Eigen::VectorXd& v);

// Laplace-Beltrami operator g^ab (d_a d_b f - Gamma^c_ab d_c f).
double laplacian(const MetricField& m, const ScalarField& f, const Eigen::VectorXd& p);
// Same, from a jet of f already evaluated at p.
double laplacian(const MetricField& m, const Jet2& f, const Eigen::VectorXd& p);

// (Delta_g - (n-2)/(4(n-1)) R) f at p.
double yamabe_residual(const MetricField& m, const ScalarField& f, const Eigen::VectorXd& p);
double yamabe_residual(const MetricField& m, const Jet2& f, const Eigen::VectorXd& p);

}  // namespace schrogeo
