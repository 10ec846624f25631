#include "schrogeo/homogeneous/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "schrogeo/ambient/ambient.hpp"
#include "schrogeo/bargmann/flat.hpp"
#include "schrogeo/errors.hpp"
#include "schrogeo/geometry/tensor_calculus.hpp"
#include "schrogeo/homogeneous/embedding.hpp"
#include "schrogeo/numkernel/linalg.hpp"
#include "schrogeo/numkernel/sampler.hpp"

namespace schrogeo::homogeneous {
namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

// [X](p) and its chart Jacobian, column a = d[X]/dp^a = (e_a, -g(x, e_a), 0).
template <typename Scalar>
void ray_and_jacobian(const VecX<Scalar>& p, int d, VecX<Scalar>& x, MatX<Scalar>& jac) {
  const Eigen::Index n = d + 2;
  x.resize(d + 4);
  x.head(n) = p;
  x[d + 2] = Scalar(-0.5) * bargmann::flat_inner<Scalar>(p, p, d);
  x[d + 3] = Scalar(1.0);
  jac = MatX<Scalar>::Zero(d + 4, n);
  for (Eigen::Index a = 0; a < n; ++a) jac(a, a) = Scalar(1.0);
  for (int i = 0; i < d; ++i) jac(d + 2, i) = -p[i];
  jac(d + 2, d) = -p[d + 1];
  jac(d + 2, d + 1) = -p[d];
}

template <typename Scalar>
Scalar f0_generic(const VecX<Scalar>& x, int d) {
  return x[d] * x[d] + x[d + 3] * x[d + 3];
}

// Conformal factor of the boundary metric against the flat one (Frobenius
// projection) and the off-proportionality residual.
std::pair<double, double> conformal_factor(const Eigen::MatrixXd& g, const Eigen::MatrixXd& flat) {
  const double f = (g.cwiseProduct(flat)).sum() / flat.squaredNorm();
  return {f, max_abs(g - f * flat)};
}

}  // namespace

MetricField boundary_metric(int d) {
  if (d < 1) throw ContractViolation("boundary_metric: d must be at least 1");
  const Eigen::MatrixXd gram = ambient::ambient_gram(d);
  return MetricField::from(Chart::bargmann(d), {d + 1, 1}, [d, gram](const auto& p) {
    using S = typename std::decay_t<decltype(p)>::Scalar;
    VecX<S> x;
    MatX<S> jac;
    ray_and_jacobian<S>(p, d, x, jac);
    const MatX<S> gs = gram.template cast<S>();
    return MatX<S>(jac.transpose() * gs * jac / f0_generic<S>(x, d));
  });
}

OneForm boundary_clock(int d) {
  if (d < 1) throw ContractViolation("boundary_clock: d must be at least 1");
  const Eigen::MatrixXd gz = ambient::ambient_gram(d) * ambient::build_Z0(d).z;
  return OneForm::from([d, gz](const auto& p) {
    using S = typename std::decay_t<decltype(p)>::Scalar;
    VecX<S> x;
    MatX<S> jac;
    ray_and_jacobian<S>(p, d, x, jac);
    const MatX<S> gzs = gz.template cast<S>();
    return VecX<S>(-(jac.transpose() * (gzs.transpose() * x)) / f0_generic<S>(x, d));
  });
}

VectorField boundary_xi(int d) { return VectorField::constant(Eigen::VectorXd::Unit(d + 2, d + 1)); }

VerificationReport boundary_structure(int d, int samples, std::uint64_t seed, double tol) {
  if (d < 1) throw ContractViolation("boundary_structure: d must be at least 1");
  if (samples < 1) throw ContractViolation("boundary_structure: samples must be >= 1");
  const Eigen::Index n = d + 2;
  const MetricField m = boundary_metric(d);
  const OneForm theta = boundary_clock(d);
  const VectorField xi = boundary_xi(d);
  const Eigen::MatrixXd gram = ambient::ambient_gram(d);
  const Eigen::MatrixXd z0 = ambient::build_Z0(d).z;
  const Eigen::MatrixXd flat = bargmann::flat_gram(d);
  constexpr double kAlpha = 3.7;

  SeededSampler sampler(seed, std::vector<Interval>(static_cast<std::size_t>(n), Interval{-1.0, 1.0}));
  double scale = 0.0, closed = 0.0, parallel_theta = 0.0, null = 0.0, parallel_xi = 0.0, push = 0.0;
  double xi_min = std::numeric_limits<double>::infinity();
  double kernel_angle = 0.0, proportional = 0.0, time_only = 0.0;
  int kernel_dim_worst = 1, rejected = 0, taken = 0;
  while (taken < samples) {
    const Eigen::VectorXd p = sampler.sample();
    Eigen::VectorXd x;
    Eigen::MatrixXd jac;
    ray_and_jacobian<double>(p, d, x, jac);
    if (f0(x, d) <= 1e-6) {
      ++rejected;
      continue;
    }
    ++taken;

    const Eigen::VectorXd dx = jac * sampler.uniform_vector(n, -1.0, 1.0);
    const Eigen::VectorXd dpx = jac * sampler.uniform_vector(n, -1.0, 1.0);
    const double base = dx.dot(gram * dpx) / f0(x, d);
    const Eigen::VectorXd sx = kAlpha * x, sdx = kAlpha * dx, sdpx = kAlpha * dpx;
    const double scaled = sdx.dot(gram * sdpx) / f0(sx, d);
    scale = std::max(scale, std::abs(scaled - base) / std::max(1.0, std::abs(base)));

    closed = std::max(closed, max_abs(exterior_wedge(theta, p).d_omega));
    parallel_theta = std::max(parallel_theta, max_abs(covariant_derivative(m, theta, p)));
    const Eigen::MatrixXd g = m.gram(p);
    const Eigen::VectorXd xv = xi(p);
    null = std::max(null, std::abs(xv.dot(g * xv)));
    parallel_xi = std::max(parallel_xi, max_abs(covariant_derivative(m, xi, p)));
    const Eigen::VectorXd z0x = z0 * x;
    xi_min = std::min(xi_min, z0x.cwiseAbs().maxCoeff());
    push = std::max(push, max_abs(jac * xv - z0x));

    // Cone form on the tangent space {dX : Xbar dX = 0} of the null cone.
    const Eigen::MatrixXd tangent = rank_nullspace((gram * x).transpose()).nullspace;
    const RankNullspace kernel = rank_nullspace(tangent.transpose() * gram * tangent);
    const int kdim = static_cast<int>(kernel.nullspace.cols());
    if (kdim != 1) {
      kernel_dim_worst = kdim;
    } else {
      const Eigen::VectorXd k = (tangent * kernel.nullspace.col(0)).normalized();
      const Eigen::VectorXd xhat = x.normalized();
      kernel_angle = std::max(kernel_angle, (k - k.dot(xhat) * xhat).norm());
    }

    const auto [factor, off] = conformal_factor(g, flat);
    proportional = std::max(proportional, off);
    for (int j = 0; j < 3; ++j) {
      Eigen::VectorXd moved = sampler.uniform_vector(n, -1.0, 1.0);
      moved[bargmann::t_index(d)] = p[bargmann::t_index(d)];
      time_only = std::max(time_only, std::abs(conformal_factor(m.gram(moved), flat).first - factor));
    }
  }

  VerificationReport report;
  report.add(below("scale_invariance", scale, 1e-14, "g_F0 is invariant under X -> alpha X"));
  report.add(below("closed_theta", closed, 1e-9, "d theta_F0 = 0"));
  report.add(below("parallel_theta", parallel_theta, tol, "nabla theta_F0 = 0"));
  report.add(below("xi_null", null, tol, "g_F0(xi, xi) = 0"));
  report.add(below("parallel_xi", parallel_xi, tol, "nabla xi = 0"));
  report.add(above("xi_nonzero", xi_min, 1e-6, "Z0 X != 0"));
  report.add(below("xi_pushforward", push, 1e-12, "[X]_* (d/ds) = Z0 X"));
  report.add(equals("cone_kernel_dim", 1.0, kernel_dim_worst, "ker g_0 on {Xbar dX = 0} is one-dimensional"));
  report.add(below("cone_kernel_angle", kernel_angle, tol, "ker g_0 = R X"));
  report.add(below("conformal_to_flat", proportional, 1e-9, "g_F0 = Omega^2 g_flat"));
  report.add(below("conformal_factor_time_only", time_only, 1e-9, "Omega depends on t only"));
  if (rejected > 0) {
    for (CheckRecord& r : report.checks()) r.detail = std::to_string(rejected) + " samples rejected (F0 ~ 0)";
  }
  report.stamp(samples, seed);
  return report;
}

}  // namespace schrogeo::homogeneous
