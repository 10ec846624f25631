#include "schrogeo/homogeneous/symmetry.hpp"

#include <algorithm>
#include <cmath>

#include "schrogeo/errors.hpp"
#include "schrogeo/homogeneous/induced.hpp"
#include "schrogeo/numkernel/linalg.hpp"
#include "schrogeo/numkernel/sampler.hpp"

namespace schrogeo::homogeneous {
namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

template <typename Scalar>
VecX<Scalar> act_generic(const Eigen::MatrixXd& a, const VecX<Scalar>& p, int d, double lambda) {
  const VecX<Scalar> q = embed_components<Scalar>(p, d, lambda);
  VecX<Scalar> aq(q.size());
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    Scalar acc(0.0);
    for (Eigen::Index j = 0; j < q.size(); ++j) acc += a(i, j) * q[j];
    aq[i] = acc;
  }
  const Scalar c = aq[d + 3];
  if (!(value_of(c) > 1e-8)) throw ChartEscape("A Q left the r > 0 sheet of the chart");
  VecX<Scalar> out(d + 3);
  out.head(d + 2) = aq.head(d + 2) / c;
  out[d + 2] = Scalar(std::sqrt(-2.0 * lambda)) / c;
  return out;
}

struct PullbackResidual {
  double metric = 0.0;
  double theta = 0.0;
  double quadric = 0.0;
  double kernel = 0.0;
};

PullbackResidual pullback(const SchrodingerManifoldConfig& cfg, const Eigen::MatrixXd& a, int samples,
                          std::uint64_t seed) {
  const int d = cfg.d;
  const Eigen::Index n = cfg.chart_dim();
  const Eigen::MatrixXd gram = ambient::ambient_gram(d);
  const Eigen::MatrixXd z0 = ambient::build_Z0(d).z;
  SeededSampler sampler(seed, bulk_box(d));
  PullbackResidual out;
  int taken = 0, escaped = 0;
  while (taken < samples) {
    const Eigen::VectorXd p = sampler.sample();
    VecX<Jet2> img;
    try {
      img = act_generic<Jet2>(a, seed_jets(p), d, cfg.lambda);
    } catch (const ChartEscape&) {
      if (++escaped > 10000) throw;
      continue;
    }
    Eigen::VectorXd image(n);
    Eigen::MatrixXd jac(n, n);  // jac(i, a) = d phi^i / d p^a
    for (Eigen::Index i = 0; i < n; ++i) {
      image[i] = img[i].value();
      jac.row(i) = img[i].grad(n).transpose();
    }
    const Eigen::MatrixXd g0 = schrodinger_gram<double>(p, d, cfg.lambda, cfg.mu);
    const Eigen::MatrixXd g1 = schrodinger_gram<double>(image, d, cfg.lambda, cfg.mu);
    out.metric = std::max(out.metric, max_abs(jac.transpose() * g1 * jac - g0) / std::max(1.0, max_abs(g0)));
    const Eigen::VectorXd th0 = theta_hat_components<double>(p, d, cfg.lambda);
    const Eigen::VectorXd th1 = theta_hat_components<double>(image, d, cfg.lambda);
    out.theta = std::max(out.theta, max_abs(jac.transpose() * th1 - th0) / std::max(1.0, max_abs(th0)));

    const EmbeddedPoint e = embed(cfg, p);
    const Eigen::VectorXd aq = a * e.q;
    out.quadric = std::max(out.quadric, std::abs(aq.dot(gram * aq) - 2.0 * cfg.lambda));
    out.kernel = std::max(out.kernel, max_abs(z0 * (a * e.y)));
    ++taken;
  }
  return out;
}

bool is_member(const Eigen::MatrixXd& a, int d, double* commutator_norm) {
  const Eigen::MatrixXd g = ambient::ambient_gram(d);
  const Eigen::MatrixXd z0 = ambient::build_Z0(d).z;
  const double scale = std::max(1.0, max_abs(a));
  const double iso = max_abs(a.transpose() * g * a - g) / (scale * scale);
  *commutator_norm = max_abs(commutator(a, z0));
  return iso <= 1e-10 && *commutator_norm <= 1e-10 * scale;
}

}  // namespace

Eigen::VectorXd act_on_chart(const Eigen::MatrixXd& a, const Eigen::VectorXd& chart, int d, double lambda) {
  if (a.rows() != d + 4 || a.cols() != d + 4 || chart.size() != d + 3) {
    throw ContractViolation("act_on_chart: size mismatch");
  }
  return act_generic<double>(a, chart, d, lambda);
}

double pullback_residual(const SchrodingerManifoldConfig& cfg, const Eigen::MatrixXd& a, int samples,
                         std::uint64_t seed) {
  return pullback(cfg, a, samples, seed).metric;
}

VerificationReport isometry_check(const SchrodingerManifoldConfig& cfg, const Eigen::MatrixXd& a, int samples,
                                  std::uint64_t seed, double tol) {
  cfg.validate();
  if (samples < 1) throw ContractViolation("isometry_check: samples must be >= 1");
  if (a.rows() != cfg.d + 4 || a.cols() != cfg.d + 4) throw ContractViolation("isometry_check: A has the wrong size");
  double comm = 0.0;
  const bool member = is_member(a, cfg.d, &comm);
  const PullbackResidual res = pullback(cfg, a, samples, seed);

  VerificationReport report;
  if (member) {
    report.add(below("quadric_preserved", res.quadric, tol, "(AQ)bar (AQ) = 2 lambda"));
    report.add(below("kernel_preserved", res.kernel, tol, "Z0 (A Y) = 0"));
    report.add(below("metric_preserved", res.metric, tol, "phi^* g_{lambda,mu} = g_{lambda,mu}"));
    report.add(below("theta_preserved", res.theta, tol, "phi^* theta_hat = theta_hat"));
  } else {
    report.add(above("commutes_with_Z0", comm, 1e-10, "[A, Z0] != 0"));
    report.add(above("theta_not_preserved", res.theta, 1e-3, "phi^* theta_hat != theta_hat"));
    if (cfg.mu != 0.0) {
      report.add(above("metric_not_preserved", res.metric, 1e-3, "phi^* g_{lambda,mu} != g_{lambda,mu}"));
    }
  }
  report.stamp(samples, seed);
  return report;
}

Eigen::MatrixXd boost_generator(int d) {
  ambient::SchParams p;
  p.lambda_block = Eigen::MatrixXd::Zero(d + 2, d + 2);
  p.lambda_block(d + 1, 0) = 1.0;   // e_s e_1bar
  p.lambda_block(0, d) = -1.0;      // -e_1 e_sbar, e_sbar = e_t^T
  p.gamma = Eigen::VectorXd::Zero(d + 2);
  return ambient::assemble_sch(p);
}

Eigen::MatrixXd uv_rotation(int d, double phi) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(d + 4, d + 4);
  a(d + 2, d + 2) = std::exp(phi);
  a(d + 3, d + 3) = std::exp(-phi);
  return a;
}

Eigen::VectorXd origin(int d, double lambda) {
  Eigen::VectorXd q = Eigen::VectorXd::Zero(d + 4);
  q[d + 2] = lambda;
  q[d + 3] = 1.0;
  return q;
}

ambient::GroupElement bulk_isotropy_element(const Eigen::MatrixXd& rotation, const Eigen::VectorXd& shift, double a,
                                            double lambda) {
  const Eigen::Index d = rotation.rows();
  if (rotation.cols() != d || shift.size() != d) throw ContractViolation("bulk_isotropy_element: size mismatch");
  ambient::GroupBlocks k;
  k.L = Eigen::MatrixXd::Zero(d + 2, d + 2);
  k.L.topLeftCorner(d, d) = rotation;
  k.L.block(0, d, d, 1) = shift;
  k.L(d, d) = 1.0;
  k.L.block(d + 1, 0, 1, d) = -shift.transpose() * rotation;
  k.L(d + 1, d) = -0.5 * shift.squaredNorm() + lambda * a * a;
  k.L(d + 1, d + 1) = 1.0;
  const Eigen::VectorXd xi = Eigen::VectorXd::Unit(d + 2, d + 1);
  k.B = lambda * a * xi;
  k.C = -lambda * a * xi;
  k.a = a;
  k.b = 1.0;
  k.d = 0.0;
  k.e = 1.0;
  return ambient::assemble_group_element(k);
}

ambient::GroupElement boundary_isotropy_element(const Eigen::MatrixXd& rotation, const Eigen::VectorXd& boost,
                                                double a, double e) {
  const Eigen::Index d = rotation.rows();
  if (rotation.cols() != d || boost.size() != d) throw ContractViolation("boundary_isotropy_element: size mismatch");
  if (e == 0.0) throw ContractViolation("boundary_isotropy_element: e must be nonzero");
  ambient::GroupBlocks k;
  k.L = Eigen::MatrixXd::Zero(d + 2, d + 2);
  k.L.topLeftCorner(d, d) = rotation;
  k.L.block(0, d, d, 1) = -rotation * boost / e;
  k.L(d, d) = 1.0 / e;
  k.L.block(d + 1, 0, 1, d) = boost.transpose();
  k.L(d + 1, d) = -0.5 * boost.squaredNorm() / e;
  k.L(d + 1, d + 1) = e;
  k.B = Eigen::VectorXd::Zero(d + 2);
  k.C = Eigen::VectorXd::Zero(d + 2);
  k.a = a;
  k.b = 1.0 / e;
  k.d = 0.0;
  k.e = e;
  return ambient::assemble_group_element(k);
}

IsotropyDims isotropy_dims(int d, double lambda, double tol) {
  const std::vector<Eigen::MatrixXd> basis = ambient::commutant_basis(d);
  const Eigen::Index m = static_cast<Eigen::Index>(basis.size());
  const Eigen::VectorXd q0 = origin(d, lambda);
  const Eigen::VectorXd x = Eigen::VectorXd::Unit(d + 4, d + 3);
  const Eigen::MatrixXd off_ray = Eigen::MatrixXd::Identity(d + 4, d + 4) - x * x.transpose();
  Eigen::MatrixXd bulk(d + 4, m), boundary(d + 4, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    bulk.col(k) = basis[static_cast<std::size_t>(k)] * q0;
    boundary.col(k) = off_ray * (basis[static_cast<std::size_t>(k)] * x);
  }
  IsotropyDims out;
  out.algebra = static_cast<int>(m);
  out.bulk = static_cast<int>(m - rank_nullspace(bulk, tol).rank);
  out.boundary = static_cast<int>(m - rank_nullspace(boundary, tol).rank);
  return out;
}

VerificationReport isotropy_check(const SchrodingerManifoldConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const int d = cfg.d;
  const IsotropyDims dims = isotropy_dims(d, cfg.lambda);
  VerificationReport report;
  report.add(equals("bulk_isotropy_dim", d * (d + 1) / 2 + 1, dims.bulk, "dim K = d(d+1)/2 + 1"));
  report.add(equals("bulk_space_dim", d + 3, dims.bulk_space(), "dim M_lambda = d + 3"));
  report.add(equals("boundary_isotropy_dim", (d * d + d + 4) / 2, dims.boundary, "dim S = (d^2 + d + 4)/2"));
  report.add(equals("boundary_space_dim", d + 2, dims.boundary_space(), "dim M = d + 2"));

  SeededSampler sampler(seed, {});
  const Eigen::VectorXd q0 = origin(d, cfg.lambda);
  const Eigen::VectorXd x = Eigen::VectorXd::Unit(d + 4, d + 3);
  double bulk_fix = 0.0, ray_fix = 0.0;
  constexpr int kElements = 5;
  for (int k = 0; k < kElements; ++k) {
    const Eigen::MatrixXd skew = sampler.uniform_vector(d * d, -1.0, 1.0).reshaped(d, d);
    const Eigen::MatrixXd rot = expm(skew - skew.transpose());
    const Eigen::VectorXd u = sampler.uniform_vector(d, -1.0, 1.0);
    const double a = sampler.uniform(-1.0, 1.0);
    const double e = sampler.uniform(0.5, 2.0) * (k % 2 == 0 ? 1.0 : -1.0);
    const Eigen::MatrixXd kb = bulk_isotropy_element(rot, u, a, cfg.lambda).matrix;
    bulk_fix = std::max(bulk_fix, max_abs(kb * q0 - q0));
    const Eigen::VectorXd ax = boundary_isotropy_element(rot, u, a, e).matrix * x;
    ray_fix = std::max(ray_fix, max_abs(ax - x.dot(ax) * x));
  }
  report.add(below("bulk_sample_fixes_origin", bulk_fix, 1e-10, "A(R, u, a) Q0 = Q0"));
  report.add(below("boundary_sample_fixes_ray", ray_fix, 1e-10, "A(R, v, a, e) X in R X"));
  report.stamp(kElements, seed);
  return report;
}

}  // namespace schrogeo::homogeneous
