#include "schrogeo/bargmann/structure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "schrogeo/bargmann/flat.hpp"
#include "schrogeo/errors.hpp"
#include "schrogeo/geometry/tensor_calculus.hpp"
#include "schrogeo/numkernel/sampler.hpp"

namespace schrogeo::bargmann {
namespace {

std::vector<Interval> unit_box(Eigen::Index n) {
  return std::vector<Interval>(static_cast<std::size_t>(n), Interval{-1.0, 1.0});
}

}  // namespace

BargmannStructure flat_structure(int d) {
  if (d < 1) throw ContractViolation("flat Bargmann structure needs d >= 1");
  return {flat_metric(d), fundamental_field(d), clock_form(d), d};
}

BargmannStructure rescaled_structure(const BargmannStructure& b, const ScalarField& omega) {
  const OneForm theta = b.theta;
  OneForm scaled = OneForm::from([omega, theta](const auto& p) {
    using S = typename std::decay_t<decltype(p)>::Scalar;
    const S o = omega(p);
    const VecX<S> w = theta(p);
    return VecX<S>(w * (o * o));
  });
  return {b.metric.rescaled(omega), b.xi, std::move(scaled), b.d};
}

VerificationReport bargmann_axioms_check(const BargmannStructure& b, int samples, std::uint64_t seed,
                                         double tol) {
  if (samples < 1) throw ContractViolation("bargmann_axioms_check: samples must be >= 1");
  const MetricField& m = b.metric;
  const Chart& chart = m.chart();
  SeededSampler sampler(seed, unit_box(m.dim()),
                        [&chart](const Eigen::VectorXd& p) { return chart.is_singular(p); });

  double nullity = 0.0, parallel = 0.0, closed = 0.0, div_free = 0.0, dual = 0.0;
  std::size_t degenerate = 0;
  int taken = 0;
  while (taken < samples) {
    const Eigen::VectorXd p = sampler.sample();
    try {
      const Eigen::MatrixXd g = m.gram(p);
      const Eigen::VectorXd xi = b.xi(p);
      nullity = std::max(nullity, std::abs(xi.dot(g * xi)));
      parallel = std::max(parallel, covariant_derivative(m, b.xi, p).cwiseAbs().maxCoeff());
      closed = std::max(closed, exterior_wedge(b.theta, p).d_omega.cwiseAbs().maxCoeff());
      div_free = std::max(div_free, std::abs(divergence(m, b.xi, p)));
      dual = std::max(dual, (b.theta(p) - g * xi).cwiseAbs().maxCoeff());
      ++taken;
    } catch (const DegenerateMetric&) {
      if (++degenerate > 10000) throw;
    }
  }

  VerificationReport report;
  report.add(below("nullity", nullity, tol, "g(xi, xi) = 0"));
  report.add(below("parallel_xi", parallel, tol, "nabla xi = 0"));
  report.add(below("closed_theta", closed, tol, "d theta = 0"));
  report.add(below("divergence_free_xi", div_free, tol, "Div xi = 0"));
  report.add(below("clock_is_dual", dual, tol, "theta = g(xi)"));
  const std::size_t rejected = sampler.rejected() + degenerate;
  if (rejected > 0) {
    for (CheckRecord& r : report.checks()) r.detail = std::to_string(rejected) + " samples rejected";
  }
  report.stamp(samples, seed);
  return report;
}

ConformalEquivalence conformal_equivalence_check(const ScalarField& omega, const BargmannStructure& b,
                                                 int samples, std::uint64_t seed, double tol) {
  if (samples < 1) throw ContractViolation("conformal_equivalence_check: samples must be >= 1");
  const Chart& chart = b.metric.chart();
  SeededSampler sampler(seed, unit_box(b.metric.dim()),
                        [&chart](const Eigen::VectorXd& p) { return chart.is_singular(p); });
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Eigen::VectorXd p = sampler.sample();
    const Jet2 o = omega.jet_at(p);
    if (!(o.value() > 0.0)) {
      throw ContractViolation("conformal factor must be positive, got " + std::to_string(o.value()));
    }
    const Eigen::MatrixXd w = wedge(o.grad(p.size()), b.theta(p));
    worst = std::max(worst, w.cwiseAbs().maxCoeff());
  }
  ConformalEquivalence out;
  out.report.add(below("conformal_equivalence", worst, tol, "d Omega ^ theta = 0"));
  out.report.stamp(samples, seed);
  out.equivalent = out.report.passed();
  return out;
}

}  // namespace schrogeo::bargmann
