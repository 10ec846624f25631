#include "schrogeo/homogeneous/metrics.hpp"

#include "schrogeo/errors.hpp"

namespace schrogeo::homogeneous {

void SchrodingerManifoldConfig::validate() const {
  if (d < 1) throw ContractViolation("spatial dimension d must be at least 1");
  if (!(lambda < 0.0)) throw ContractViolation("bulk constructions require lambda < 0");
}

MetricField schrodinger_metric(const SchrodingerManifoldConfig& cfg) {
  cfg.validate();
  const int d = cfg.d;
  const double lambda = cfg.lambda, mu = cfg.mu;
  return MetricField::from(Chart::bulk(d), {d + 2, 1}, [d, lambda, mu](const auto& p) {
    return schrodinger_gram(p, d, lambda, mu);
  });
}

MetricField poincare_metric(int d, double lambda) {
  return schrodinger_metric({d, lambda, 0.0});
}

OneForm theta_hat_form(const SchrodingerManifoldConfig& cfg) {
  const int d = cfg.d;
  const double lambda = cfg.lambda;
  return OneForm::from([d, lambda](const auto& p) { return theta_hat_components(p, d, lambda); });
}

VectorField xi_hat_field(int d) { return VectorField::constant(Eigen::VectorXd::Unit(d + 3, d + 1)); }

}  // namespace schrogeo::homogeneous
