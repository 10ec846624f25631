#include "schrogeo/bargmann/flat.hpp"

namespace schrogeo::bargmann {

MetricField flat_metric(int d) {
  const Eigen::MatrixXd g = flat_gram(d);
  return MetricField::from(Chart::bargmann(d), {d + 1, 1}, [g](const auto& p) {
    using S = typename std::decay_t<decltype(p)>::Scalar;
    return MatX<S>(g.cast<S>());
  });
}

VectorField fundamental_field(int d) { return VectorField::constant(xi_vector(d)); }

OneForm clock_form(int d) { return OneForm::constant(Eigen::VectorXd::Unit(d + 2, d)); }

}  // namespace schrogeo::bargmann
