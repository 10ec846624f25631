#include "schrogeo/bargmann/transport.hpp"

#include <algorithm>
#include <cmath>

#include "schrogeo/errors.hpp"
#include "schrogeo/numkernel/sampler.hpp"

namespace schrogeo::bargmann {
namespace {

template <typename S>
struct FlowState {
  VecX<S> y;
  S l;
};

template <typename S>
FlowState<S> flow_rhs(const VectorField& v, const ScalarField& div, const VecX<S>& y) {
  return {VecX<S>(-v(y)), S(-div(y))};
}

template <typename S>
VecX<S> integrate(const VectorField& v, const ScalarField& div, const VecX<S>& y0, double time,
                  double step) {
  const Eigen::Index n = y0.size();
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(time) / step - 1e-9)));
  const double h = time / steps;
  VecX<S> y = y0;
  S l(0.0);
  for (int k = 0; k < steps; ++k) {
    const FlowState<S> k1 = flow_rhs(v, div, y);
    const FlowState<S> k2 = flow_rhs(v, div, VecX<S>(y + (0.5 * h) * k1.y));
    const FlowState<S> k3 = flow_rhs(v, div, VecX<S>(y + (0.5 * h) * k2.y));
    const FlowState<S> k4 = flow_rhs(v, div, VecX<S>(y + h * k3.y));
    y += (h / 6.0) * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
    l += (h / 6.0) * (k1.l + 2.0 * k2.l + 2.0 * k3.l + k4.l);
  }
  VecX<S> out(n + 1);
  out.head(n) = y;
  out[n] = l;
  return out;
}

template <typename S>
bool all_finite(const VecX<S>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(value_of(v[i]))) return false;
  }
  return true;
}

}  // namespace

InverseMap identity_map() {
  return InverseMap::from([](const auto& y) {
    using S = typename std::decay_t<decltype(y)>::Scalar;
    VecX<S> out(y.size() + 1);
    out.head(y.size()) = y;
    out[y.size()] = S(0.0);
    return out;
  });
}

InverseMap translation_inverse(const Eigen::VectorXd& shift) {
  return InverseMap::from([shift](const auto& y) {
    using S = typename std::decay_t<decltype(y)>::Scalar;
    if (y.size() != shift.size()) throw ContractViolation("translation: dimension mismatch");
    VecX<S> out(y.size() + 1);
    out.head(y.size()) = y - shift.cast<S>();
    out[y.size()] = S(0.0);
    return out;
  });
}

InverseMap dilation_inverse(int d, double chi) {
  return InverseMap::from([d, chi](const auto& y) {
    using S = typename std::decay_t<decltype(y)>::Scalar;
    if (y.size() != d + 2) throw ContractViolation("dilation: dimension mismatch");
    VecX<S> out(d + 3);
    for (int i = 0; i < d; ++i) out[i] = std::exp(-chi) * y[i];
    out[d] = std::exp(-2.0 * chi) * y[d];
    out[d + 1] = y[d + 1];
    out[d + 2] = S(-(d + 2) * chi);
    return out;
  });
}

InverseMap flow_inverse(const VectorField& v, const ScalarField& coordinate_divergence, double time,
                        double step) {
  if (!(step > 0.0)) throw ContractViolation("flow step must be positive");
  return InverseMap::from([v, coordinate_divergence, time, step](const auto& y) {
    return integrate(v, coordinate_divergence, y, time, step);
  });
}

InverseMap compose_inverse(const InverseMap& phi2_inv, const InverseMap& phi1_inv) {
  return InverseMap::from([phi2_inv, phi1_inv](const auto& y) {
    using S = typename std::decay_t<decltype(y)>::Scalar;
    const Eigen::Index n = y.size();
    const VecX<S> z = phi2_inv(y);
    const VecX<S> w = phi1_inv(VecX<S>(z.head(n)));
    VecX<S> out = w;
    out[n] = w[n] + z[n];
    return out;
  });
}

DensityFunction transport_density(const DensityFunction& psi, const InverseMap& inverse, double exponent) {
  auto component = [inverse, exponent](const ScalarField& f) {
    return ScalarField::from([inverse, exponent, f](const auto& y) {
      using S = typename std::decay_t<decltype(y)>::Scalar;
      using std::exp;
      const Eigen::Index n = y.size();
      const VecX<S> z = inverse(y);
      if (!all_finite(z)) throw ChartEscape("chart escape: preimage is not finite");
      return S(f(VecX<S>(z.head(n))) * exp(exponent * z[n]));
    });
  };
  return {component(psi.re), component(psi.im), psi.weight};
}

VerificationReport symmetry_transport_check(const BargmannStructure& b, const InverseMap& inverse,
                                            const DensityFunction& psi, const SchrodingerParams& sp,
                                            const TransportOptions& opts) {
  if (opts.samples < 1) throw ContractViolation("symmetry_transport_check: samples must be >= 1");
  const DensityFunction moved = transport_density(psi, inverse, opts.exponent.value_or(psi.weight));
  SeededSampler sampler(opts.seed, std::vector<Interval>(static_cast<std::size_t>(b.d + 2),
                                                         Interval{-opts.box, opts.box}));
  double r1 = 0.0, r2 = 0.0;
  for (int k = 0; k < opts.samples; ++k) {
    const SchrodingerResidual r = schrodinger_residual(b, moved, sp, sampler.sample());
    r1 = std::max(r1, std::abs(r.r1));
    r2 = std::max(r2, std::abs(r.r2));
  }
  VerificationReport report;
  report.add(below("transported_yamabe", r1, opts.tol, "Yamabe(Phi_* psi) = 0"));
  report.add(below("transported_vertical", r2, opts.tol, "(hbar/i) L_xi Phi_* psi = m Phi_* psi"));
  report.stamp(opts.samples, opts.seed);
  return report;
}

}  // namespace schrogeo::bargmann
