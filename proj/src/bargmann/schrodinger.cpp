#include "schrogeo/bargmann/schrodinger.hpp"

#include <cmath>
#include <string>

#include "schrogeo/errors.hpp"
#include "schrogeo/geometry/tensor_calculus.hpp"

namespace schrogeo::bargmann {

void SchrodingerParams::validate() const {
  if (!(m > 0.0) || !(hbar > 0.0)) {
    throw ContractViolation("mass and hbar must be positive");
  }
}

DensityFunction plane_wave(const Eigen::VectorXd& k, double omega, double sigma, double weight) {
  const Eigen::Index d = k.size();
  auto phase = [k, omega, sigma, d](const auto& p) {
    using S = typename std::decay_t<decltype(p)>::Scalar;
    S out = -omega * p[d] + sigma * p[d + 1];
    for (Eigen::Index i = 0; i < d; ++i) out += k[i] * p[i];
    return out;
  };
  return {ScalarField::from([phase](const auto& p) {
            using std::cos;
            return cos(phase(p));
          }),
          ScalarField::from([phase](const auto& p) {
            using std::sin;
            return sin(phase(p));
          }),
          weight};
}

DensityFunction schrodinger_plane_wave(const Eigen::VectorXd& k, const SchrodingerParams& sp) {
  sp.validate();
  const int d = static_cast<int>(k.size());
  return plane_wave(k, sp.hbar * k.squaredNorm() / (2.0 * sp.m), sp.m / sp.hbar, schrodinger_weight(d));
}

std::complex<double> evaluate(const DensityFunction& psi, const Eigen::VectorXd& p) {
  return {psi.re(p), psi.im(p)};
}

namespace {

std::complex<double> lie_from_jets(const MetricField& m, const VectorField& x, const Jet2& re,
                                   const Jet2& im, double weight, const Eigen::VectorXd& p) {
  const Eigen::Index n = p.size();
  const Eigen::VectorXd xv = x(p);
  std::complex<double> out(xv.dot(re.grad(n)), xv.dot(im.grad(n)));
  if (weight != 0.0) {
    out += weight * divergence(m, x, p) * std::complex<double>(re.value(), im.value());
  }
  return out;
}

}  // namespace

std::complex<double> density_lie_derivative(const MetricField& m, const VectorField& x,
                                            const DensityFunction& psi, const Eigen::VectorXd& p) {
  return lie_from_jets(m, x, psi.re.jet_at(p), psi.im.jet_at(p), psi.weight, p);
}

SchrodingerResidual schrodinger_residual(const BargmannStructure& b, const DensityFunction& psi,
                                         const SchrodingerParams& sp, const Eigen::VectorXd& p) {
  sp.validate();
  const double w = schrodinger_weight(b.d);
  if (std::abs(psi.weight - w) > 1e-12) {
    throw ContractViolation("Schroedinger densities must have weight d/(2d+4) = " + std::to_string(w) +
                            ", got " + std::to_string(psi.weight));
  }
  // Each coefficient is differentiated once; transported densities make
  // these evaluations the dominant cost.
  const Jet2 re = psi.re.jet_at(p);
  const Jet2 im = psi.im.jet_at(p);
  SchrodingerResidual r;
  r.r1 = {yamabe_residual(b.metric, re, p), yamabe_residual(b.metric, im, p)};
  const std::complex<double> minus_i(0.0, -1.0);
  r.r2 = sp.hbar * minus_i * lie_from_jets(b.metric, b.xi, re, im, psi.weight, p) -
         sp.m * std::complex<double>(re.value(), im.value());
  return r;
}

}  // namespace schrogeo::bargmann
