#pragma once

// Densities on Bargmann space and the covariant Schroedinger system
//
//   Yamabe(psi) = 0,   (hbar / i) L_xi psi = m psi,
//
// for densities of weight d / (2d + 4). Complex coefficients are carried as
// (re, im) pairs because every operator involved has real coefficients.

#include <Eigen/Core>

#include <complex>

#include "schrogeo/bargmann/structure.hpp"
#include "schrogeo/geometry/fields.hpp"

namespace schrogeo::bargmann {

struct DensityFunction {
  ScalarField re;
  ScalarField im;
  double weight = 0.0;
};

struct SchrodingerParams {
  double m = 1.0;
  double hbar = 1.0;

  void validate() const;
};

// d / (2d + 4), the weight for which the Yamabe operator is conformally
// covariant on a (d+2)-manifold.
inline double schrodinger_weight(int d) { return d / (2.0 * d + 4.0); }
inline double dual_weight(int d) { return (d + 4.0) / (2.0 * d + 4.0); }

// exp(i (k.x - omega t + sigma s)) with the given weight.
DensityFunction plane_wave(const Eigen::VectorXd& k, double omega, double sigma, double weight);

// The plane wave solving the system: omega = hbar |k|^2 / (2m), sigma = m / hbar.
DensityFunction schrodinger_plane_wave(const Eigen::VectorXd& k, const SchrodingerParams& sp);

std::complex<double> evaluate(const DensityFunction& psi, const Eigen::VectorXd& p);

// X(f) + w Div(X) f, the divergence taken against the metric volume.
std::complex<double> density_lie_derivative(const MetricField& m, const VectorField& x,
                                            const DensityFunction& psi, const Eigen::VectorXd& p);

struct SchrodingerResidual {
  std::complex<double> r1;  // Yamabe operator on the coefficient
  std::complex<double> r2;  // (hbar / i) L_xi psi - m psi
};

// Throws ContractViolation unless psi.weight == d / (2d + 4).
SchrodingerResidual schrodinger_residual(const BargmannStructure& b, const DensityFunction& psi,
                                         const SchrodingerParams& sp, const Eigen::VectorXd& p);

}  // namespace schrogeo::bargmann
