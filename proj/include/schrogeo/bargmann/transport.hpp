#pragma once

// Transport of densities along chart diffeomorphisms. A diffeomorphism Phi is
// handed over through its inverse: InverseMap evaluates
//
//   y  ->  (Phi^{-1}(y), log |det D Phi^{-1}(y)|)
//
// on doubles and on jets, so the transported density
//   (coefficient o Phi^{-1}) * |det D Phi^{-1}|^w
// can be differentiated twice exactly.

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "schrogeo/bargmann/schrodinger.hpp"

namespace schrogeo::bargmann {

class InverseMap {
 public:
  using F64 = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
  using FJet = std::function<VecX<Jet2>(const VecX<Jet2>&)>;

  InverseMap(F64 f, FJet j) : f64_(std::move(f)), jet_(std::move(j)) {}

  // `g` returns n + 1 entries: the preimage followed by the log-Jacobian.
  template <typename Generic>
  static InverseMap from(Generic g) {
    return InverseMap([g](const Eigen::VectorXd& y) -> Eigen::VectorXd { return g(y); },
                      [g](const VecX<Jet2>& y) -> VecX<Jet2> { return g(y); });
  }

  Eigen::VectorXd operator()(const Eigen::VectorXd& y) const { return f64_(y); }
  VecX<Jet2> operator()(const VecX<Jet2>& y) const { return jet_(y); }

 private:
  F64 f64_;
  FJet jet_;
};

InverseMap identity_map();
InverseMap translation_inverse(const Eigen::VectorXd& shift);
// Phi(x, t, s) = (e^chi x, e^{2 chi} t, s)
InverseMap dilation_inverse(int d, double chi);

inline constexpr double kFlowStep = 1e-3;

// Inverse of the time-`time` flow of v: RK4 integration of y' = -v(y) with
// the log-Jacobian carried along as l' = -div(y). `coordinate_divergence`
// must be the plain coordinate divergence d_a v^a.
InverseMap flow_inverse(const VectorField& v, const ScalarField& coordinate_divergence, double time,
                        double step = kFlowStep);

// Composition Phi_2 o Phi_1, given both inverses.
InverseMap compose_inverse(const InverseMap& phi2_inv, const InverseMap& phi1_inv);

// (coefficient o Phi^{-1}) |det D Phi^{-1}|^exponent; the weight tag is kept.
// Non-finite preimages raise ChartEscape.
DensityFunction transport_density(const DensityFunction& psi, const InverseMap& inverse, double exponent);

struct TransportOptions {
  int samples = 20;
  std::uint64_t seed = 42;
  double tol = 1e-7;
  double box = 1.0;  // samples drawn from [-box, box]^n
  // Jacobian exponent; defaults to the density weight.
  std::optional<double> exponent;
};

// Re-checks the Schroedinger system for the transported density at sampled
// points. Records: "transported_yamabe" (max |r1|) and "transported_vertical"
// (max |r2|).
VerificationReport symmetry_transport_check(const BargmannStructure& b, const InverseMap& inverse,
                                            const DensityFunction& psi, const SchrodingerParams& sp,
                                            const TransportOptions& opts = {});

}  // namespace schrogeo::bargmann
