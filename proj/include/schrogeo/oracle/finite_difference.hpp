#pragma once

// Finite-difference reference values. These use only double evaluations of
// the fields (never their jets): central differences with step h, one
// Richardson extrapolation (4 D(h/2) - D(h)) / 3.

#include <Eigen/Core>

#include <functional>

#include "schrogeo/geometry/fields.hpp"
#include "schrogeo/geometry/tensor_calculus.hpp"

namespace schrogeo::oracle {

inline constexpr double kFdStep = 1e-5;
// Step for the outer difference when two derivatives are nested; a coarser
// step keeps the inner rounding noise from being amplified by 1/h twice.
inline constexpr double kFdOuterStep = 1e-3;

// d/dx_i of a vector-valued map, Richardson-extrapolated central difference.
Eigen::MatrixXd fd_jacobian(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
                            const Eigen::VectorXd& p, double h = kFdStep);

// Gamma^a_bc from finite differences of the Gram matrix.
Array3 fd_christoffel(const MetricField& m, const Eigen::VectorXd& p, double h = kFdStep);

// Ricci tensor from finite differences of fd_christoffel.
Eigen::MatrixXd fd_ricci(const MetricField& m, const Eigen::VectorXd& p, double h = kFdStep);

// nabla_a w_b from finite differences.
Eigen::MatrixXd fd_covariant_derivative(const MetricField& m, const OneForm& w,
                                        const Eigen::VectorXd& p, double h = kFdStep);

// Laplace-Beltrami of a scalar from finite differences.
double fd_laplacian(const MetricField& m, const ScalarField& f, const Eigen::VectorXd& p,
                    double h = kFdStep);

}  // namespace schrogeo::oracle
