#pragma once

// The conformal boundary M: rays of null vectors X with F0(X) > 0, charted by
// [X] = (x, -g(x, x)/2, 1). The representative metric and clock are
//
//   g_F0(dX, d'X) = dXbar d'X / F0(X),    theta_F0(dX) = -Xbar Z0 dX / F0(X).

#include <Eigen/Core>

#include <cstdint>

#include "schrogeo/geometry/fields.hpp"
#include "schrogeo/report.hpp"

namespace schrogeo::homogeneous {

// Both fields are built from the ambient contractions along the chart
// Jacobian of [X], not from their closed forms.
MetricField boundary_metric(int d);
OneForm boundary_clock(int d);
// xi = d/ds, image of delta_Z0 on the chart.
VectorField boundary_xi(int d);

// Records: scale_invariance, closed_theta, parallel_theta, xi_null,
// xi_nonzero, xi_pushforward, cone_kernel_dim, cone_kernel_angle,
// conformal_to_flat, conformal_factor_time_only.
VerificationReport boundary_structure(int d, int samples, std::uint64_t seed, double tol = 1e-8);

}  // namespace schrogeo::homogeneous
