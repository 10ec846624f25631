#pragma once

// Isometries and isotropy of the homogeneous spaces under the group of
// G-isometries commuting with Z0.

#include <Eigen/Core>

#include <cstdint>

#include "schrogeo/ambient/ambient.hpp"
#include "schrogeo/homogeneous/embedding.hpp"
#include "schrogeo/report.hpp"

namespace schrogeo::homogeneous {

// Chart map induced by Q -> A Q; throws ChartEscape when the image leaves the
// sheet of the chart (last component of A Q not positive).
Eigen::VectorXd act_on_chart(const Eigen::MatrixXd& a, const Eigen::VectorXd& chart, int d, double lambda);

// Largest entry of phi^* g - g over the samples, phi = act_on_chart(A, .).
double pullback_residual(const SchrodingerManifoldConfig& cfg, const Eigen::MatrixXd& a, int samples,
                         std::uint64_t seed);

// A is first tested for membership (G-isometry commuting with Z0). Members
// produce records quadric_preserved, kernel_preserved, metric_preserved,
// theta_preserved (all "<" tol); non-members produce the negative-control
// record metric_not_preserved ("> 1e-3") together with commutes_with_Z0
// reporting |[A, Z0]|.
VerificationReport isometry_check(const SchrodingerManifoldConfig& cfg, const Eigen::MatrixXd& a, int samples,
                                  std::uint64_t seed, double tol = 1e-8);

// Galilean boost generator along x^1: Lambda = e_s e_1bar - e_1 e_sbar.
Eigen::MatrixXd boost_generator(int d);

// Hyperbolic rotation exp(phi) on u, exp(-phi) on v: a G-isometry that
// rescales Z0 instead of commuting with it.
Eigen::MatrixXd uv_rotation(int d, double phi);

// Isotropy element of the origin Q0 parametrized by (R, u, a).
ambient::GroupElement bulk_isotropy_element(const Eigen::MatrixXd& rotation, const Eigen::VectorXd& shift, double a,
                                            double lambda);

// Stabilizer element of the ray through e_v, parametrized by (R, v, a, e).
ambient::GroupElement boundary_isotropy_element(const Eigen::MatrixXd& rotation, const Eigen::VectorXd& boost,
                                                double a, double e);

// Q0 = embed(x = 0, r = sqrt(-2 lambda)) = lambda e_u + e_v.
Eigen::VectorXd origin(int d, double lambda);

struct IsotropyDims {
  int algebra = 0;   // dim of the commutant
  int bulk = 0;      // dim {Z : Z Q0 = 0}
  int boundary = 0;  // dim {Z : Z X in R X}, X = e_v
  int bulk_space() const { return algebra - bulk; }
  int boundary_space() const { return algebra - boundary; }
};
IsotropyDims isotropy_dims(int d, double lambda, double tol = kDefaultRankTol);

// Records bulk_isotropy_dim, bulk_space_dim, boundary_isotropy_dim,
// boundary_space_dim, bulk_sample_fixes_origin, boundary_sample_fixes_ray.
VerificationReport isotropy_check(const SchrodingerManifoldConfig& cfg, std::uint64_t seed = 42);

}  // namespace schrogeo::homogeneous
