#pragma once

// The ambient space R^{d+2,2} = R^{d+2} (+) R^2 with coordinates
// (x^1..x^d, t, s, u, v), its Gram matrix
//
//   G = [ g 0 0 ]
//       [ 0 0 1 ]      g the flat Bargmann Gram matrix,
//       [ 0 1 0 ]
//
// and the distinguished nilpotent element Z0 = P0 Q0bar - Q0 P0bar with
// P0 = xi = e_s and Q0 = e_u. Bars denote G-adjoints: vbar = v^T G,
// Abar = G^{-1} A^T G.

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "schrogeo/geometry/fields.hpp"
#include "schrogeo/numkernel/linalg.hpp"
#include "schrogeo/numkernel/sampler.hpp"
#include "schrogeo/report.hpp"

namespace schrogeo::ambient {

// Index helpers for the (d+4)-dimensional ambient coordinates.
inline Eigen::Index t_index(int d) { return d; }
inline Eigen::Index s_index(int d) { return d + 1; }
inline Eigen::Index u_index(int d) { return d + 2; }
inline Eigen::Index v_index(int d) { return d + 3; }

Eigen::MatrixXd ambient_gram(int d);
Eigen::MatrixXd g_adjoint(const Eigen::MatrixXd& a, int d);
// G-skew defect |G A + A^T G|_max.
double skew_defect(const Eigen::MatrixXd& a, int d);

// Alternate basis in which the Gram matrix is diag(1_d, D, D), D = diag(1, -1).
// Columns of `change` are the new basis vectors in ambient coordinates, so
// G' = change^T G change and Z' = change^{-1} Z change.
struct AlternateBasis {
  Eigen::MatrixXd change;
  Eigen::MatrixXd change_inverse;
  Eigen::MatrixXd gram;  // G'
};
AlternateBasis alternate_basis(int d);

struct SpecialNullVector {
  Eigen::VectorXd p;
  Eigen::VectorXd q;
  Eigen::MatrixXd z;  // p qbar - q pbar
};

// Throws ContractViolation ("degenerate pair") when p qbar - q pbar vanishes.
SpecialNullVector make_special(const Eigen::VectorXd& p, const Eigen::VectorXd& q, int d);
SpecialNullVector build_Z0(int d);

// Frobenius-orthonormal basis of the commutant {Z in o(d+2,2) : [Z, Z0] = 0}.
std::vector<Eigen::MatrixXd> commutant_basis(int d, double tol = kDefaultRankTol);

// Parameters of an element of the commutant:
//   Z = [ Lambda      alpha xi   Gamma ]
//       [ -Gamma^*    chi        0     ]
//       [ -alpha xi^* 0          -chi  ]
struct SchParams {
  Eigen::MatrixXd lambda_block;  // Lambda, (d+2) x (d+2)
  Eigen::VectorXd gamma;         // Gamma
  double alpha = 0.0;
  double chi = 0.0;

  int d() const { return static_cast<int>(gamma.size()) - 2; }
  // |Lambda xi + chi xi|_max
  double xi_defect() const;
};

Eigen::MatrixXd assemble_sch(const SchParams& p);
// Throws ContractViolation when [Z, Z0] exceeds 1e-10.
SchParams decompose_sch(const Eigen::MatrixXd& z);

// Bargmann-space field of an element of the commutant.
struct RealizedField {
  VectorField field;         // Lambda x + Gamma - alpha g(x,x) xi / 2 + alpha t x + chi x
  ScalarField radial_rate;   // alpha t + chi, so that delta r = radial_rate * r
  ScalarField divergence;    // coordinate divergence (d + 2)(alpha t + chi)
};
// Throws ContractViolation when Lambda xi + chi xi != 0 (beyond 1e-10).
RealizedField realize_field(const SchParams& p);

// Convention adopted for the bracket: realize_field is an anti-homomorphism,
// [V(Z1), V(Z2)] = -V([Z1, Z2]).
inline constexpr double kBracketSign = -1.0;

// Largest |[V(Z1), V(Z2)] - sign V([Z1, Z2])| over sampled Bargmann points.
double bracket_residual(const Eigen::MatrixXd& z1, const Eigen::MatrixXd& z2, double sign, int samples,
                        std::uint64_t seed);
VerificationReport bracket_compatibility(const Eigen::MatrixXd& z1, const Eigen::MatrixXd& z2, int samples,
                                         std::uint64_t seed, double tol = 1e-9);

// A = [ L     a xi  C ]
//     [ B^*   b     d ]
//     [ -a xi^* 0   e ]
struct GroupBlocks {
  Eigen::MatrixXd L;
  Eigen::VectorXd B;
  Eigen::VectorXd C;
  double a = 0.0;
  double b = 1.0;
  double d = 0.0;
  double e = 1.0;

  static GroupBlocks identity(int dim);
};

struct GroupElement {
  Eigen::MatrixXd matrix;
  GroupBlocks blocks;
};

inline constexpr double kGroupTol = 1e-10;

// Residuals of the seven block constraints, indexed 1..7 (entry 0 unused):
//   1: L xi = e xi            2: L^* xi = b xi
//   3: L^* L = 1 + a(xi B^* + B xi^*)
//   4: L^* C - a d xi + e B = 0
//   5: a xi^* C + b e = 1     6: xi^*(B + C) = 0
//   7: C^* C + 2 d e = 0
std::vector<double> constraint_residuals(const GroupBlocks& blocks);
extern const char* const kConstraintFormulas[8];

Eigen::MatrixXd assemble_matrix(const GroupBlocks& blocks);
GroupBlocks blocks_of(const Eigen::MatrixXd& a);

// Throws ConstraintViolation naming the first violated constraint (1..7),
// then 8 for Abar A = 1 and 9 for A Z0 = Z0 A. Tolerances scale with the
// largest entry of A.
GroupElement assemble_group_element(const GroupBlocks& blocks, double tol = kGroupTol);
GroupElement group_element(const Eigen::MatrixXd& a, double tol = kGroupTol);

struct ProjectiveImage {
  Eigen::VectorXd x;
  double r = 1.0;
};

// x' = (L x - a g(x,x) xi / 2 + C) / (e - a t),  r' = r / (e - a t).
// Throws ChartEscape when |e - a t| <= 1e-8 and ContractViolation for r = 0.
ProjectiveImage projective_action(const Eigen::MatrixXd& a, const Eigen::VectorXd& x, double r);

// X(x, r) = (1/r) (x, -g(x,x)/2, 1)
Eigen::VectorXd bargmann_lift(const Eigen::VectorXd& x, double r);

// Random element of the commutant with coefficients uniform in [-scale, scale]
// against commutant_basis(d).
Eigen::MatrixXd random_sch_element(int d, SeededSampler& sampler, double scale);

// Random G-skew matrix with coefficients uniform in [-scale, scale] against
// the basis G^{-1}(E_ij - E_ji).
Eigen::MatrixXd random_skew(int d, SeededSampler& sampler, double scale);

// Random isometry of G (exponential of a random G-skew matrix).
Eigen::MatrixXd random_isometry(int d, SeededSampler& sampler, double scale);

struct WitnessMatrices {
  Eigen::MatrixXd I, P, T, PT, S, Z0prime;
};
WitnessMatrices witness_matrices(int d);
VerificationReport component_witnesses(int d);

struct CoadjointValue {
  double varpi = 0.0;        // -Tr(Z0 A^{-1} dA) / 2
  double pbar_dq = 0.0;      // Pbar dQ with P = A e_s, Q = A e_u
  double sign = 0.0;         // varpi / pbar_dq when the latter is nonzero
  double d_varpi = 0.0;      // dPbar d'Q - d'Pbar dQ
  double d_varpi_swapped = 0.0;
};

// Throws ContractViolation unless A is a G-isometry and both tangents are
// tangent at A (A^{-1} dA G-skew within 1e-10).
CoadjointValue coadjoint_oneform(const Eigen::MatrixXd& a, const Eigen::MatrixXd& da,
                                 const Eigen::MatrixXd& dpa, int d);

}  // namespace schrogeo::ambient
