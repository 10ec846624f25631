#include "schrogeo/ambient/ambient.hpp"

#include <Eigen/LU>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <string>

#include "schrogeo/bargmann/flat.hpp"
#include "schrogeo/errors.hpp"
#include "schrogeo/geometry/tensor_calculus.hpp"

namespace schrogeo::ambient {
namespace {

void require_dim(int d) {
  if (d < 1) throw ContractViolation("ambient constructions need d >= 1, got " + std::to_string(d));
}

int dim_of(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || a.rows() < 5) {
    throw ContractViolation("expected a square ambient matrix of size d + 4 >= 5");
  }
  return static_cast<int>(a.rows()) - 4;
}

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Basis of the G-skew matrices: G^{-1} (E_ij - E_ji), i < j.
std::vector<Eigen::MatrixXd> skew_basis(int d) {
  const Eigen::Index n = d + 4;
  const Eigen::MatrixXd ginv = ambient_gram(d).inverse();
  std::vector<Eigen::MatrixXd> out;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
      k(i, j) = 1.0;
      k(j, i) = -1.0;
      out.push_back(ginv * k);
    }
  return out;
}

Eigen::VectorXd vec(const Eigen::MatrixXd& m) { return Eigen::Map<const Eigen::VectorXd>(m.data(), m.size()); }

}  // namespace

Eigen::MatrixXd ambient_gram(int d) {
  require_dim(d);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(d + 4, d + 4);
  g.topLeftCorner(d + 2, d + 2) = bargmann::flat_gram(d);
  g(u_index(d), v_index(d)) = g(v_index(d), u_index(d)) = 1.0;
  return g;
}

Eigen::MatrixXd g_adjoint(const Eigen::MatrixXd& a, int d) {
  const Eigen::MatrixXd g = ambient_gram(d);
  return g.inverse() * a.transpose() * g;
}

double skew_defect(const Eigen::MatrixXd& a, int d) {
  const Eigen::MatrixXd g = ambient_gram(d);
  return max_abs(g * a + a.transpose() * g);
}

AlternateBasis alternate_basis(int d) {
  require_dim(d);
  const Eigen::Index n = d + 4;
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  m.topLeftCorner(d, d).setIdentity();
  const Eigen::Index t = t_index(d), s = s_index(d), u = u_index(d), v = v_index(d);
  m(t, t) = h, m(s, t) = h;
  m(t, s) = h, m(s, s) = -h;
  m(u, u) = h, m(v, u) = h;
  m(u, v) = h, m(v, v) = -h;
  AlternateBasis out;
  out.change = m;
  out.change_inverse = m.inverse();
  out.gram = m.transpose() * ambient_gram(d) * m;
  return out;
}

SpecialNullVector make_special(const Eigen::VectorXd& p, const Eigen::VectorXd& q, int d) {
  require_dim(d);
  if (p.size() != d + 4 || q.size() != d + 4) throw ContractViolation("make_special: vectors must have d + 4 entries");
  const Eigen::MatrixXd g = ambient_gram(d);
  SpecialNullVector out{p, q, p * (g * q).transpose() - q * (g * p).transpose()};
  const double scale = std::max(1.0, p.cwiseAbs().maxCoeff() * q.cwiseAbs().maxCoeff());
  if (max_abs(out.z) <= 1e-14 * scale) throw ContractViolation("degenerate pair: P and Q are parallel");
  return out;
}

SpecialNullVector build_Z0(int d) {
  const Eigen::Index n = d + 4;
  return make_special(Eigen::VectorXd::Unit(n, s_index(d)), Eigen::VectorXd::Unit(n, u_index(d)), d);
}

std::vector<Eigen::MatrixXd> commutant_basis(int d, double tol) {
  const std::vector<Eigen::MatrixXd> skew = skew_basis(d);
  const Eigen::MatrixXd z0 = build_Z0(d).z;
  const Eigen::Index n = d + 4;
  Eigen::MatrixXd op(n * n, static_cast<Eigen::Index>(skew.size()));
  for (std::size_t k = 0; k < skew.size(); ++k) op.col(static_cast<Eigen::Index>(k)) = vec(commutator(skew[k], z0));
  const RankNullspace rn = rank_nullspace(op, tol);

  // Assemble and orthonormalize in the Frobenius inner product.
  Eigen::MatrixXd flat(n * n, rn.nullspace.cols());
  for (Eigen::Index c = 0; c < rn.nullspace.cols(); ++c) {
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t k = 0; k < skew.size(); ++k) z += rn.nullspace(static_cast<Eigen::Index>(k), c) * skew[k];
    flat.col(c) = vec(z);
  }
  std::vector<Eigen::MatrixXd> out;
  if (flat.cols() == 0) return out;
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(flat);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n * n, flat.cols());
  for (Eigen::Index c = 0; c < q.cols(); ++c) {
    // Rewriting through the block parameters removes rounding noise from the
    // dependent blocks, so the elements have the exact commutant pattern.
    const Eigen::MatrixXd z = Eigen::Map<const Eigen::MatrixXd>(q.col(c).data(), n, n);
    out.push_back(assemble_sch(decompose_sch(z)));
  }
  return out;
}

double SchParams::xi_defect() const {
  const Eigen::VectorXd xi = bargmann::xi_vector(d());
  return max_abs(lambda_block * xi + chi * xi);
}

Eigen::MatrixXd assemble_sch(const SchParams& p) {
  const int d = p.d();
  require_dim(d);
  const Eigen::Index m = d + 2;
  const Eigen::MatrixXd g = bargmann::flat_gram(d);
  const Eigen::VectorXd xi = bargmann::xi_vector(d);
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(m + 2, m + 2);
  z.topLeftCorner(m, m) = p.lambda_block;
  z.block(0, m, m, 1) = p.alpha * xi;
  z.block(0, m + 1, m, 1) = p.gamma;
  z.block(m, 0, 1, m) = -(g * p.gamma).transpose();
  z(m, m) = p.chi;
  z.block(m + 1, 0, 1, m) = -p.alpha * (g * xi).transpose();
  z(m + 1, m + 1) = -p.chi;
  return z;
}

SchParams decompose_sch(const Eigen::MatrixXd& z) {
  const int d = dim_of(z);
  const double defect = max_abs(commutator(z, build_Z0(d).z));
  if (defect > 1e-10 * std::max(1.0, max_abs(z))) {
    throw ContractViolation("decompose_sch: element does not commute with Z0 (defect " + std::to_string(defect) + ")");
  }
  const Eigen::Index m = d + 2;
  SchParams p;
  p.lambda_block = z.topLeftCorner(m, m);
  p.alpha = z(s_index(d), m);
  p.gamma = z.block(0, m + 1, m, 1);
  p.chi = z(m, m);
  return p;
}

RealizedField realize_field(const SchParams& p) {
  const int d = p.d();
  require_dim(d);
  if (p.xi_defect() > 1e-10) {
    throw ContractViolation("realize_field: Lambda xi + chi xi = 0 violated (defect " +
                            std::to_string(p.xi_defect()) + ")");
  }
  const Eigen::MatrixXd lam = p.lambda_block;
  const Eigen::VectorXd gam = p.gamma;
  const double alpha = p.alpha, chi = p.chi;
  RealizedField out;
  out.field = VectorField::from([=](const auto& x) {
    using S = typename std::decay_t<decltype(x)>::Scalar;
    const S t = x[d];
    const S xx = bargmann::flat_inner<S>(x, x, d);
    VecX<S> v = lam.cast<S>() * x + gam.cast<S>();
    for (int i = 0; i < d + 2; ++i) v[i] += (alpha * t + chi) * x[i];
    v[d + 1] -= 0.5 * alpha * xx;
    return v;
  });
  out.radial_rate = ScalarField::from([=](const auto& x) {
    using S = typename std::decay_t<decltype(x)>::Scalar;
    return S(alpha * x[d] + chi);
  });
  out.divergence = ScalarField::from([=](const auto& x) {
    using S = typename std::decay_t<decltype(x)>::Scalar;
    return S((d + 2.0) * (alpha * x[d] + chi));
  });
  return out;
}

double bracket_residual(const Eigen::MatrixXd& z1, const Eigen::MatrixXd& z2, double sign, int samples,
                        std::uint64_t seed) {
  const int d = dim_of(z1);
  const VectorField v1 = realize_field(decompose_sch(z1)).field;
  const VectorField v2 = realize_field(decompose_sch(z2)).field;
  const VectorField v12 = realize_field(decompose_sch(commutator(z1, z2))).field;
  SeededSampler sampler(seed, std::vector<Interval>(static_cast<std::size_t>(d + 2), Interval{-1.0, 1.0}));
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Eigen::VectorXd p = sampler.sample();
    worst = std::max(worst, max_abs(lie_bracket(v1, v2, p) - sign * v12(p)));
  }
  return worst;
}

VerificationReport bracket_compatibility(const Eigen::MatrixXd& z1, const Eigen::MatrixXd& z2, int samples,
                                         std::uint64_t seed, double tol) {
  VerificationReport report;
  CheckRecord& r = report.add(below("bracket_compatibility", bracket_residual(z1, z2, kBracketSign, samples, seed),
                                    tol, "[V(Z1), V(Z2)] = -V([Z1, Z2])"));
  r.detail = "sign -1 (anti-homomorphism)";
  report.stamp(samples, seed);
  return report;
}

GroupBlocks GroupBlocks::identity(int dim) {
  GroupBlocks g;
  g.L = Eigen::MatrixXd::Identity(dim + 2, dim + 2);
  g.B = Eigen::VectorXd::Zero(dim + 2);
  g.C = Eigen::VectorXd::Zero(dim + 2);
  return g;
}

const char* const kConstraintFormulas[8] = {
    "block pattern",
    "constraint 1: L xi = e xi",
    "constraint 2: L* xi = b xi",
    "constraint 3: L*L = 1 + a(xi B* + B xi*)",
    "constraint 4: L*C - a d xi + e B = 0",
    "constraint 5: a xi*C + b e = 1",
    "constraint 6: xi*(B + C) = 0",
    "constraint 7: C*C + 2 d e = 0",
};

std::vector<double> constraint_residuals(const GroupBlocks& k) {
  const Eigen::Index m = k.L.rows();
  const int d = static_cast<int>(m) - 2;
  require_dim(d);
  if (k.L.cols() != m || k.B.size() != m || k.C.size() != m) {
    throw ContractViolation("group blocks have inconsistent sizes");
  }
  const Eigen::MatrixXd g = bargmann::flat_gram(d);
  const Eigen::MatrixXd ginv = g.inverse();
  const Eigen::VectorXd xi = bargmann::xi_vector(d);
  const Eigen::RowVectorXd xi_star = (g * xi).transpose();
  const Eigen::RowVectorXd b_star = (g * k.B).transpose();
  const Eigen::MatrixXd l_star = ginv * k.L.transpose() * g;
  std::vector<double> r(8, 0.0);
  r[1] = max_abs(k.L * xi - k.e * xi);
  r[2] = max_abs(l_star * xi - k.b * xi);
  r[3] = max_abs(l_star * k.L - k.a * (xi * b_star + k.B * xi_star) - Eigen::MatrixXd::Identity(m, m));
  r[4] = max_abs(l_star * k.C - k.a * k.d * xi + k.e * k.B);
  r[5] = std::abs(k.a * xi_star.dot(k.C) + k.b * k.e - 1.0);
  r[6] = std::abs(xi_star.dot(k.B + k.C));
  r[7] = std::abs(k.C.dot(g * k.C) + 2.0 * k.d * k.e);
  return r;
}

Eigen::MatrixXd assemble_matrix(const GroupBlocks& k) {
  const Eigen::Index m = k.L.rows();
  const int d = static_cast<int>(m) - 2;
  require_dim(d);
  const Eigen::MatrixXd g = bargmann::flat_gram(d);
  const Eigen::VectorXd xi = bargmann::xi_vector(d);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m + 2, m + 2);
  a.topLeftCorner(m, m) = k.L;
  a.block(0, m, m, 1) = k.a * xi;
  a.block(0, m + 1, m, 1) = k.C;
  a.block(m, 0, 1, m) = (g * k.B).transpose();
  a(m, m) = k.b;
  a(m, m + 1) = k.d;
  a.block(m + 1, 0, 1, m) = -k.a * (g * xi).transpose();
  a(m + 1, m + 1) = k.e;
  return a;
}

GroupBlocks blocks_of(const Eigen::MatrixXd& a) {
  const int d = dim_of(a);
  const Eigen::Index m = d + 2;
  const Eigen::MatrixXd ginv = bargmann::flat_gram(d).inverse();
  GroupBlocks k;
  k.L = a.topLeftCorner(m, m);
  k.a = a(s_index(d), m);
  k.C = a.block(0, m + 1, m, 1);
  k.B = ginv * a.block(m, 0, 1, m).transpose();
  k.b = a(m, m);
  k.d = a(m, m + 1);
  k.e = a(m + 1, m + 1);
  return k;
}

GroupElement assemble_group_element(const GroupBlocks& blocks, double tol) {
  const Eigen::MatrixXd a = assemble_matrix(blocks);
  const int d = dim_of(a);
  const double scale = std::pow(std::max(1.0, max_abs(a)), 2);
  const std::vector<double> r = constraint_residuals(blocks);
  for (int k = 1; k <= 7; ++k) {
    if (!(r[static_cast<std::size_t>(k)] <= tol * scale)) {
      throw ConstraintViolation(k, std::string("violated ") + kConstraintFormulas[k] + " (residual " +
                                       std::to_string(r[static_cast<std::size_t>(k)]) + ")");
    }
  }
  const Eigen::Index n = d + 4;
  const double iso = max_abs(g_adjoint(a, d) * a - Eigen::MatrixXd::Identity(n, n));
  if (!(iso <= tol * scale)) throw ConstraintViolation(8, "violated isometry: Abar A = 1");
  const Eigen::MatrixXd z0 = build_Z0(d).z;
  const double comm = max_abs(a * z0 - z0 * a);
  if (!(comm <= tol * scale)) throw ConstraintViolation(9, "violated stabilizer: A Z0 = Z0 A");
  return {a, blocks};
}

GroupElement group_element(const Eigen::MatrixXd& a, double tol) {
  const GroupBlocks k = blocks_of(a);
  const double pattern = max_abs(assemble_matrix(k) - a);
  if (!(pattern <= tol * std::max(1.0, max_abs(a)))) {
    throw ConstraintViolation(0, "matrix does not have the stabilizer block pattern");
  }
  return assemble_group_element(k, tol);
}

ProjectiveImage projective_action(const Eigen::MatrixXd& a, const Eigen::VectorXd& x, double r) {
  const int d = dim_of(a);
  if (x.size() != d + 2) throw ContractViolation("projective_action: point must have d + 2 coordinates");
  if (r == 0.0) throw ContractViolation("projective_action: r must be nonzero");
  const GroupBlocks k = blocks_of(a);
  const double den = k.e - k.a * x[t_index(d)];
  if (std::abs(den) <= 1e-8) throw ChartEscape("chart escape: e - a t vanishes");
  const double xx = bargmann::flat_inner<double>(x, x, d);
  ProjectiveImage out;
  out.x = (k.L * x - 0.5 * k.a * xx * bargmann::xi_vector(d) + k.C) / den;
  out.r = r / den;
  return out;
}

Eigen::VectorXd bargmann_lift(const Eigen::VectorXd& x, double r) {
  const int d = static_cast<int>(x.size()) - 2;
  require_dim(d);
  if (r == 0.0) throw ContractViolation("bargmann_lift: r must be nonzero");
  Eigen::VectorXd out(d + 4);
  out.head(d + 2) = x;
  out[u_index(d)] = -0.5 * bargmann::flat_inner<double>(x, x, d);
  out[v_index(d)] = 1.0;
  return out / r;
}

Eigen::MatrixXd random_sch_element(int d, SeededSampler& sampler, double scale) {
  const std::vector<Eigen::MatrixXd> basis = commutant_basis(d);
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(d + 4, d + 4);
  for (const Eigen::MatrixXd& b : basis) z += sampler.uniform(-scale, scale) * b;
  return z;
}

Eigen::MatrixXd random_skew(int d, SeededSampler& sampler, double scale) {
  const std::vector<Eigen::MatrixXd> skew = skew_basis(d);
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(d + 4, d + 4);
  for (const Eigen::MatrixXd& b : skew) z += sampler.uniform(-scale, scale) * b;
  return z;
}

Eigen::MatrixXd random_isometry(int d, SeededSampler& sampler, double scale) {
  return expm(random_skew(d, sampler, scale));
}

WitnessMatrices witness_matrices(int d) {
  require_dim(d);
  const Eigen::Index n = d + 4;
  WitnessMatrices w;
  w.S = Eigen::MatrixXd::Identity(d, d);
  w.S(0, 0) = -1.0;
  w.I = Eigen::MatrixXd::Identity(n, n);
  w.P = w.I;
  w.P.topLeftCorner(d, d) = w.S;
  w.T = w.I;
  w.T(n - 1, n - 1) = -1.0;
  w.PT = w.P * w.T;
  const AlternateBasis basis = alternate_basis(d);
  w.Z0prime = basis.change_inverse * build_Z0(d).z * basis.change;
  return w;
}

VerificationReport component_witnesses(int d) {
  const WitnessMatrices w = witness_matrices(d);
  const AlternateBasis basis = alternate_basis(d);
  const Eigen::Index n = d + 4;

  Eigen::MatrixXd gprime = Eigen::MatrixXd::Identity(n, n);
  gprime(d + 1, d + 1) = gprime(d + 3, d + 3) = -1.0;
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(n, n);
  expected.block(d, d + 2, 2, 2) << 0.5, -0.5, -0.5, 0.5;
  expected.block(d + 2, d, 2, 2) << -0.5, -0.5, -0.5, -0.5;

  VerificationReport report;
  report.add(below("alternate_gram", max_abs(basis.gram - gprime), 1e-12, "M^T G M = diag(1, D, D)"));
  report.add(below("alternate_Z0", max_abs(w.Z0prime - expected), 1e-12, "M^-1 Z0 M = [[0,0,0],[0,0,U],[0,V,0]]"));
  report.add(equals("commutator_I", 0.0, max_abs(commutator(w.I, w.Z0prime)), "[I, Z0'] = 0"));
  report.add(equals("commutator_P", 0.0, max_abs(commutator(w.P, w.Z0prime)), "[P, Z0'] = 0"));
  report.add(above("commutator_T", commutator(w.T, w.Z0prime).norm(), 0.1, "[T, Z0'] != 0"));
  report.add(above("commutator_PT", commutator(w.PT, w.Z0prime).norm(), 0.1, "[PT, Z0'] != 0"));
  double iso = 0.0;
  for (const Eigen::MatrixXd* m : {&w.I, &w.P, &w.T, &w.PT}) {
    iso = std::max(iso, max_abs(m->transpose() * basis.gram * *m - basis.gram));
  }
  report.add(equals("witnesses_are_isometries", 0.0, iso, "X^T G' X = G' for X in {I, P, T, PT}"));
  report.add(equals("S_involution", 0.0, max_abs(w.S * w.S - Eigen::MatrixXd::Identity(d, d)), "S^2 = 1"));
  report.add(equals("S_determinant", -1.0, w.S.determinant(), "det S = -1"));
  return report;
}

CoadjointValue coadjoint_oneform(const Eigen::MatrixXd& a, const Eigen::MatrixXd& da, const Eigen::MatrixXd& dpa,
                                 int d) {
  require_dim(d);
  const Eigen::Index n = d + 4;
  if (a.rows() != n || da.rows() != n || dpa.rows() != n) throw ContractViolation("coadjoint_oneform: size mismatch");
  const Eigen::MatrixXd g = ambient_gram(d);
  const double scale = std::max(1.0, max_abs(a));
  if (max_abs(a.transpose() * g * a - g) > 1e-10 * scale * scale) {
    throw ContractViolation("coadjoint_oneform: A is not an isometry of G");
  }
  const Eigen::MatrixXd ainv = a.inverse();
  const Eigen::MatrixXd m1 = ainv * da;
  const Eigen::MatrixXd m2 = ainv * dpa;
  if (skew_defect(m1, d) > 1e-10 * std::max(1.0, max_abs(m1)) ||
      skew_defect(m2, d) > 1e-10 * std::max(1.0, max_abs(m2))) {
    throw ContractViolation("coadjoint_oneform: tangent vectors are not tangent to O(d+2,2) at A");
  }
  const Eigen::MatrixXd z0 = build_Z0(d).z;
  const Eigen::Index s = s_index(d), u = u_index(d);
  CoadjointValue out;
  out.varpi = -0.5 * (z0 * m1).trace();
  const Eigen::VectorXd p = a.col(s);
  out.pbar_dq = p.dot(g * da.col(u));
  out.sign = std::abs(out.pbar_dq) > 1e-12 ? out.varpi / out.pbar_dq : 0.0;
  out.d_varpi = da.col(s).dot(g * dpa.col(u)) - dpa.col(s).dot(g * da.col(u));
  out.d_varpi_swapped = dpa.col(s).dot(g * da.col(u)) - da.col(s).dot(g * dpa.col(u));
  return out;
}

}  // namespace schrogeo::ambient
