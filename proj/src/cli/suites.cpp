#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "schrogeo/ambient/ambient.hpp"
#include "schrogeo/bargmann/flat.hpp"
#include "schrogeo/bargmann/schrodinger.hpp"
#include "schrogeo/bargmann/structure.hpp"
#include "schrogeo/bargmann/transport.hpp"
#include "schrogeo/cli/runner.hpp"
#include "schrogeo/errors.hpp"
#include "schrogeo/geometry/tensor_calculus.hpp"
#include "schrogeo/homogeneous/axioms.hpp"
#include "schrogeo/homogeneous/boundary.hpp"
#include "schrogeo/homogeneous/embedding.hpp"
#include "schrogeo/homogeneous/induced.hpp"
#include "schrogeo/homogeneous/symmetry.hpp"
#include "schrogeo/numkernel/linalg.hpp"
#include "schrogeo/numkernel/sampler.hpp"
#include "schrogeo/oracle/finite_difference.hpp"

namespace schrogeo::cli {
namespace {

using Config = std::vector<std::pair<std::string, double>>;
namespace hg = schrogeo::homogeneous;

// Flow-based transport integrates 1000 RK4 steps on jets per sample; the
// flow checks use at most this many points.
constexpr int kFlowSamples = 8;
constexpr int kGroupElements = 50;

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

bargmann::TransportOptions transport_options(int samples, std::uint64_t seed) {
  bargmann::TransportOptions o;
  o.samples = samples;
  o.seed = seed;
  o.tol = 1e-7;
  return o;
}

std::vector<Interval> unit_box(Eigen::Index n) {
  return std::vector<Interval>(static_cast<std::size_t>(n), Interval{-1.0, 1.0});
}

class Collector {
 public:
  Collector(const SuiteConfig& cfg, VerificationReport& out) : cfg_(cfg), out_(out) {}

  // Runs one block of checks; an exception becomes a single ERROR record
  // named after the block.
  template <typename Block>
  void run(const std::string& suite, const std::string& block, const Config& config, Block&& f) {
    VerificationReport part;
    try {
      part = f();
    } catch (const std::exception& e) {
      part = VerificationReport();
      part.add(error_record(block, e.what()));
    }
    part.stamp(cfg_.samples, cfg_.seed);
    part.stamp_config(config);
    part.stamp_suite(suite);
    out_.append(part);
  }

 private:
  const SuiteConfig& cfg_;
  VerificationReport& out_;
};

Config dim_config(int d) { return {{"d", d}}; }
Config bulk_config(int d, double lambda, double mu) { return {{"d", d}, {"lambda", lambda}, {"mu", mu}}; }
Config bulk_config(int d, double lambda) { return {{"d", d}, {"lambda", lambda}}; }

// ---------------------------------------------------------------- bargmann

VerificationReport bargmann_block(int d, const SuiteConfig& cfg) {
  const bargmann::BargmannStructure b = bargmann::flat_structure(d);
  VerificationReport r = bargmann::bargmann_axioms_check(b, cfg.samples, cfg.seed);

  const ScalarField omega_t = ScalarField::from([d](const auto& p) {
    using std::exp;
    return exp(0.5 * p[d]);
  });
  const ScalarField omega_x = ScalarField::from([](const auto& p) {
    using std::exp;
    return exp(0.5 * p[0]);
  });
  VerificationReport rescaled = bargmann::bargmann_axioms_check(
      bargmann::rescaled_structure(b, omega_t), cfg.samples, cfg.seed);
  rescaled.prefix("time_rescaled");
  r.append(rescaled);
  r.append(bargmann::conformal_equivalence_check(omega_t, b, cfg.samples, cfg.seed).report);
  const double spatial =
      bargmann::conformal_equivalence_check(omega_x, b, cfg.samples, cfg.seed).report.at("conformal_equivalence").residual;
  r.add(above("conformal_inequivalence_control", spatial, 1e-3, "d Omega ^ theta != 0 for Omega = exp(x1 / 2)"));
  return r;
}

// ---------------------------------------------------------- schrodinger-eq

ambient::SchParams zero_params(int d) {
  ambient::SchParams p;
  p.lambda_block = Eigen::MatrixXd::Zero(d + 2, d + 2);
  p.gamma = Eigen::VectorXd::Zero(d + 2);
  return p;
}

VerificationReport plane_wave_block(int d, const SuiteConfig& cfg) {
  const bargmann::BargmannStructure b = bargmann::flat_structure(d);
  const bargmann::SchrodingerParams sp;
  SeededSampler sampler(cfg.seed, unit_box(d + 2));
  double r1 = 0.0, r2 = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const bargmann::DensityFunction psi = bargmann::schrodinger_plane_wave(sampler.uniform_vector(d, -2.0, 2.0), sp);
    const bargmann::SchrodingerResidual res = bargmann::schrodinger_residual(b, psi, sp, sampler.sample());
    r1 = std::max(r1, std::abs(res.r1));
    r2 = std::max(r2, std::abs(res.r2));
  }
  VerificationReport r;
  r.add(below("plane_wave_yamabe", r1, 1e-10, "Yamabe(psi) = 0 for weight d/(2d+4)"));
  r.add(below("plane_wave_vertical", r2, 1e-10, "(hbar/i) L_xi psi = m psi"));
  bool rejected = false;
  try {
    bargmann::DensityFunction wrong = bargmann::schrodinger_plane_wave(Eigen::VectorXd::Ones(d), sp);
    wrong.weight = bargmann::dual_weight(d);
    bargmann::schrodinger_residual(b, wrong, sp, Eigen::VectorXd::Zero(d + 2));
  } catch (const ContractViolation&) {
    rejected = true;
  }
  r.add(equals("wrong_weight_rejected", 1.0, rejected ? 1.0 : 0.0, "weights other than d/(2d+4) are refused"));
  return r;
}

VerificationReport transport_block(int d, const SuiteConfig& cfg) {
  const bargmann::BargmannStructure b = bargmann::flat_structure(d);
  const bargmann::SchrodingerParams sp;
  const bargmann::DensityFunction psi =
      bargmann::schrodinger_plane_wave(Eigen::VectorXd::LinSpaced(d, 0.7, -0.4), sp);
  const int flow_samples = std::min(cfg.samples, kFlowSamples);

  ambient::SchParams boost = zero_params(d);
  for (int i = 0; i < d; ++i) {
    const double v = 0.5 - 0.3 * i;
    boost.lambda_block(d + 1, i) += v;
    boost.lambda_block(i, d) -= v;
  }
  ambient::SchParams expansion = zero_params(d);
  expansion.alpha = 0.2;
  const ambient::RealizedField boost_field = ambient::realize_field(boost);
  const ambient::RealizedField expansion_field = ambient::realize_field(expansion);
  const bargmann::InverseMap expansion_inv =
      bargmann::flow_inverse(expansion_field.field, expansion_field.divergence, 1.0);

  struct Case {
    std::string name;
    bargmann::InverseMap inverse;
    int samples;
  };
  const std::vector<Case> cases{
      {"transport_translation", bargmann::translation_inverse(Eigen::VectorXd::LinSpaced(d + 2, 0.3, -0.8)),
       cfg.samples},
      {"transport_dilation", bargmann::dilation_inverse(d, 0.3), cfg.samples},
      {"transport_boost", bargmann::flow_inverse(boost_field.field, boost_field.divergence, 1.0), flow_samples},
      {"transport_expansion", expansion_inv, flow_samples},
  };
  VerificationReport r;
  for (const Case& c : cases) {
    VerificationReport part = bargmann::symmetry_transport_check(b, c.inverse, psi, sp, transport_options(c.samples, cfg.seed));
    part.prefix(c.name);
    part.stamp(c.samples, cfg.seed);
    r.append(part);
  }
  bargmann::TransportOptions wrong = transport_options(flow_samples, cfg.seed);
  wrong.exponent = bargmann::dual_weight(d);
  const double broken =
      bargmann::symmetry_transport_check(b, expansion_inv, psi, sp, wrong).at("transported_yamabe").residual;
  CheckRecord& control = r.add(above("wrong_weight_control", broken, 1e-3,
                                     "expansion-transported density with weight (d+4)/(2d+4) is not a solution"));
  control.samples = flow_samples;
  return r;
}

// ------------------------------------------------------------- lie-algebra

VerificationReport lie_block(int d, const SuiteConfig& cfg) {
  const int expected = (d * d + 3 * d + 8) / 2;
  const std::vector<Eigen::MatrixXd> basis = ambient::commutant_basis(d);
  VerificationReport r;
  r.add(equals("commutant_dim", expected, static_cast<double>(basis.size()), "dim sch = (d^2 + 3d + 8)/2"));
  double drift = 0.0;
  for (double scale : {10.0, 0.1}) {
    const double n = static_cast<double>(ambient::commutant_basis(d, scale * kDefaultRankTol).size());
    drift = std::max(drift, std::abs(n - expected));
  }
  r.add(equals("commutant_dim_tol_stability", 0.0, drift, "dimension unchanged for rank tolerance x10 and /10"));

  const Eigen::MatrixXd z0 = ambient::build_Z0(d).z;
  double skew = 0.0, commute = 0.0, closure = 0.0;
  for (const Eigen::MatrixXd& a : basis) {
    skew = std::max(skew, ambient::skew_defect(a, d));
    commute = std::max(commute, max_abs(commutator(a, z0)));
    for (const Eigen::MatrixXd& b : basis) {
      const Eigen::MatrixXd c = commutator(a, b);
      Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(c.rows(), c.cols());
      for (const Eigen::MatrixXd& e : basis) proj += (c.array() * e.array()).sum() * e;
      closure = std::max(closure, max_abs(c - proj));
    }
  }
  r.add(below("commutant_skew", skew, 1e-12, "G Z + Z^T G = 0"));
  r.add(below("commutant_commutes", commute, 1e-12, "[Z, Z0] = 0"));
  r.add(below("commutant_closure", closure, 1e-10, "[sch, sch] in sch"));

  const MetricField g = bargmann::flat_metric(d);
  const VectorField xi = bargmann::fundamental_field(d);
  SeededSampler sampler(cfg.seed, unit_box(d + 2));
  double ck = 0.0, factor = 0.0, lie_xi = 0.0, div = 0.0;
  std::vector<ambient::RealizedField> fields;
  for (const Eigen::MatrixXd& z : basis) fields.push_back(ambient::realize_field(ambient::decompose_sch(z)));
  for (int k = 0; k < cfg.samples; ++k) {
    const Eigen::VectorXd p = sampler.sample();
    for (const ambient::RealizedField& f : fields) {
      const ConformalDeviation cd = conformal_deviation(g, f.field, p);
      ck = std::max(ck, cd.residual);
      factor = std::max(factor, std::abs(cd.phi - 2.0 * f.radial_rate(p)));
      lie_xi = std::max(lie_xi, lie_bracket(f.field, xi, p).cwiseAbs().maxCoeff());
      div = std::max(div, std::abs(divergence(g, f.field, p) - f.divergence(p)));
    }
  }
  r.add(below("conformal_killing", ck, 1e-9, "L_Z g = phi_Z g"));
  r.add(below("conformal_factor", factor, 1e-12, "phi_Z = 2 (alpha t + chi)"));
  r.add(below("preserves_xi", lie_xi, 1e-12, "L_Z xi = 0"));
  r.add(below("divergence", div, 1e-12, "Div Z = (d + 2)(alpha t + chi)"));

  double bracket = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      bracket = std::max(bracket, ambient::bracket_residual(basis[i], basis[j], ambient::kBracketSign, 2,
                                                            cfg.seed + i * basis.size() + j));
    }
  CheckRecord& br = r.add(below("bracket_compatibility", bracket, 1e-9, "[V(Z1), V(Z2)] = -V([Z1, Z2])"));
  br.samples = 2;
  return r;
}

// ------------------------------------------------------------------- group

VerificationReport group_block(int d, const SuiteConfig& cfg) {
  SeededSampler sampler(cfg.seed, {});
  const Eigen::MatrixXd gram = ambient::ambient_gram(d);
  const Eigen::MatrixXd z0 = ambient::build_Z0(d).z;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d + 4, d + 4);
  double constraints = 0.0, iso = 0.0, comm = 0.0, proj = 0.0;
  int rejected = 0;
  for (int k = 0; k < kGroupElements; ++k) {
    const Eigen::MatrixXd a = expm(ambient::random_sch_element(d, sampler, 0.5));
    try {
      const ambient::GroupElement g = ambient::group_element(a);
      for (double c : ambient::constraint_residuals(g.blocks)) constraints = std::max(constraints, c);
    } catch (const ConstraintViolation&) {
      ++rejected;
    }
    iso = std::max(iso, max_abs(ambient::g_adjoint(a, d) * a - id));
    comm = std::max(comm, max_abs(a * z0 - z0 * a));
    const Eigen::VectorXd x = sampler.uniform_vector(d + 2, -1.0, 1.0);
    const double rad = sampler.uniform(0.5, 2.0);
    try {
      const ambient::ProjectiveImage img = ambient::projective_action(a, x, rad);
      proj = std::max(proj, max_abs(a * ambient::bargmann_lift(x, rad) - ambient::bargmann_lift(img.x, img.r)));
    } catch (const ChartEscape&) {
      // e - a t vanished at this point; the ambient action has no chart image there.
    }
  }
  VerificationReport r;
  CheckRecord& c1 = r.add(below("block_constraints", constraints, ambient::kGroupTol, "block constraints 1..7"));
  CheckRecord& c2 = r.add(equals("elements_accepted", kGroupElements, kGroupElements - rejected,
                                 "exp(sch) elements pass the stabilizer assembly"));
  CheckRecord& c3 = r.add(below("isometry", iso, 1e-10, "Abar A = 1"));
  CheckRecord& c4 = r.add(below("commutes_with_Z0", comm, 1e-10, "A Z0 = Z0 A"));
  CheckRecord& c5 = r.add(below("projective_vs_ambient", proj, 1e-10, "A X(x, r) = X(x', r')"));
  for (CheckRecord* c : {&c1, &c2, &c3, &c4, &c5}) c->samples = kGroupElements;

  const std::vector<Eigen::MatrixXd> basis = ambient::commutant_basis(d);
  double inf = 0.0;
  const double h = 1e-5, rad = 1.7;
  for (const Eigen::MatrixXd& z : basis) {
    const Eigen::VectorXd x = sampler.uniform_vector(d + 2, -1.0, 1.0);
    const ambient::ProjectiveImage plus = ambient::projective_action(expm(h * z), x, rad);
    const ambient::ProjectiveImage minus = ambient::projective_action(expm(-h * z), x, rad);
    const ambient::RealizedField f = ambient::realize_field(ambient::decompose_sch(z));
    inf = std::max(inf, max_abs((plus.x - minus.x) / (2 * h) - f.field(x)));
    inf = std::max(inf, std::abs((plus.r - minus.r) / (2 * h) - f.radial_rate(x) * rad));
  }
  r.add(below("infinitesimal_action", inf, 1e-8, "d/dh A(h Z) . (x, r) = (V_Z(x), (alpha t + chi) r)"))
      .samples = static_cast<int>(basis.size());

  bool member = true;
  try {
    ambient::group_element(ambient::random_isometry(d, sampler, 0.4));
  } catch (const ConstraintViolation&) {
    member = false;
  }
  r.add(equals("non_member_rejected", 0.0, member ? 1.0 : 0.0, "generic G-isometries violate the constraints"));

  r.append(ambient::component_witnesses(d));

  double invariance = 0.0, sign = 0.0, exterior = 0.0;
  constexpr int kCoadjoint = 10;
  for (int k = 0; k < kCoadjoint; ++k) {
    const Eigen::MatrixXd a = ambient::random_isometry(d, sampler, 0.5);
    const Eigen::MatrixXd b = ambient::random_isometry(d, sampler, 0.5);
    const Eigen::MatrixXd zeta = ambient::random_skew(d, sampler, 1.0);
    const Eigen::MatrixXd zeta2 = ambient::random_skew(d, sampler, 1.0);
    const ambient::CoadjointValue here = ambient::coadjoint_oneform(a, a * zeta, a * zeta2, d);
    const ambient::CoadjointValue moved = ambient::coadjoint_oneform(b * a, b * a * zeta, b * a * zeta2, d);
    invariance = std::max({invariance, std::abs(here.varpi - moved.varpi), std::abs(here.d_varpi - moved.d_varpi)});
    sign = std::max(sign, std::abs(here.sign - 1.0));
    exterior = std::max(exterior, std::abs(here.d_varpi - 0.5 * (z0 * commutator(zeta, zeta2)).trace()));
  }
  CheckRecord& inv = r.add(below("coadjoint_invariance", invariance, 1e-10, "varpi and d varpi are left-invariant"));
  CheckRecord& sg = r.add(below("coadjoint_sign", sign, 1e-8, "varpi = sign * Pbar dQ, observed sign +1"));
  sg.got = 1.0;
  CheckRecord& ex = r.add(below("coadjoint_exterior", exterior, 1e-10, "d varpi(zeta, zeta') = Tr(Z0 [zeta, zeta'])/2"));
  for (CheckRecord* c : {&inv, &sg, &ex}) c->samples = kCoadjoint;
  return r;
}

// ------------------------------------------------------------- homogeneous

VerificationReport homogeneous_block(int d, double lambda, double mu, const SuiteConfig& cfg) {
  const hg::SchrodingerManifoldConfig sc{d, lambda, mu};
  VerificationReport r = hg::induced_tensor_check(sc, cfg.samples, cfg.seed, 1e-10);

  SeededSampler sampler(cfg.seed, hg::bulk_box(d));
  double push = 0.0, killing = 0.0, null = 0.0, nonzero = std::numeric_limits<double>::infinity();
  double fluid = 0.0, lambda_cos = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const hg::EmbeddedPoint p = hg::embed(sc, sampler.sample());
    const VerificationReport xr = hg::xi_hat_consistency(sc, p);
    push = std::max(push, xr.at("xi_hat_pushforward").residual);
    killing = std::max(killing, xr.at("xi_hat_killing").residual);
    null = std::max(null, xr.at("xi_hat_null").residual);
    nonzero = std::min(nonzero, xr.at("xi_hat_nonzero").residual);
    const hg::NullFluidResidual nf = hg::nullfluid_residual(sc, p);
    fluid = std::max(fluid, nf.norm());
    lambda_cos = nf.cosmological_constant;
  }
  r.add(below("xi_hat_pushforward", push, 1e-10, "Q_* (d/ds) = Z0 Q"));
  r.add(below("xi_hat_killing", killing, 1e-10, "L_xi_hat g = 0"));
  r.add(below("xi_hat_null", null, 1e-10, "g(xi_hat, xi_hat) = 0"));
  r.add(above("xi_hat_nonzero", nonzero, 1e-6, "Z0 Q != 0"));
  r.add(below("nullfluid", fluid, cfg.tol, "Ric(g) - ((d+2)/(2 lambda)) g = -mu (d+4)/(2 lambda) theta theta"));
  r.add(equals("cosmological_constant", (d + 1.0) * (d + 2.0) / (4.0 * lambda), lambda_cos,
               "Lambda = (d+1)(d+2)/(4 lambda)"));

  // Curvature against the finite-difference oracle at one point.
  const Eigen::VectorXd p0 = SeededSampler(cfg.seed + 7, hg::bulk_box(d)).sample();
  const MetricField m = hg::schrodinger_metric(sc);
  const Eigen::MatrixXd exact = ricci_scalar(m, p0).ricci;
  const Eigen::MatrixXd approx = oracle::fd_ricci(m, p0);
  r.add(below("ricci_fd_crosscheck", max_abs(exact - approx) / std::max(1.0, max_abs(exact)), cfg.fd_tol,
              "autodiff Ricci = finite-difference Ricci"))
      .samples = 1;

  // Isometries: random exponentials, their products, a boost, and a
  // G-isometry outside the stabilizer.
  SeededSampler group_sampler(cfg.seed, {});
  double random_iso = 0.0;
  Eigen::MatrixXd product = Eigen::MatrixXd::Identity(d + 4, d + 4);
  for (int k = 0; k < cfg.samples; ++k) {
    const Eigen::MatrixXd a = expm(ambient::random_sch_element(d, group_sampler, 0.3));
    random_iso = std::max(random_iso, hg::pullback_residual(sc, a, 3, cfg.seed + k));
    if (k < 3) product = product * a;
  }
  r.add(below("isometry_random_exponentials", random_iso, cfg.tol, "phi_A^* g_{lambda,mu} = g_{lambda,mu}"));
  r.add(below("isometry_closure", hg::pullback_residual(sc, product, cfg.samples, cfg.seed), 1e-7,
              "products of isometries are isometries"));
  VerificationReport boost = hg::isometry_check(sc, expm(0.4 * hg::boost_generator(d)), cfg.samples, cfg.seed, cfg.tol);
  boost.prefix("boost");
  r.append(boost);
  VerificationReport control = hg::isometry_check(sc, hg::uv_rotation(d, 0.5), cfg.samples, cfg.seed, cfg.tol);
  control.prefix("uv_rotation");
  r.append(control);
  return r;
}

VerificationReport einstein_block(int d, double lambda, const SuiteConfig& cfg) {
  const hg::SchrodingerManifoldConfig sc{d, lambda, 0.0};
  SeededSampler sampler(cfg.seed, hg::bulk_box(d));
  double norm = 0.0, mismatch = 0.0, factor = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    const hg::EinsteinResidual e = hg::einstein_residual(sc, hg::embed(sc, sampler.sample()));
    norm = std::max(norm, e.norm());
    mismatch = std::max(mismatch, e.mismatch());
    factor = e.factor;
  }
  VerificationReport r;
  CheckRecord& pred = r.add(below("einstein_prediction", mismatch, cfg.tol,
                                  "Ric(g+) + (d+2) g+ = ((d+2)(1+2 lambda)/(2 lambda)) g+"));
  pred.expected = factor;
  if (lambda == -0.5) {
    r.add(below("einstein_vanishing", norm, cfg.tol, "Ric(g+) + (d+2) g+ = 0 at lambda = -1/2"));
  } else {
    r.add(above("einstein_vanishing", norm, 1e-3, "Ric(g+) + (d+2) g+ != 0 away from lambda = -1/2"));
  }
  r.append(hg::isotropy_check(sc, cfg.seed));
  return r;
}

VerificationReport recovery_block(int d, const SuiteConfig& cfg) {
  SeededSampler sampler(cfg.seed, hg::bulk_box(d));
  double worst = 0.0;
  constexpr int kPoints = 10;
  for (int k = 0; k < kPoints; ++k) {
    const Eigen::VectorXd p = sampler.sample();
    const double rad = p[d + 2];
    Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(d + 3, d + 3);
    expected.topLeftCorner(d + 2, d + 2) = bargmann::flat_gram(d) / (rad * rad);
    expected(d + 2, d + 2) = 1.0 / (rad * rad);
    expected(d, d) -= 1.0 / (rad * rad * rad * rad);
    worst = std::max(worst, max_abs(hg::schrodinger_gram<double>(p, d, -0.5, 1.0) - expected));
  }
  VerificationReport r;
  r.add(below("local_form_recovery", worst, 1e-12, "g_{-1/2,1} = (g_flat + dr^2)/r^2 - dt^2/r^4")).samples = kPoints;
  return r;
}

// ------------------------------------------------------------------ axioms

VerificationReport audit(int d, double lambda, double mu, const SuiteConfig& cfg) {
  return hg::schrodinger_axiom_audit({d, lambda, mu}, {cfg.tol, cfg.samples, cfg.seed});
}

// Wraps an audit as a comparison with theory: every item passes except the
// Einstein condition away from lambda = -1/2 and the normalization away from
// mu = 1.
VerificationReport audit_expectation(int d, double lambda, double mu, const SuiteConfig& cfg) {
  const VerificationReport a = audit(d, lambda, mu, cfg);
  int mismatches = 0;
  std::string which;
  for (const CheckRecord& c : a.checks()) {
    bool expect_pass = true;
    if (c.name == "axiom3.einstein") expect_pass = lambda == -0.5;
    if (c.name == "axiom2.normalization") expect_pass = mu == 1.0;
    if ((c.status == CheckStatus::Pass) != expect_pass) {
      ++mismatches;
      which += (which.empty() ? "" : ",") + c.name;
    }
  }
  const bool canonical = lambda == -0.5 && mu == 1.0;
  VerificationReport r;
  CheckRecord& m = r.add(equals("axiom_audit_matches_theory", 0.0, mismatches,
                                "audit outcome per item agrees with the Einstein factor and mu = 1"));
  m.detail = which;
  r.add(equals("axiom_audit_outcome", canonical ? 1.0 : 0.0, a.passed() ? 1.0 : 0.0,
               "all axioms hold iff (lambda, mu) = (-1/2, 1)"));
  return r;
}

void run_named(const std::string& suite, const SuiteConfig& cfg, Collector& c, bool wrap_audits) {
  const bool all = suite == "all";
  for (int d : cfg.dims) {
    if (all || suite == "bargmann") {
      c.run("bargmann", "bargmann", dim_config(d), [&] { return bargmann_block(d, cfg); });
    }
    if (all || suite == "schrodinger-eq") {
      c.run("schrodinger-eq", "plane_wave", dim_config(d), [&] { return plane_wave_block(d, cfg); });
      c.run("schrodinger-eq", "transport", dim_config(d), [&] { return transport_block(d, cfg); });
    }
    if (all || suite == "lie-algebra") {
      c.run("lie-algebra", "lie_algebra", dim_config(d), [&] { return lie_block(d, cfg); });
    }
    if (all || suite == "group") {
      c.run("group", "group", dim_config(d), [&] { return group_block(d, cfg); });
    }
    if (all || suite == "boundary") {
      c.run("boundary", "boundary", dim_config(d),
            [&] { return hg::boundary_structure(d, cfg.samples, cfg.seed, cfg.tol); });
    }
    if (all || suite == "homogeneous") {
      c.run("homogeneous", "local_form_recovery", bulk_config(d, -0.5, 1.0), [&] { return recovery_block(d, cfg); });
      for (double lambda : cfg.lambdas) {
        c.run("homogeneous", "einstein", bulk_config(d, lambda), [&] { return einstein_block(d, lambda, cfg); });
        for (double mu : cfg.mus) {
          c.run("homogeneous", "homogeneous", bulk_config(d, lambda, mu),
                [&] { return homogeneous_block(d, lambda, mu, cfg); });
        }
      }
    }
    if (all || suite == "axioms") {
      for (double lambda : cfg.lambdas)
        for (double mu : cfg.mus) {
          c.run("axioms", "axiom_audit", bulk_config(d, lambda, mu), [&] {
            return wrap_audits ? audit_expectation(d, lambda, mu, cfg) : audit(d, lambda, mu, cfg);
          });
        }
    }
  }
}

}  // namespace

RunReport run_suite(const SuiteConfig& cfg) {
  RunReport out;
  out.config = cfg;
  Collector collector(cfg, out.report);
  run_named(cfg.suite, cfg, collector, cfg.suite == "all");
  std::stable_sort(out.report.checks().begin(), out.report.checks().end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     return std::tie(a.name, a.suite) < std::tie(b.name, b.suite);
                   });
  return out;
}

}  // namespace schrogeo::cli
