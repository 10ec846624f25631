// Acceptance harness: prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "schrogeo/ambient/ambient.hpp"
#include "schrogeo/cli/runner.hpp"
#include "schrogeo/geometry/tensor_calculus.hpp"
#include "schrogeo/homogeneous/axioms.hpp"
#include "schrogeo/homogeneous/boundary.hpp"
#include "schrogeo/homogeneous/embedding.hpp"
#include "schrogeo/homogeneous/induced.hpp"
#include "schrogeo/homogeneous/metrics.hpp"
#include "schrogeo/homogeneous/symmetry.hpp"
#include "schrogeo/numkernel/sampler.hpp"

namespace {

using namespace schrogeo;
namespace hg = schrogeo::homogeneous;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (note.empty()) note = what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

cli::RunReport run(const std::string& suite, std::vector<int> dims, int samples = 20) {
  cli::SuiteConfig cfg;
  cfg.suite = suite;
  cfg.dims = std::move(dims);
  cfg.samples = samples;
  cli::validate(cfg);
  return cli::run_suite(cfg);
}

std::vector<CheckRecord> named(const cli::RunReport& r, const std::string& name) {
  std::vector<CheckRecord> out;
  for (const CheckRecord& c : r.report.checks())
    if (c.name == name) out.push_back(c);
  return out;
}

double config_value(const CheckRecord& c, const std::string& key) {
  for (const auto& [k, v] : c.config)
    if (k == key) return v;
  return std::numeric_limits<double>::quiet_NaN();
}

// Every record named `name` passes; fails when none exists.
void all_pass(Outcome& o, const cli::RunReport& r, const std::string& name) {
  const auto recs = named(r, name);
  o.require(!recs.empty(), name + " missing");
  for (const CheckRecord& c : recs) {
    std::ostringstream msg;
    msg << name << " residual " << c.residual;
    o.require(c.status == CheckStatus::Pass, msg.str());
  }
}

Outcome dimension_formula() {
  Outcome o;
  const auto start = Clock::now();
  const cli::RunReport r = run("lie-algebra", {1, 2, 3, 4});
  const double elapsed = seconds_since(start);
  const int expected[] = {6, 9, 13, 18};
  for (const CheckRecord& c : named(r, "commutant_dim")) {
    const int d = static_cast<int>(config_value(c, "d"));
    o.require(c.got && *c.got == expected[d - 1], "commutant_dim at d=" + std::to_string(d));
  }
  o.require(named(r, "commutant_dim").size() == 4, "expected four dimensions");
  all_pass(o, r, "commutant_dim_tol_stability");
  o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  if (o.pass) o.note = "6, 9, 13, 18; " + std::to_string(elapsed) + " s";
  return o;
}

Outcome conformal_killing() {
  Outcome o;
  const cli::RunReport r = run("lie-algebra", {1, 2, 3});
  all_pass(o, r, "conformal_killing");
  all_pass(o, r, "preserves_xi");
  for (const CheckRecord& c : named(r, "conformal_killing")) o.require(c.tolerance <= 1e-9, "tolerance");
  for (const CheckRecord& c : named(r, "preserves_xi")) o.require(c.tolerance <= 1e-12, "tolerance");
  return o;
}

Outcome einstein_normalization() {
  Outcome o;
  for (int d = 1; d <= 3; ++d) {
    for (double lambda : {-0.5, -1.0, -0.3}) {
      const hg::SchrodingerManifoldConfig cfg{d, lambda, 0.0};
      SeededSampler sampler(42, hg::bulk_box(d));
      double norm = 0.0, mismatch = 0.0;
      for (int k = 0; k < 25; ++k) {
        const hg::EinsteinResidual e = hg::einstein_residual(cfg, hg::embed(cfg, sampler.sample()));
        norm = std::max(norm, e.norm());
        mismatch = std::max(mismatch, e.mismatch());
      }
      const std::string at = " at d=" + std::to_string(d) + " lambda=" + std::to_string(lambda);
      o.require((norm < 1e-8) == (lambda == -0.5), "Einstein residual" + at);
      o.require(mismatch < 1e-8, "predicted factor mismatch" + at);
    }
  }
  return o;
}

Outcome null_fluid() {
  Outcome o;
  const cli::RunReport r = run("homogeneous", {1, 2, 3});
  all_pass(o, r, "nullfluid");
  all_pass(o, r, "cosmological_constant");
  o.require(named(r, "nullfluid").size() == 48, "grid incomplete");

  const hg::SchrodingerManifoldConfig cfg{3, -0.5, 1.0};
  const MetricField g = hg::schrodinger_metric(cfg);
  SeededSampler sampler(42, hg::bulk_box(3));
  double worst = 0.0, lambda_cos = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Eigen::VectorXd p = sampler.sample();
    const Eigen::VectorXd th = hg::theta_hat_components<double>(p, 3, cfg.lambda);
    const Eigen::MatrixXd lhs = ricci_scalar(g, p).ricci + 5.0 * g.gram(p);
    worst = std::max(worst, (lhs - 7.0 * th * th.transpose()).cwiseAbs().maxCoeff());
    lambda_cos = hg::nullfluid_residual(cfg, hg::embed(cfg, p)).cosmological_constant;
  }
  o.require(worst < 1e-8, "Ric + 5 g != 7 theta theta");
  o.require(lambda_cos == -10.0, "cosmological constant " + std::to_string(lambda_cos));
  return o;
}

Outcome local_form() {
  Outcome o;
  const cli::RunReport r = run("homogeneous", {1, 2, 3}, 1);
  all_pass(o, r, "local_form_recovery");
  for (const CheckRecord& c : named(r, "local_form_recovery")) o.require(c.samples == 10, "point count");
  return o;
}

Outcome isometry_action() {
  Outcome o;
  const cli::RunReport r = run("homogeneous", {1, 2, 3});
  all_pass(o, r, "isometry_random_exponentials");
  bool saw_mu_one = false;
  for (const CheckRecord& c : named(r, "uv_rotation.metric_not_preserved")) {
    if (config_value(c, "mu") != 1.0) continue;
    saw_mu_one = true;
    o.require(c.status == CheckStatus::Pass && c.residual > 1e-3, "non-stabilizer isometry preserved the metric");
  }
  o.require(saw_mu_one, "no mu = 1 control");
  return o;
}

Outcome schrodinger_equation() {
  Outcome o;
  const cli::RunReport r = run("schrodinger-eq", {1, 2, 3});
  for (const char* name :
       {"plane_wave_yamabe", "plane_wave_vertical", "transport_translation.transported_yamabe",
        "transport_dilation.transported_yamabe", "transport_boost.transported_yamabe",
        "transport_expansion.transported_yamabe", "transport_translation.transported_vertical",
        "transport_dilation.transported_vertical", "transport_boost.transported_vertical",
        "transport_expansion.transported_vertical", "wrong_weight_control"}) {
    all_pass(o, r, name);
  }
  return o;
}

Outcome stabilizer_constraints() {
  Outcome o;
  const cli::RunReport r = run("group", {1, 2, 3});
  for (const char* name : {"block_constraints", "elements_accepted", "isometry", "commutes_with_Z0",
                           "projective_vs_ambient", "infinitesimal_action"}) {
    all_pass(o, r, name);
  }
  for (const CheckRecord& c : named(r, "elements_accepted")) o.require(c.got && *c.got == 50.0, "element count");
  return o;
}

Outcome component_witnesses() {
  Outcome o;
  for (int d = 1; d <= 3; ++d) {
    const ambient::WitnessMatrices w = ambient::witness_matrices(d);
    const Eigen::MatrixXd& z = w.Z0prime;
    auto comm = [&z](const Eigen::MatrixXd& a) { return (a * z - z * a).norm(); };
    o.require(comm(w.I) == 0.0 && comm(w.P) == 0.0, "I or P fails to commute exactly");
    o.require(comm(w.T) > 0.1 && comm(w.PT) > 0.1, "T or PT commutes");
  }
  return o;
}

Outcome boundary_structure() {
  Outcome o;
  for (int d = 1; d <= 3; ++d) {
    const VerificationReport r = hg::boundary_structure(d, 50, 42, 1e-8);
    for (const CheckRecord& c : r.checks()) {
      o.require(c.status == CheckStatus::Pass, c.name + " at d=" + std::to_string(d));
    }
    o.require(r.at("cone_kernel_dim").got == 1.0, "cone kernel dimension");
  }
  return o;
}

Outcome axiom_audit() {
  Outcome o;
  double ratio_low = std::numeric_limits<double>::infinity(), ratio_high = 0.0;
  for (int d = 1; d <= 3; ++d)
    for (double lambda : {-2.0, -1.0, -0.5, -0.3})
      for (double mu : {-1.0, 0.0, 1.0, 2.0}) {
        const VerificationReport a = hg::schrodinger_axiom_audit({d, lambda, mu}, {});
        const std::string at = " at d=" + std::to_string(d) + " lambda=" + std::to_string(lambda) +
                               " mu=" + std::to_string(mu);
        o.require(a.passed() == (lambda == -0.5 && mu == 1.0), "audit outcome" + at);
        const CheckRecord& ein = a.at("axiom3.einstein");
        const double factor = (d + 2.0) * (1.0 + 2.0 * lambda) / (2.0 * lambda);
        if (lambda != -0.5) {
          o.require(ein.status == CheckStatus::Fail, "axiom 3 passed" + at);
          o.require(ein.got && std::abs(*ein.got - factor) < 1e-8, "fitted factor" + at);
        }
        o.require(a.at("axiom3.predicted_factor").status == CheckStatus::Pass, "predicted factor" + at);
        const CheckRecord& decay = a.at("axiom2.inverse_decay");
        o.require(decay.status == CheckStatus::Pass, "decay ratio" + at);
        if (decay.got) {
          ratio_low = std::min(ratio_low, *decay.got);
          ratio_high = std::max(ratio_high, *decay.got);
        }
      }
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "lowest decay ratio %.4f", ratio_low);
    o.note = buf;
  }
  return o;
}

Outcome isotropy_dimensions() {
  Outcome o;
  for (int d = 1; d <= 4; ++d) {
    const hg::IsotropyDims dims = hg::isotropy_dims(d, -0.5);
    const std::string at = " at d=" + std::to_string(d);
    o.require(dims.bulk == d * (d + 1) / 2 + 1, "bulk isotropy" + at);
    o.require(dims.boundary == (d * d + d + 4) / 2, "boundary isotropy" + at);
    o.require(dims.bulk_space() == d + 3, "bulk space" + at);
    o.require(dims.boundary_space() == d + 2, "boundary space" + at);
  }
  return o;
}

Outcome full_suite() {
  Outcome o;
  std::string reports[2];
  double slowest = 0.0;
  for (std::string& report : reports) {
    const char* argv[] = {"schrogeo", "all", "--seed", "42"};
    std::ostringstream out, err;
    const auto start = Clock::now();
    const int code = cli::run_cli(4, argv, out, err);
    slowest = std::max(slowest, seconds_since(start));
    o.require(code == cli::kExitOk, "exit code " + std::to_string(code));
    report = out.str();
  }
  o.require(!reports[0].empty() && reports[0] == reports[1], "reports differ between runs");
  o.require(slowest < 60.0, "runtime " + std::to_string(slowest) + " s");
  if (o.pass) o.note = std::to_string(slowest) + " s, byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"commutant dimension formula", dimension_formula},
      {"conformal Killing pair", conformal_killing},
      {"Einstein normalization", einstein_normalization},
      {"null-fluid identity", null_fluid},
      {"local form recovery", local_form},
      {"isometry group action", isometry_action},
      {"Schrodinger equation and transport", schrodinger_equation},
      {"stabilizer constraints", stabilizer_constraints},
      {"component witnesses", component_witnesses},
      {"boundary structure", boundary_structure},
      {"axiom audit", axiom_audit},
      {"isotropy dimensions", isotropy_dimensions},
      {"full default suite", full_suite},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %s%s%s\n", o.pass ? "PASS" : "FAIL", index++, name.c_str(), o.note.empty() ? "" : ": ",
                o.note.c_str());
  }
  return failures == 0 ? 0 : 1;
}
