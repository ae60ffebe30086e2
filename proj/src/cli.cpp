// cli.cpp

#include "qosc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qosc/analytic.hpp"
#include "qosc/intelligent.hpp"
#include "qosc/measure.hpp"
#include "qosc/spectrum.hpp"
#include "qosc/states.hpp"

namespace qosc {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Complex parse_complex(const std::string& s, const std::string& flag) {
  std::istringstream in(s);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re))
    throw CLI::ValidationError(flag, "expected \"re,im\" or \"re\"");
  if (in >> comma) {
    if (comma != ',' || !(in >> im))
      throw CLI::ValidationError(flag, "expected \"re,im\"");
  }
  std::string rest;
  if (in >> rest) throw CLI::ValidationError(flag, "trailing junk");
  return {re, im};
}

struct RunConfig {
  double epsilon = 0.1;
  double alpha = 0.0;
  std::string z_str = "1,0";
  std::string lambda_str = "1,0";
  int dim = 0;  // 0: pick from |z|
  double tol = 0.0;  // 0: suite default
  std::string output_format = "csv";
  unsigned seed = 0;

  Complex z() const { return parse_complex(z_str, "--z"); }
  Complex lambda() const { return parse_complex(lambda_str, "--lambda"); }
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool require_eps) {
  auto* eps = cmd->add_option("--epsilon", cfg.epsilon, "oscillator parameter (> 0)");
  if (require_eps) eps->required();
  cmd->add_option("--alpha", cfg.alpha, "phase convention parameter");
  cmd->add_option("--dim", cfg.dim, "truncation dimension");
  cmd->add_option("--tol", cfg.tol, "tolerance override");
  cmd->add_option("--output-format", cfg.output_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

void warn_regime(const RunConfig& cfg, std::ostream& err) {
  if (cfg.epsilon > 0.5)
    err << "warning: epsilon > 0.5 is outside the perturbative regime; "
           "results describe the model spectrum, not the quartic oscillator\n";
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  warn_regime(cfg, err);
  ModelParams params(cfg.epsilon, cfg.alpha);
  int dim = cfg.dim > 0 ? cfg.dim : 10;
  std::vector<double> growth = radius_growth(dim - 1 > 0 ? dim - 1 : 1, params);
  if (cfg.output_format == "json") {
    json rows = json::array();
    for (int n = 0; n < dim; ++n)
      rows.push_back({{"n", n},
                      {"energy", energy(n, params)},
                      {"big_f", big_f(n, params)},
                      {"radius_growth", n == 0 ? 1.0 : growth[n - 1]}});
    json doc = {{"schema_version", 1},
                {"command", "spectrum"},
                {"epsilon", cfg.epsilon},
                {"alpha", cfg.alpha},
                {"rows", rows}};
    out << doc.dump(2) << "\n";
  } else {
    out << "n,energy,big_f,radius_growth\n";
    for (int n = 0; n < dim; ++n)
      out << n << "," << fmt(energy(n, params)) << "," << fmt(big_f(n, params))
          << "," << fmt(n == 0 ? 1.0 : growth[n - 1]) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// state
// ---------------------------------------------------------------------------

FockVector build_state(const std::string& kind, const RunConfig& cfg,
                       const ModelParams& params, int dim) {
  Complex z = cfg.z();
  if (kind == "coherent") return coherent({z, cfg.alpha}, params, dim);
  if (kind == "even-cat") return even_cat({z, cfg.alpha}, params, dim);
  if (kind == "odd-cat") return odd_cat({z, cfg.alpha}, params, dim);
  if (kind == "real-cat") return real_cat({z, cfg.alpha}, params, dim);
  if (kind == "imag-cat") return imaginary_cat({z, cfg.alpha}, params, dim);
  if (kind == "gis") return gis_recurrence({cfg.lambda(), z}, params, dim);
  if (kind == "squeezed-vacuum") return squeezed_vacuum(cfg.lambda(), params, dim);
  throw DomainError("unknown state kind: " + kind);
}

int cmd_state(const std::string& kind, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
  warn_regime(cfg, err);
  ModelParams params(cfg.epsilon, cfg.alpha);
  int dim = cfg.dim > 0 ? cfg.dim : default_dim(cfg.z());
  FockVector state = build_state(kind, cfg, params, dim);

  double mean_h = 0.0;
  double n2 = state.amps.squaredNorm();
  for (int n = 0; n < dim; ++n)
    mean_h += std::norm(state.amps(n)) / n2 * energy(n, params);
  UncertaintyReport rep = uncertainty_report(state, params);

  if (cfg.output_format == "json") {
    json rows = json::array();
    for (int n = 0; n < dim; ++n)
      rows.push_back({{"n", n},
                      {"re", state.amps(n).real()},
                      {"im", state.amps(n).imag()},
                      {"p", std::norm(state.amps(n)) / n2}});
    json doc = {{"schema_version", 1},
                {"command", "state"},
                {"kind", kind},
                {"epsilon", cfg.epsilon},
                {"alpha", cfg.alpha},
                {"dim", dim},
                {"rows", rows},
                {"summary",
                 {{"norm", state.norm()},
                  {"mean_h", mean_h},
                  {"mean_x", rep.mean_x},
                  {"mean_p", rep.mean_p},
                  {"var_x", rep.var_x},
                  {"var_p", rep.var_p},
                  {"mean_g", rep.mean_g},
                  {"mean_c", rep.mean_c},
                  {"rs_left", rep.rs_left},
                  {"rs_right", rep.rs_right},
                  {"rs_residual", rep.residual}}}};
    out << doc.dump(2) << "\n";
  } else {
    out << "n,re,im,p\n";
    for (int n = 0; n < dim; ++n)
      out << n << "," << fmt(state.amps(n).real()) << ","
          << fmt(state.amps(n).imag()) << ","
          << fmt(std::norm(state.amps(n)) / n2) << "\n";
    out << "\nkey,value\n";
    out << "norm," << fmt(state.norm()) << "\n";
    out << "mean_h," << fmt(mean_h) << "\n";
    out << "mean_x," << fmt(rep.mean_x) << "\n";
    out << "mean_p," << fmt(rep.mean_p) << "\n";
    out << "var_x," << fmt(rep.var_x) << "\n";
    out << "var_p," << fmt(rep.var_p) << "\n";
    out << "mean_g," << fmt(rep.mean_g) << "\n";
    out << "mean_c," << fmt(rep.mean_c) << "\n";
    out << "rs_left," << fmt(rep.rs_left) << "\n";
    out << "rs_right," << fmt(rep.rs_right) << "\n";
    out << "rs_residual," << fmt(rep.residual) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct CheckResult {
  std::string name;
  double residual;
  double tol;
  bool pass() const { return residual <= tol; }
};

std::vector<CheckResult> suite_unity(const RunConfig& cfg) {
  ModelParams params(cfg.epsilon);
  int dim = cfg.dim > 0 ? cfg.dim : 20;
  double tol = cfg.tol > 0.0 ? cfg.tol : 1e-6;
  RadialQuadrature quad = unity_quadrature(params, dim - 1);
  OperatorMatrix m = resolution_of_unity(dim, params, quad);
  double diag_dev = 0.0, off_dev = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (i == j)
        diag_dev = std::max(diag_dev, std::abs(m(i, i).real() - 1.0));
      else
        off_dev = std::max(off_dev, std::abs(m(i, j)));
  return {{"unity_diagonal_max_dev", diag_dev, tol},
          {"unity_offdiagonal_max", off_dev, 0.0}};
}

std::vector<CheckResult> suite_moments(const RunConfig& cfg) {
  ModelParams params(cfg.epsilon);
  int n_max = cfg.dim > 0 ? cfg.dim : 20;
  double tol = cfg.tol > 0.0 ? cfg.tol : 1e-7;
  RadialQuadrature quad = moment_quadrature(params, n_max);
  double worst = 0.0;
  for (int n = 1; n <= n_max; ++n)
    worst = std::max(worst, moment_check(n, params, quad).rel_err);
  return {{"mellin_moment_max_rel_err", worst, tol}};
}

std::vector<CheckResult> suite_algebra(const RunConfig& cfg) {
  ModelParams params(cfg.epsilon, cfg.alpha);
  int dim = cfg.dim > 0 ? cfg.dim : 20;
  double tol = cfg.tol > 0.0 ? cfg.tol : 1e-12;
  LadderMatrices lad = ladder_matrices(dim, params);
  OperatorMatrix comm = lad.lower * lad.raise - lad.raise * lad.lower;
  double comm_dev = 0.0;
  for (int i = 0; i < dim - 2; ++i)
    for (int j = 0; j < dim - 2; ++j) {
      Complex expected = i == j ? Complex(1.0 + 3.0 * params.epsilon * (i + 1.0))
                                : Complex(0.0);
      comm_dev = std::max(comm_dev, std::abs(comm(i, j) - expected));
    }
  Su11Generators su = su11_generators(dim, params);
  double kappa = 1.0 / (3.0 * params.epsilon);
  double cas_dev = 0.0;
  for (int i = 0; i < dim - 1; ++i)
    for (int j = 0; j < dim - 1; ++j) {
      Complex expected = i == j ? Complex(kappa * (kappa + 1.0)) : Complex(0.0);
      cas_dev = std::max(cas_dev,
                         std::abs(su.casimir(i, j) - expected) /
                             (kappa * (kappa + 1.0)));
    }
  return {{"commutator_max_dev", comm_dev, tol},
          {"casimir_max_rel_dev", cas_dev, tol}};
}

double gis_pair_dev(const FockVector& a, const FockVector& b, int n_max) {
  double scale = 0.0, dev = 0.0;
  int top = std::min({a.dim() - 1, b.dim() - 1, n_max});
  for (int n = 0; n <= top; ++n) scale = std::max(scale, std::abs(a.amps(n)));
  for (int n = 0; n <= top; ++n)
    dev = std::max(dev, std::abs(a.amps(n) - b.amps(n)) / scale);
  return dev;
}

std::vector<CheckResult> suite_gis_equivalence(const RunConfig& cfg) {
  ModelParams params(cfg.epsilon, cfg.alpha);
  int dim = cfg.dim > 0 ? cfg.dim : 80;
  double tol = cfg.tol > 0.0 ? cfg.tol : 1e-9;
  std::vector<Complex> lambdas = {0.5, 2.0, {2.0, 1.0}};
  std::vector<Complex> zs = {1.0, {0.0, 2.0}};
  double worst_pair = 0.0, worst_cf = 0.0;
  for (Complex lam : lambdas)
    for (Complex z : zs) {
      GisLabel label{lam, z};
      FockVector rec = gis_recurrence(label, params, dim);
      FockVector closed = gis_closed_form(label, params, dim);
      FockVector series = gis_operator_series(label, params, dim);
      worst_pair = std::max(worst_pair, gis_pair_dev(rec, closed, 15));
      worst_pair = std::max(worst_pair, gis_pair_dev(rec, series, 15));
      worst_pair = std::max(worst_pair, gis_pair_dev(closed, series, 15));
      for (int n = 1; n <= 15; ++n) {
        Complex ratio = rec.amps(n) / rec.amps(n - 1) *
                        std::sqrt(energy(n, params)) *
                        std::exp(Complex(0.0, 1.0) * params.alpha *
                                 (energy(n, params) - energy(n - 1, params)));
        Complex a = gis_continued_fraction(label, params, n);
        worst_cf = std::max(worst_cf, std::abs(ratio - a) / std::abs(a));
      }
    }
  return {{"gis_solver_max_amp_dev", worst_pair, tol},
          {"gis_continued_fraction_max_dev", worst_cf, tol}};
}

std::vector<CheckResult> suite_rs(const RunConfig& cfg) {
  ModelParams params(cfg.epsilon, cfg.alpha);
  double tol_sat = cfg.tol > 0.0 ? cfg.tol : 1e-8;
  int dim = cfg.dim > 0 ? cfg.dim : 80;

  double worst_sat = 0.0, worst_ratio = 0.0;
  std::vector<Complex> lambdas = {0.5, 1.0, 2.0, {2.0, 1.0}};
  std::vector<Complex> zs = {1.0, {0.5, 0.5}};
  for (Complex lam : lambdas)
    for (Complex z : zs) {
      FockVector state = gis_recurrence({lam, z}, params, dim);
      UncertaintyReport rep = uncertainty_report(state, params);
      worst_sat = std::max(worst_sat, std::abs(rep.residual) / rep.rs_right);
      worst_ratio = std::max(worst_ratio,
                             std::abs(rep.var_x / rep.var_p - std::norm(lam)) /
                                 std::norm(lam));
    }

  std::mt19937 rng(cfg.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst_slack = 0.0;  // positive means violation
  for (int k = 0; k < 100; ++k) {
    Eigen::VectorXcd amps(12);
    for (int n = 0; n < 12; ++n) amps(n) = Complex(u(rng), u(rng));
    FockVector state{params, amps};
    UncertaintyReport rep = uncertainty_report(state, params);
    worst_slack = std::max(worst_slack, -rep.residual);
  }
  return {{"gis_saturation_max_rel_residual", worst_sat, tol_sat},
          {"variance_ratio_max_rel_dev", worst_ratio, tol_sat},
          {"random_state_max_violation", worst_slack, 1e-9}};
}

std::vector<CheckResult> suite_limit(const RunConfig& cfg) {
  double eps = 1e-6;
  int dim = cfg.dim > 0 ? cfg.dim : 40;
  double worst_fid = 0.0;
  for (Complex z : {Complex(1.0), Complex(2.0), Complex(1.0, 1.0)}) {
    std::vector<double> fid = harmonic_limit_fidelity(z, 0.3, {eps}, dim);
    worst_fid = std::max(worst_fid, 1.0 - fid[0]);
  }

  ModelParams params(eps);
  FockVector vacuum{params, Eigen::VectorXcd::Zero(6)};
  vacuum.amps(0) = 1.0;
  UncertaintyReport rep = uncertainty_report(vacuum, params);
  double expected = 0.5 * (1.0 + 3.0 * eps);
  double vac_dev = std::abs(std::sqrt(rep.var_x * rep.var_p) - expected);

  GisLabel label{Complex(0.5), Complex(1.0)};
  EntireFunctionCoeffs proxy = harmonic_limit_analytic(label, label.z, eps, 12);
  Eigen::VectorXcd limit = gaussian_limit_coeffs(label.lambda, label.z, 12);
  double worst_coeff = 0.0;
  // unit floor: near-zero coefficients would inflate a purely relative dev
  for (int n = 0; n < 10; ++n)
    worst_coeff = std::max(worst_coeff, std::abs(proxy.coeffs(n) - limit(n)) /
                                            std::max(1.0, std::abs(limit(n))));
  return {{"coherent_fidelity_defect", worst_fid, 1e-5},
          {"vacuum_uncertainty_dev", vac_dev, 1e-15},
          {"analytic_coeff_max_rel_dev", worst_coeff, 1e-4}};
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& out,
               std::ostream& err) {
  warn_regime(cfg, err);
  std::vector<CheckResult> checks;
  if (suite == "unity") checks = suite_unity(cfg);
  else if (suite == "moments") checks = suite_moments(cfg);
  else if (suite == "algebra") checks = suite_algebra(cfg);
  else if (suite == "gis-equivalence") checks = suite_gis_equivalence(cfg);
  else if (suite == "rs") checks = suite_rs(cfg);
  else if (suite == "limit") checks = suite_limit(cfg);
  else throw DomainError("unknown verify suite: " + suite);

  bool all_pass = true;
  if (cfg.output_format == "json") {
    json rows = json::array();
    for (const CheckResult& c : checks) {
      rows.push_back({{"check", c.name},
                      {"residual", c.residual},
                      {"tol", c.tol},
                      {"pass", c.pass()}});
      all_pass = all_pass && c.pass();
    }
    json doc = {{"schema_version", 1},
                {"command", "verify"},
                {"suite", suite},
                {"checks", rows},
                {"pass", all_pass}};
    out << doc.dump(2) << "\n";
  } else {
    out << "check,residual,tol,status\n";
    for (const CheckResult& c : checks) {
      out << c.name << "," << fmt(c.residual) << "," << fmt(c.tol) << ","
          << (c.pass() ? "PASS" : "FAIL") << "\n";
      all_pass = all_pass && c.pass();
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"anharmonic-oscillator coherent, cat, and intelligent states"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string state_kind, verify_suite;

  CLI::App* sp = app.add_subcommand("spectrum", "energies and level factorials");
  add_common(sp, cfg, true);

  CLI::App* st = app.add_subcommand("state", "amplitudes and distribution");
  st->add_option("kind", state_kind, "coherent|even-cat|odd-cat|real-cat|imag-cat|gis|squeezed-vacuum")
      ->required()
      ->check(CLI::IsMember({"coherent", "even-cat", "odd-cat", "real-cat",
                             "imag-cat", "gis", "squeezed-vacuum"}));
  add_common(st, cfg, true);
  st->add_option("--z", cfg.z_str, "state label as \"re,im\"");
  st->add_option("--lambda", cfg.lambda_str, "eigenproblem parameter \"re,im\"");

  CLI::App* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("suite", verify_suite, "unity|moments|algebra|gis-equivalence|rs|limit")
      ->required()
      ->check(CLI::IsMember({"unity", "moments", "algebra", "gis-equivalence",
                             "rs", "limit"}));
  add_common(ve, cfg, false);
  ve->add_option("--seed", cfg.seed, "seed for randomized checks");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (sp->parsed()) return cmd_spectrum(cfg, out, err);
    if (st->parsed()) return cmd_state(state_kind, cfg, out, err);
    return cmd_verify(verify_suite, cfg, out, err);
  } catch (const CLI::ParseError& e) {
    // deferred flag validation (complex "re,im" parsing)
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace qosc
