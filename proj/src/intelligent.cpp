// intelligent.cpp

#include "qosc/intelligent.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <vector>

#include "qosc/detail/dd.hpp"
#include "qosc/spectrum.hpp"

namespace qosc {

namespace {

using mpf = boost::multiprecision::cpp_bin_float_50;
using mpc = boost::multiprecision::cpp_complex_50;

void require_solvable(Complex lambda) {
  if (std::abs(lambda + 1.0) < 1e-15)
    throw NoSolutionError(
        "lambda = -1: the eigenproblem has no normalizable solution");
}

// normalize and gauge c_0 real positive (all constructions keep c_0 > 0 by
// build, so this is a plain normalization with a defensive phase fix)
FockVector finalize(FockVector v, double tail_tol, const char* who) {
  Complex c0 = v.amps(0);
  if (std::abs(c0) > 0.0) v.amps *= std::conj(c0) / std::abs(c0);
  v.amps /= v.amps.norm();
  if (v.tail() > tail_tol)
    throw TruncationError(std::string(who) +
                          ": truncation tail exceeds tail_tol; increase dim");
  return v;
}

}  // namespace

XpOperators xp_operators(int dim, const ModelParams& params) {
  if (dim < 3) throw DimensionError("xp_operators: dim must be >= 3");
  LadderMatrices lad = ladder_matrices(dim, params);
  XpOperators ops;
  double s = 1.0 / std::sqrt(2.0);
  ops.x = s * (lad.lower + lad.raise);
  ops.p = Complex(0.0, 1.0) * s * (lad.raise - lad.lower);
  ops.g = OperatorMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n)
    ops.g(n, n) = 1.0 + 3.0 * params.epsilon * (n + 1.0);
  return ops;
}

OperatorMatrix correlation_operator(const FockVector& state, int dim,
                                    const ModelParams& params) {
  XpOperators ops = xp_operators(dim, params);
  Eigen::VectorXcd v = state.amps / state.amps.norm();
  Complex mx = v.dot(ops.x * v);
  Complex mp = v.dot(ops.p * v);
  OperatorMatrix xc = ops.x - mx * OperatorMatrix::Identity(dim, dim);
  OperatorMatrix pc = ops.p - mp * OperatorMatrix::Identity(dim, dim);
  return xc * pc + pc * xc;
}

FockVector gis_recurrence(const GisLabel& label, const ModelParams& params,
                          int dim, double tail_tol) {
  require_solvable(label.lambda);
  if (dim < 3) throw DimensionError("gis_recurrence: dim must be >= 3");
  Complex lam = label.lambda;
  Complex z = label.z;
  Eigen::VectorXcd c(dim);
  c(0) = 1.0;
  {
    double e1 = energy(1, params);
    c(1) = 2.0 * z * detail::cis_prod(-params.alpha, e1) /
           ((1.0 + lam) * std::sqrt(e1));
  }
  for (int n = 1; n + 1 < dim; ++n) {
    double en = energy(n, params);
    double en1 = energy(n + 1, params);
    Complex down_phase = detail::cis_prod(-params.alpha, en - energy(n - 1, params));
    Complex up_phase = detail::cis_prod(params.alpha, en1 - en);
    c(n + 1) = (2.0 * z * c(n) - (1.0 - lam) * c(n - 1) * std::sqrt(en) * down_phase) /
               ((1.0 + lam) * std::sqrt(en1) * up_phase);
    if (std::abs(c(n + 1)) > 1e280) c.head(n + 2) /= std::abs(c(n + 1));
  }
  return finalize({params, c}, tail_tol, "gis_recurrence");
}

Complex gis_continued_fraction(const GisLabel& label, const ModelParams& params,
                               int n) {
  require_solvable(label.lambda);
  if (n < 1) throw DomainError("gis_continued_fraction: n must be >= 1");
  Complex head = 2.0 * label.z / (1.0 + label.lambda);
  Complex ratio = (label.lambda - 1.0) / (label.lambda + 1.0);
  Complex a = head;  // A_1
  for (int k = 2; k <= n; ++k) {
    if (std::abs(a) < 1e-300)
      throw ZeroDivisionError(
          "gis_continued_fraction: interior zero A_k = 0 in the descent");
    a = head + ratio * energy(k - 1, params) / a;
  }
  return a;
}

double gis_delta(int n, int h, const ModelParams& params) {
  if (n < 0 || h < 0) throw DomainError("gis_delta: n, h must be >= 0");
  if (h == 0) return 1.0;
  int m_max = n - 1;
  if (m_max < 2 * h - 1) return 0.0;
  // D(m, j): gap-2 subsets of {1..m} of size j, weighted by energy products
  std::vector<std::vector<double>> d(m_max + 1, std::vector<double>(h + 1, 0.0));
  for (int m = 0; m <= m_max; ++m) d[m][0] = 1.0;
  for (int m = 1; m <= m_max; ++m)
    for (int j = 1; j <= h; ++j)
      d[m][j] = d[m - 1][j] +
                energy(m, params) * (m >= 2 ? d[m - 2][j - 1]
                                            : (j == 1 ? 1.0 : 0.0));
  return d[m_max][h];
}

FockVector gis_closed_form(const GisLabel& label, const ModelParams& params,
                           int dim, double tail_tol) {
  require_solvable(label.lambda);
  if (std::abs(label.z) == 0.0)
    throw DegenerateLabelError(
        "gis_closed_form: z = 0 divides the closed form; use squeezed_vacuum");
  if (dim < 3) throw DimensionError("gis_closed_form: dim must be >= 3");

  // Delta(n, h) table in 50-digit floats: the bracket alternates in sign and
  // its partial terms dwarf the result at larger n.
  int m_max = dim - 2;
  int h_max = (dim - 1) / 2;
  std::vector<std::vector<mpf>> d(m_max + 1, std::vector<mpf>(h_max + 1, mpf(0)));
  for (int m = 0; m <= m_max; ++m) d[m][0] = 1;
  for (int m = 1; m <= m_max; ++m)
    for (int j = 1; j <= h_max; ++j) {
      mpf lower2 = (m >= 2) ? d[m - 2][j - 1] : (j == 1 ? mpf(1) : mpf(0));
      d[m][j] = d[m - 1][j] + mpf(energy(m, params)) * lower2;
    }

  mpc lam{mpf(label.lambda.real()), mpf(label.lambda.imag())};
  mpc z2{mpf((2.0 * label.z).real()), mpf((2.0 * label.z).imag())};
  mpc one_minus_lam2 = mpc(1) - lam * lam;
  mpc lead = 1;  // (2z)^n / ((1+lambda)^n sqrt(F(n)))
  Eigen::VectorXcd c(dim);
  c(0) = 1.0;
  for (int n = 1; n < dim; ++n) {
    lead *= z2 / ((mpc(1) + lam) * mpf(std::sqrt(energy(n, params))));
    mpc bracket = 1;
    mpc factor = 1;  // (-(1-lambda^2)/(2z)^2)^h
    for (int h = 1; h <= n / 2; ++h) {
      factor *= -one_minus_lam2 / (z2 * z2);
      bracket += factor * d[n - 1][h];
    }
    mpc cn = lead * bracket;
    c(n) = Complex(static_cast<double>(cn.real()), static_cast<double>(cn.imag())) *
           detail::cis_prod(-params.alpha, energy(n, params));
  }
  return finalize({params, c}, tail_tol, "gis_closed_form");
}

FockVector squeezed_vacuum(Complex lambda, const ModelParams& params, int dim,
                           double tail_tol) {
  require_solvable(lambda);
  if (dim < 3) throw DimensionError("squeezed_vacuum: dim must be >= 3");
  Complex q = (lambda - 1.0) / (2.0 * (lambda + 1.0));
  if (std::abs(q) >= 0.5 - 1e-12)
    throw TruncationError(
        "squeezed_vacuum: |(lambda-1)/(2(lambda+1))| >= 1/2, not normalizable");
  double beta = 1.0 / (3.0 * params.epsilon);
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
  Complex term = 1.0;  // c_{2k} / c_0, without the alpha phase
  c(0) = 1.0;
  for (int k = 0; 2 * (k + 1) < dim; ++k) {
    term *= q / (k + 1.0) *
            std::sqrt((2.0 * k + 1.0) * (2.0 * k + 2.0) * (k + 1.0 + beta) /
                      (k + beta + 1.5));
    c(2 * (k + 1)) = term * detail::cis_prod(-params.alpha, energy(2 * (k + 1), params));
  }
  return finalize({params, c}, tail_tol, "squeezed_vacuum");
}

FockVector gis_operator_series(const GisLabel& label, const ModelParams& params,
                               int dim, double tail_tol) {
  require_solvable(label.lambda);
  if (dim < 3) throw DimensionError("gis_operator_series: dim must be >= 3");
  LadderMatrices lad = ladder_matrices(dim, params);
  OperatorMatrix h_inv = OperatorMatrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) h_inv(n, n) = 1.0 / energy(n, params);

  Complex s1 = 2.0 * label.z / (1.0 + label.lambda);
  Complex s2 = (label.lambda - 1.0) / (label.lambda + 1.0);
  OperatorMatrix t = s1 * (h_inv * lad.raise) + s2 * (h_inv * lad.raise * lad.raise);

  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(0) = 1.0;
  Eigen::VectorXcd acc = v;
  // each application raises the support by >= 1 level, so the series is
  // finite on the truncated space
  for (int n = 1; n < dim; ++n) {
    v = t * v;
    acc += v;
    if (v.norm() <= 1e-300) break;
  }
  return finalize({params, acc}, tail_tol, "gis_operator_series");
}

UncertaintyReport uncertainty_report(const FockVector& state,
                                     const ModelParams& params) {
  int dim = state.dim();
  XpOperators ops = xp_operators(dim, params);
  Eigen::VectorXcd v = state.amps / state.amps.norm();

  auto expect = [&](const OperatorMatrix& op) { return v.dot(op * v); };
  double mx = expect(ops.x).real();
  double mp = expect(ops.p).real();
  double x2 = expect(ops.x * ops.x).real();
  double p2 = expect(ops.p * ops.p).real();
  double mg = expect(ops.g).real();
  double mc = expect(ops.x * ops.p + ops.p * ops.x).real() - 2.0 * mx * mp;

  UncertaintyReport r;
  r.mean_x = mx;
  r.mean_p = mp;
  r.var_x = x2 - mx * mx;
  r.var_p = p2 - mp * mp;
  r.mean_g = mg;
  r.mean_c = mc;
  r.rs_left = r.var_x * r.var_p;
  r.rs_right = 0.25 * (mg * mg + mc * mc);
  r.residual = r.rs_left - r.rs_right;
  return r;
}

GisClass gis_classify(const GisLabel& label) {
  require_solvable(label.lambda);
  return std::abs(std::abs(label.lambda) - 1.0) <= 1e-12 ? GisClass::coherent
                                                         : GisClass::squeezed;
}

}  // namespace qosc
