// analytic.cpp

#include "qosc/analytic.hpp"

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

mpc to_mpc(Complex v) { return {mpf(v.real()), mpf(v.imag())}; }

Complex to_double(const mpc& v) {
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

}  // namespace

EntireFunctionCoeffs to_analytic(const FockVector& state) {
  int dim = state.dim();
  EntireFunctionCoeffs out{state.params, Eigen::VectorXcd(dim)};
  double inv_sqrt_f = 1.0;
  for (int n = 0; n < dim; ++n) {
    if (n > 0) inv_sqrt_f /= std::sqrt(energy(n, state.params));
    out.coeffs(n) = state.amps(n) * inv_sqrt_f *
                    detail::cis_prod(state.params.alpha, energy(n, state.params));
  }
  return out;
}

FockVector from_analytic(const EntireFunctionCoeffs& coeffs) {
  int dim = coeffs.dim();
  FockVector out{coeffs.params, Eigen::VectorXcd(dim)};
  double sqrt_f = 1.0;
  for (int n = 0; n < dim; ++n) {
    if (n > 0) sqrt_f *= std::sqrt(energy(n, coeffs.params));
    out.amps(n) = coeffs.coeffs(n) * sqrt_f *
                  detail::cis_prod(-coeffs.params.alpha, energy(n, coeffs.params));
  }
  return out;
}

AnalyticOperators analytic_operators(int dim, const ModelParams& params) {
  if (dim < 3) throw DimensionError("analytic_operators: dim must be >= 3");
  double eps = params.epsilon;
  AnalyticOperators ops;
  ops.lower = [dim, eps](const Eigen::VectorXcd& c) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
    for (int n = 0; n + 1 < dim; ++n)
      out(n) = ((1.0 + 3.0 * eps) * (n + 1.0) +
                1.5 * eps * (n + 1.0) * double(n)) *
               c(n + 1);
    return out;
  };
  ops.raise = [dim](const Eigen::VectorXcd& c) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
    for (int n = 1; n < dim; ++n) out(n) = c(n - 1);
    return out;
  };
  ops.number = [dim](const Eigen::VectorXcd& c) {
    Eigen::VectorXcd out(dim);
    for (int n = 0; n < dim; ++n) out(n) = double(n) * c(n);
    return out;
  };
  return ops;
}

EntireFunctionCoeffs kummer_gis(const GisLabel& label, const ModelParams& params,
                                int dim, int branch) {
  if (branch != 1 && branch != -1)
    throw DomainError("kummer_gis: branch must be +1 or -1");
  if (std::abs(label.lambda + 1.0) < 1e-15)
    throw NoSolutionError("kummer_gis: lambda = -1 admits no solution");
  if (std::abs(label.lambda - 1.0) < 1e-12)
    throw DegenerateLabelError(
        "kummer_gis: lambda = 1 is the confluent degeneration; use gk_analytic");
  if (dim < 1) throw DimensionError("kummer_gis: dim must be >= 1");

  // exp(c z) and 1F1(a, b, -2 c z) are convolved in 50-digit arithmetic:
  // c grows like 1/sqrt(eps) and the product cancels heavily at small eps
  mpf inv3e = mpf(1) / (3 * mpf(params.epsilon));
  mpc lam = to_mpc(label.lambda);
  mpc mu = (mpc(1) + lam) / (2 * inv3e);
  mpc c = mpf(branch) * sqrt((lam - mpc(1)) / mu);
  // a = b/2 - z/(mu c): reducing the ODE by Phi = e^{cz} w(-2cz) pins the
  // z term's coefficient (the z^1 Taylor coefficient then matches the
  // eigenvalue equation and the eps -> 0 Gaussian limit)
  mpc a = mpc(1) + inv3e - to_mpc(label.z) / (mu * c);
  mpf b = 2 * inv3e + 2;

  std::vector<mpc> exp_c(dim), kum(dim);
  exp_c[0] = 1;
  kum[0] = 1;
  for (int k = 1; k < dim; ++k) {
    exp_c[k] = exp_c[k - 1] * c / k;
    kum[k] = kum[k - 1] * (a + mpc(k - 1)) * (-2 * c) / ((b + (k - 1)) * k);
  }
  EntireFunctionCoeffs out{ModelParams(params.epsilon, params.alpha),
                           Eigen::VectorXcd(dim)};
  for (int n = 0; n < dim; ++n) {
    mpc s = 0;
    for (int k = 0; k <= n; ++k) s += exp_c[k] * kum[n - k];
    out.coeffs(n) = to_double(s);
  }
  return out;
}

EntireFunctionCoeffs gk_analytic(Complex z_prime, const ModelParams& params,
                                 int dim) {
  if (dim < 1) throw DimensionError("gk_analytic: dim must be >= 1");
  double w = 2.0 / (3.0 * params.epsilon);
  double b = w + 2.0;
  EntireFunctionCoeffs out{ModelParams(params.epsilon, params.alpha),
                           Eigen::VectorXcd(dim)};
  out.coeffs(0) = 1.0;
  for (int n = 1; n < dim; ++n)
    out.coeffs(n) = out.coeffs(n - 1) * w * z_prime / (double(n) * (b + n - 1.0));
  return out;
}

double verify_ode(const EntireFunctionCoeffs& coeffs, const GisLabel& label,
                  const ModelParams& params) {
  int dim = coeffs.dim();
  if (dim < 4) throw DimensionError("verify_ode: dim must be >= 4");
  Complex lam = label.lambda;
  double worst = 0.0;
  for (int n = 0; n <= dim - 3; ++n) {
    Complex r = (1.0 + lam) * energy(n + 1, params) * coeffs.coeffs(n + 1) -
                2.0 * label.z * coeffs.coeffs(n);
    if (n > 0) r += (1.0 - lam) * coeffs.coeffs(n - 1);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

EntireFunctionCoeffs harmonic_limit_analytic(const GisLabel& label,
                                             Complex z_prime, double eps,
                                             int dim) {
  if (!(eps > 0.0 && eps <= 1e-4))
    throw DomainError("harmonic_limit_analytic: requires 0 < eps <= 1e-4");
  ModelParams p(eps);
  if (std::abs(label.lambda - 1.0) < 1e-12) return gk_analytic(z_prime, p, dim);
  return kummer_gis({label.lambda, z_prime}, p, dim);
}

Eigen::VectorXcd gaussian_limit_coeffs(Complex lambda, Complex z_prime, int dim) {
  if (std::abs(lambda + 1.0) < 1e-15)
    throw NoSolutionError("gaussian_limit_coeffs: lambda = -1");
  Complex a = 2.0 * z_prime / (1.0 + lambda);
  Complex b = (lambda - 1.0) / (lambda + 1.0);
  Eigen::VectorXcd p = Eigen::VectorXcd::Zero(dim);
  p(0) = 1.0;
  if (dim > 1) p(1) = a;
  for (int n = 2; n < dim; ++n) p(n) = (a * p(n - 1) + b * p(n - 2)) / double(n);
  return p;
}

}  // namespace qosc
