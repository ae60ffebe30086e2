// analytic.hpp - entire-function representation of states: ladder operators
// as differential operators on power-series coefficients, and the Kummer
// (confluent hypergeometric) solution of the intelligent-state ODE.
#ifndef QOSC_ANALYTIC_HPP
#define QOSC_ANALYTIC_HPP

#include <functional>

#include "qosc/intelligent.hpp"
#include "qosc/states.hpp"
#include "qosc/types.hpp"

namespace qosc {

/// Power-series coefficients of f(z) = sum_n coeff_n z^n representing a
/// Fock-space state through coeff_n = f_n e^{i alpha e_n} / sqrt(F(n)).
struct EntireFunctionCoeffs {
  ModelParams params;
  Eigen::VectorXcd coeffs;

  int dim() const { return static_cast<int>(coeffs.size()); }
};

EntireFunctionCoeffs to_analytic(const FockVector& state);
FockVector from_analytic(const EntireFunctionCoeffs& coeffs);

using CoeffMap = std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>;

/// A- = (1 + 3 eps) d/dz + (3 eps / 2) z d^2/dz^2, A+ = z, N = z d/dz,
/// realized on truncated coefficient sequences of length dim.
struct AnalyticOperators {
  CoeffMap lower;
  CoeffMap raise;
  CoeffMap number;
};

AnalyticOperators analytic_operators(int dim, const ModelParams& params);

/// Coefficients of exp(c z) 1F1(a, b, -2 c z) with
///   mu = (1 + lambda)(3 eps / 2),  c = sqrt((lambda - 1) / mu),
///   a = 1 + 1/(3 eps) - z / (mu c),  b = 2/(3 eps) + 2,
/// normalized to coeff_0 = 1.  lambda = 1 is the confluent degeneration and
/// is refused; use gk_analytic instead.
/// branch selects the sign of the square root defining c; the Kummer
/// transformation makes the two branches agree, which tests assert.
EntireFunctionCoeffs kummer_gis(const GisLabel& label, const ModelParams& params,
                                int dim, int branch = +1);

/// lambda = 1 member: coefficients of 0F1(2 + 2/(3 eps), (2/(3 eps)) z' z),
/// normalized to coeff_0 = 1.
EntireFunctionCoeffs gk_analytic(Complex z_prime, const ModelParams& params,
                                 int dim);

/// Max |(1+lambda) e_{n+1} c_{n+1} + (1-lambda) c_{n-1} - 2 z' c_n| over
/// n <= dim - 3 (the top rows see the truncation edge and are excluded).
double verify_ode(const EntireFunctionCoeffs& coeffs, const GisLabel& label,
                  const ModelParams& params);

/// Small-eps proxy of the harmonic limit: the Kummer solution evaluated at
/// this eps (the 0F1 form when lambda = 1).  Requires eps <= 1e-4.
EntireFunctionCoeffs harmonic_limit_analytic(const GisLabel& label,
                                             Complex z_prime, double eps,
                                             int dim = 16);

/// Coefficients of exp(2 z' z / (1 + lambda) + ((lambda-1)/(lambda+1)) z^2/2),
/// the eps -> 0 Gaussian limit the proxy must approach.
Eigen::VectorXcd gaussian_limit_coeffs(Complex lambda, Complex z_prime, int dim);

}  // namespace qosc

#endif  // QOSC_ANALYTIC_HPP
