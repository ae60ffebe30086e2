// specfun.hpp - special functions backing the model's closed forms:
// log-Gamma, 0F1, 0F3, 1F1 (Kummer) and modified Bessel I_nu, K_nu.
#ifndef QOSC_SPECFUN_HPP
#define QOSC_SPECFUN_HPP

#include "qosc/types.hpp"

namespace qosc {

/// Controls hypergeometric/Bessel series evaluation.  rel_tol is the
/// term-to-sum cutoff; evaluation fails (throws EvaluationError) rather than
/// returning a partial sum when max_terms is exhausted first.
struct SeriesPolicy {
  double rel_tol = 1e-15;      // > 0 and <= 1e-6
  int max_terms = 4000;        // >= 64
  double overflow_guard = 1e280;

  void validate() const {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-6))
      throw DomainError("SeriesPolicy: rel_tol must be in (0, 1e-6]");
    if (max_terms < 64)
      throw DomainError("SeriesPolicy: max_terms must be >= 64");
    if (!(overflow_guard > 0.0))
      throw DomainError("SeriesPolicy: overflow_guard must be > 0");
  }
};

/// ln Gamma(x) for x > 0, relative error <= 1e-12 on (0, 1e4).
double ln_gamma(double x);

/// 0F1(b; x) = sum_n Gamma(b)/Gamma(b+n) x^n / n!
Complex hyp0f1(double b, Complex x, const SeriesPolicy& policy = {});

/// 0F3(b1, b2, b3; x)
Complex hyp0f3(double b1, double b2, double b3, Complex x,
               const SeriesPolicy& policy = {});

/// Confluent hypergeometric 1F1(a, b; z).  For Re z < 0 the Kummer
/// transformation 1F1(a,b,z) = e^z 1F1(b-a,b,-z) routes evaluation to the
/// better-conditioned side.
Complex hyp1f1(Complex a, double b, Complex z, const SeriesPolicy& policy = {});

/// Modified Bessel function of the first kind, series evaluation; switches
/// to log-space accumulation when the result would exceed overflow_guard.
double bessel_i(double nu, double x, const SeriesPolicy& policy = {});

/// Modified Bessel function of the third kind, non-integer order.
/// x <= 25: K = (pi/2)(I_{-nu} - I_nu)/sin(nu pi), summed in extended
/// precision (the cancellation is ~e^{-2x} and kills plain doubles well
/// before the crossover).  x > 25: uniform large-x asymptotic expansion at a
/// base order in (0,2), then stable upward recurrence in the order.
double bessel_k(double nu, double x, const SeriesPolicy& policy = {});

namespace detail {
// Individual K_nu branches, exposed so the crossover overlap window can be
// certified directly.
double bessel_k_series_branch(double nu, double x, const SeriesPolicy& policy);
double bessel_k_asymptotic_branch(double nu, double x);
}  // namespace detail

}  // namespace qosc

#endif  // QOSC_SPECFUN_HPP
