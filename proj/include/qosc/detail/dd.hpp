// dd.hpp - minimal double-double helpers for exact phase products
//
// Only what the phase bookkeeping needs: an error-free product a*b kept as
// hi+lo, and a mod-2pi reduction accurate to ~1e-30, so that
// e^{i a (b+c)} and e^{i a b} * e^{i a c} agree to a few ulps even when
// |a*b| is in the hundreds.
#ifndef QOSC_DETAIL_DD_HPP
#define QOSC_DETAIL_DD_HPP

#include <cmath>
#include <complex>

namespace qosc::detail {

struct dd {
  double hi;
  double lo;
};

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  return {p, err};
}

inline dd dd_add(dd a, double b) {
  dd s = two_sum(a.hi, b);
  s.lo += a.lo;
  dd r = two_sum(s.hi, s.lo);
  return r;
}

inline dd dd_add(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return two_sum(s.hi, s.lo);
}

// 2*pi to double-double accuracy
inline constexpr double kTwoPiHi = 6.283185307179586476925286766559;
inline constexpr double kTwoPiLo = 2.4492935982947063545e-16;

// theta mod 2pi, input given as exact hi+lo pair
inline dd mod_two_pi(dd theta) {
  double n = std::nearbyint(theta.hi / kTwoPiHi);
  if (n == 0.0) return theta;
  dd p1 = two_prod(n, kTwoPiHi);
  dd p2 = two_prod(n, kTwoPiLo);
  dd r = dd_add(theta, {-p1.hi, -p1.lo});
  r = dd_add(r, {-p2.hi, -p2.lo});
  return r;
}

/// e^{i a b} with the product a*b formed exactly and reduced mod 2pi before
/// the trig evaluation.  Plain std::polar(1, a*b) drifts by ~|ab|*eps, which
/// breaks amplitude-wise temporal-stability comparisons at the 1e-15 level.
inline std::complex<double> cis_prod(double a, double b) {
  dd t = mod_two_pi(two_prod(a, b));
  double c = std::cos(t.hi);
  double s = std::sin(t.hi);
  // first-order correction for the residual lo part
  return {c - s * t.lo, s + c * t.lo};
}

}  // namespace qosc::detail

#endif  // QOSC_DETAIL_DD_HPP
