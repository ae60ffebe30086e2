// measure.hpp - resolution-of-unity machinery: the Bessel-weighted radial
// measure, its Mellin moment identity, numerical certification of
// overcompleteness, and state reconstruction from coherent-state overlaps.
#ifndef QOSC_MEASURE_HPP
#define QOSC_MEASURE_HPP

#include <functional>
#include <vector>

#include "qosc/states.hpp"
#include "qosc/types.hpp"

namespace qosc {

/// Composite Gauss-Legendre quadrature on [0, r_max] carrying both a coarse
/// and a node-doubled grid; every integral is certified by their agreement.
/// Integrands here look like r^p e^{-c r} after the x = r^2, u = sqrt(x)
/// substitution (raw x-space spans hundreds of orders of magnitude).
struct RadialQuadrature {
  std::vector<double> nodes;           // fine grid
  std::vector<double> weights;
  std::vector<double> coarse_nodes;
  std::vector<double> coarse_weights;
  double r_max = 0.0;
  int n_nodes = 0;  // fine node count
  double tol = 1e-9;

  /// Tail cutoff placed where r^power e^{-decay r} falls below 1e-18 of its
  /// peak; `panels` coarse panels of 32-point Gauss-Legendre each.
  static RadialQuadrature build(double decay, double power, double tol = 1e-9,
                                int panels = 32);

  /// Certified integral of f over [0, r_max]; throws QuadratureError if the
  /// coarse and fine grids disagree beyond tol (relative).
  double integrate(const std::function<double(double)>& f) const;
};

/// Quadrature sized for the unity diagonals n <= n_max (r-variable, x = r^2).
RadialQuadrature unity_quadrature(const ModelParams& params, int n_max,
                                  double tol = 1e-9);

/// Quadrature sized for the Mellin moments n <= n_max (v-variable, y = v^2).
RadialQuadrature moment_quadrature(const ModelParams& params, int n_max,
                                   double tol = 1e-9);

/// Radial weight h(x) of the measure d mu = [0F1(...)] h(r^2) r dr dphi:
/// a Bessel-K density fixed by Mellin inversion.
double weight_h(double x, const ModelParams& params);

/// ln h(x); the direct value underflows in the far tail.
double ln_weight_h(double x, const ModelParams& params);

struct MomentCheck {
  double computed;
  double expected;  // Gamma(n) Gamma(n + 2/(3 eps) + 1)
  double rel_err;
};

/// Quadrature of y^{n-1} g(y) against its closed-form Mellin moment.
MomentCheck moment_check(int n, const ModelParams& params,
                         const RadialQuadrature& quad);

/// M_{mn} = integral <m|z><z|n> d mu(z).  Off-diagonals vanish analytically
/// under the angular integral and are assembled as exact zeros; diagonals
/// pi/F(n) * integral x^n h(x) dx are computed by radial quadrature.
OperatorMatrix resolution_of_unity(int dim, const ModelParams& params,
                                   const RadialQuadrature& quad);

/// Density of the even/odd cat measure at (r, phi):
/// [N_parity(r)]^{-2} h(r^2) r  (phi-independent).
double cat_measures(CatParity parity, double r, double phi,
                    const ModelParams& params);

/// Diagonals of the combined even+odd cat completeness sum, computed through
/// the cat normalizations and measures (should reproduce unity diagonals).
std::vector<double> cat_completeness_diagonals(int dim, const ModelParams& params,
                                               const RadialQuadrature& quad);

/// integral <z|g> |z> d mu(z), angular part analytic, radial by quadrature.
FockVector reconstruct(const FockVector& state, const RadialQuadrature& quad,
                       const ModelParams& params);

}  // namespace qosc

#endif  // QOSC_MEASURE_HPP
