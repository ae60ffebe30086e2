// intelligent.hpp - generalized intelligent states: the eigenproblem
// ((1-lambda) A+ + (1+lambda) A-) |psi> = 2z |psi> solved by four routes
// (recurrence, continued fraction, closed form, operator series), the lambda
// special cases, and Robertson-Schrodinger uncertainty reports.
#ifndef QOSC_INTELLIGENT_HPP
#define QOSC_INTELLIGENT_HPP

#include "qosc/states.hpp"
#include "qosc/types.hpp"

namespace qosc {

/// Eigenproblem label.  |lambda| = 1 solutions are generalized coherent
/// states, |lambda| != 1 generalized squeezed states; lambda = -1 admits no
/// normalizable solution.
struct GisLabel {
  Complex lambda;
  Complex z;
};

struct UncertaintyReport {
  double mean_x;
  double mean_p;
  double var_x;
  double var_p;
  double mean_g;
  double mean_c;
  double rs_left;   // var_x * var_p
  double rs_right;  // (mean_g^2 + mean_c^2) / 4
  double residual;  // rs_left - rs_right
};

struct XpOperators {
  OperatorMatrix x;  // (A- + A+)/sqrt(2)
  OperatorMatrix p;  // i (A+ - A-)/sqrt(2)
  OperatorMatrix g;  // diag(1 + 3 eps (n+1)); [X,P] = iG below the edge
};

XpOperators xp_operators(int dim, const ModelParams& params);

/// State-dependent correlation operator {X - <X>, P - <P>}.
OperatorMatrix correlation_operator(const FockVector& state, int dim,
                                    const ModelParams& params);

/// Amplitudes from the three-term recurrence seeded at c_0 = 1, normalized
/// with c_0 gauged real positive.
FockVector gis_recurrence(const GisLabel& label, const ModelParams& params,
                          int dim, double tail_tol = kDefaultTailTol);

/// The ratio coefficient A_n = (c_n / c_{n-1}) sqrt(e_n) e^{i alpha gap},
/// evaluated as the finite continued fraction descending to A_1 = 2z/(1+lambda).
Complex gis_continued_fraction(const GisLabel& label, const ModelParams& params,
                               int n);

/// Amplitudes from the closed form with the nested sum Delta(n, h)
/// (Delta(n, 0) = 1), evaluated by dynamic programming.
FockVector gis_closed_form(const GisLabel& label, const ModelParams& params,
                           int dim, double tail_tol = kDefaultTailTol);

/// Delta(n, h): sum over h-element index sets {j_1 < ... < j_h} of {1..n-1}
/// with gaps >= 2, of products e_{j_1} ... e_{j_h}.
double gis_delta(int n, int h, const ModelParams& params);

/// z = 0 member of the family: even-support squeezed vacuum.
FockVector squeezed_vacuum(Complex lambda, const ModelParams& params, int dim,
                           double tail_tol = kDefaultTailTol);

/// Applies the operator series
/// sum_n ((2z/(1+lambda)) H^{-1} A+ + ((lambda-1)/(lambda+1)) H^{-1} (A+)^2)^n
/// to the vacuum; H^{-1} acts on span{|n> : n >= 1} only.
FockVector gis_operator_series(const GisLabel& label, const ModelParams& params,
                               int dim, double tail_tol = kDefaultTailTol);

UncertaintyReport uncertainty_report(const FockVector& state,
                                     const ModelParams& params);

enum class GisClass { coherent, squeezed };

/// coherent iff ||lambda| - 1| <= 1e-12.
GisClass gis_classify(const GisLabel& label);

}  // namespace qosc

#endif  // QOSC_INTELLIGENT_HPP
