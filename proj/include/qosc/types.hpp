// types.hpp - shared domain types and error taxonomy
#ifndef QOSC_TYPES_HPP
#define QOSC_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace qosc {

using Complex = std::complex<double>;

/// Dense complex matrix on the truncated number basis |0>,...,|dim-1>.
using OperatorMatrix = Eigen::MatrixXcd;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside a function's domain (e.g. ln_gamma(x<=0)).
struct DomainError : Error { using Error::Error; };

/// Series parameter sits on a pole (b a non-positive integer).
struct PoleError : Error { using Error::Error; };

/// Series failed to reach the requested tolerance within max_terms.
struct EvaluationError : Error { using Error::Error; };

/// Result would lose too many significant digits to be trusted.
struct PrecisionError : Error { using Error::Error; };

/// Integer Bessel order: the limit formula is not implemented.
struct OrderError : Error { using Error::Error; };

/// Matrix truncation dimension too small for the requested construction.
struct DimensionError : Error { using Error::Error; };

/// Truncation tail too large; caller should enlarge dim.
struct TruncationError : Error { using Error::Error; };

/// Label makes the requested state degenerate (e.g. odd cat at z = 0).
struct DegenerateLabelError : Error { using Error::Error; };

/// Eigenproblem label admits no normalizable solution (lambda = -1).
struct NoSolutionError : Error { using Error::Error; };

/// Continued-fraction descent hit an interior zero.
struct ZeroDivisionError : Error { using Error::Error; };

/// Quadrature failed its node-doubling certification.
struct QuadratureError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Model parameters
// ---------------------------------------------------------------------------

/// The pair (epsilon, alpha) fixing the oscillator and its phase convention.
/// epsilon must be strictly positive; the harmonic limit is probed only
/// through small-epsilon proxies, never by constructing epsilon = 0.
struct ModelParams {
  double epsilon;
  double alpha;

  explicit ModelParams(double eps, double a = 0.0) : epsilon(eps), alpha(a) {
    if (!(eps > 0.0)) throw DomainError("ModelParams: epsilon must be > 0");
  }
};

}  // namespace qosc

#endif  // QOSC_TYPES_HPP
