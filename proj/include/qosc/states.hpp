// states.hpp - coherent states, even/odd and real/imaginary cat states,
// overlaps, probability distributions, time evolution, harmonic limits.
#ifndef QOSC_STATES_HPP
#define QOSC_STATES_HPP

#include <vector>

#include <Eigen/Dense>

#include "qosc/types.hpp"

namespace qosc {

inline constexpr double kDefaultTailTol = 1e-14;

/// Truncated amplitude sequence over the basis |n,eps>.
struct FockVector {
  ModelParams params;
  Eigen::VectorXcd amps;
  bool tail_warning = false;

  int dim() const { return static_cast<int>(amps.size()); }
  double norm() const { return amps.norm(); }
  /// |amp_{dim-1}|^2 relative to the squared norm.
  double tail() const {
    double n2 = amps.squaredNorm();
    return n2 > 0.0 ? std::norm(amps(amps.size() - 1)) / n2 : 0.0;
  }
  FockVector normalized() const {
    FockVector v = *this;
    v.amps /= amps.norm();
    return v;
  }
};

inline Complex inner(const FockVector& a, const FockVector& b) {
  return a.amps.dot(b.amps);  // Eigen's dot conjugates the left argument
}

/// The label (z, alpha) of a coherent state.
struct CoherentLabel {
  Complex z;
  double alpha = 0.0;
};

/// dim >= this guarantees the tail invariant for |z| <= 5.
int default_dim(Complex z);

/// Gazeau-Klauder coherent state: a_n = a0 z^n e^{-i alpha e_n} / sqrt(F(n)),
/// a0 = [0F1(2+2/(3eps), (2/(3eps))|z|^2)]^{-1/2}.  Throws TruncationError
/// if the tail of the truncated expansion exceeds tail_tol.
FockVector coherent(const CoherentLabel& label, const ModelParams& params,
                    int dim, double tail_tol = kDefaultTailTol);

/// Closed-form overlap <z,alpha|z',alpha> via the 0F1 kernel.
Complex kernel(Complex z, Complex z_prime, const ModelParams& params);

/// e^{-itH}: multiplies amplitude n by e^{-i t e_n}.
FockVector evolve(const FockVector& state, double t);

/// Even (+) / odd (-) superpositions of |z> and |-z>, unit norm.
FockVector even_cat(const CoherentLabel& label, const ModelParams& params,
                    int dim, double tail_tol = kDefaultTailTol);
FockVector odd_cat(const CoherentLabel& label, const ModelParams& params,
                   int dim, double tail_tol = kDefaultTailTol);

enum class CatParity { even, odd };
enum class CatKind { even, odd, real, imaginary };

/// Normalization constants N_e, N_o (0F3 closed forms).
double cat_normalization(CatParity parity, Complex z, const ModelParams& params);

/// Normalized overlap of two same-parity cats.  Symmetric in its labels:
/// the denominator is sqrt(N-series(z) N-series(z')).
Complex cat_overlaps(Complex z, Complex z_prime, CatParity parity,
                     const ModelParams& params);

/// P(n) for the four cat families.
double cat_distribution(CatKind kind, const CoherentLabel& label,
                        const ModelParams& params, long long n);

/// Real (+) / imaginary (-) superpositions of |z> and |conj z>.
/// real_cat with phi = 0 collapses to the coherent state (no error);
/// imaginary_cat requires phi not in pi Z.
FockVector real_cat(const CoherentLabel& label, const ModelParams& params,
                    int dim, double tail_tol = kDefaultTailTol);
FockVector imaginary_cat(const CoherentLabel& label, const ModelParams& params,
                         int dim, double tail_tol = kDefaultTailTol);

/// Standard harmonic-oscillator coherent state e^{-|z|^2/2} z^n e^{-in alpha}
/// / sqrt(n!) on the same truncated basis (reference for the eps -> 0 limit).
Eigen::VectorXcd standard_coherent_amplitudes(Complex z, double alpha, int dim);

/// |<coherent_eps(z,alpha) | standard_CS(z,alpha)>| for each eps in the
/// (decreasing) sequence; approaches 1.
std::vector<double> harmonic_limit_fidelity(Complex z, double alpha,
                                            const std::vector<double>& eps_sequence,
                                            int dim);

}  // namespace qosc

#endif  // QOSC_STATES_HPP
