// spectrum.hpp - the model's defining data: energy levels e_n, the level
// factorial F(n), truncated ladder/number/Hamiltonian matrices, and the
// su(1,1) dressing of the algebra.
#ifndef QOSC_SPECTRUM_HPP
#define QOSC_SPECTRUM_HPP

#include <vector>

#include "qosc/types.hpp"

namespace qosc {

/// e_n = n + (3/2) epsilon (n^2 + n); strictly increasing in n.
double energy(long long n, const ModelParams& params);

/// ln F(n) with F(0) = 1, F(n) = e_1 e_2 ... e_n.
double ln_big_f(long long n, const ModelParams& params);

/// F(n); switches to exp(sum ln e_k) beyond n = 30 to avoid overflow.
double big_f(long long n, const ModelParams& params);

/// Inverts the spectrum: the n with energy(n) = e, as a real number.
double number_from_hamiltonian(double e, const ModelParams& params);

/// F(n)^{1/n} for n = 1..n_max; evidences an infinite radius of convergence.
std::vector<double> radius_growth(long long n_max, const ModelParams& params);

struct LadderMatrices {
  OperatorMatrix lower;   // A^-
  OperatorMatrix raise;   // A^+ = (A^-)^dagger
  OperatorMatrix number;  // N, diagonal n
  OperatorMatrix hamiltonian;  // H = A^+ A^-, diagonal e_n
};

/// Truncated matrices on |0..dim-1>.  A^+ maps the top basis state to zero
/// (truncation artifact); every algebraic identity holds below the edge.
/// A^+|n> = sqrt(e_{n+1}) e^{-i alpha (e_{n+1}-e_n)} |n+1>,
/// A^-|n> = sqrt(e_n) e^{ i alpha (e_n-e_{n-1})} |n-1>.
LadderMatrices ladder_matrices(int dim, const ModelParams& params);

struct Su11Generators {
  OperatorMatrix j_minus;
  OperatorMatrix j_plus;
  OperatorMatrix j12;
  OperatorMatrix casimir;  // J12 (J12 - 1) - 2 J+ J-; eigenvalue k(k+1)
};

/// J+- = sqrt(1/(3 eps)) A+-, J12 = (N+1) + 1/(3 eps).
Su11Generators su11_generators(int dim, const ModelParams& params);

}  // namespace qosc

#endif  // QOSC_SPECTRUM_HPP
