// spectrum.cpp

#include "qosc/spectrum.hpp"

#include <cmath>

#include "qosc/detail/dd.hpp"

namespace qosc {

double energy(long long n, const ModelParams& params) {
  if (n < 0) throw DomainError("energy: n must be >= 0");
  double nd = static_cast<double>(n);
  return nd + 1.5 * params.epsilon * (nd * nd + nd);
}

double ln_big_f(long long n, const ModelParams& params) {
  if (n < 0) throw DomainError("ln_big_f: n must be >= 0");
  double s = 0.0;
  for (long long k = 1; k <= n; ++k) s += std::log(energy(k, params));
  return s;
}

double big_f(long long n, const ModelParams& params) {
  if (n <= 30) {
    double p = 1.0;
    for (long long k = 1; k <= n; ++k) p *= energy(k, params);
    return p;
  }
  return std::exp(ln_big_f(n, params));
}

double number_from_hamiltonian(double e, const ModelParams& params) {
  if (e < 0.0) throw DomainError("number_from_hamiltonian: e must be >= 0");
  double c = 0.5 + 1.0 / (3.0 * params.epsilon);
  // sqrt(c^2 + 2e/3eps) - c, rationalized to avoid cancellation at small e
  double t = 2.0 * e / (3.0 * params.epsilon);
  return t / (std::sqrt(t + c * c) + c);
}

std::vector<double> radius_growth(long long n_max, const ModelParams& params) {
  if (n_max < 2) throw DomainError("radius_growth: n_max must be >= 2");
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n_max));
  double lnf = 0.0;
  for (long long n = 1; n <= n_max; ++n) {
    lnf += std::log(energy(n, params));
    out.push_back(std::exp(lnf / static_cast<double>(n)));
  }
  return out;
}

LadderMatrices ladder_matrices(int dim, const ModelParams& params) {
  if (dim < 2) throw DimensionError("ladder_matrices: dim must be >= 2");
  LadderMatrices m;
  m.lower = OperatorMatrix::Zero(dim, dim);
  m.raise = OperatorMatrix::Zero(dim, dim);
  m.number = OperatorMatrix::Zero(dim, dim);
  m.hamiltonian = OperatorMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    double en = energy(n, params);
    m.number(n, n) = static_cast<double>(n);
    m.hamiltonian(n, n) = en;
    if (n >= 1) {
      double gap = en - energy(n - 1, params);
      Complex phase = detail::cis_prod(params.alpha, gap);
      m.lower(n - 1, n) = std::sqrt(en) * phase;           // A^-|n> -> |n-1>
      m.raise(n, n - 1) = std::sqrt(en) * std::conj(phase);  // A^+|n-1> -> |n>
    }
  }
  return m;
}

Su11Generators su11_generators(int dim, const ModelParams& params) {
  if (dim < 3) throw DimensionError("su11_generators: dim must be >= 3");
  LadderMatrices lad = ladder_matrices(dim, params);
  double scale = std::sqrt(1.0 / (3.0 * params.epsilon));
  Su11Generators g;
  g.j_minus = scale * lad.lower;
  g.j_plus = scale * lad.raise;
  g.j12 = OperatorMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n)
    g.j12(n, n) = 1.0 / (3.0 * params.epsilon) + n + 1.0;
  // J12(J12 - 1) - 2 J+ J-; the opposite sign is constant at -kappa(kappa+1)
  g.casimir = g.j12 * (g.j12 - OperatorMatrix::Identity(dim, dim)) -
              2.0 * g.j_plus * g.j_minus;
  return g;
}

}  // namespace qosc
