// states.cpp

#include "qosc/states.hpp"

#include <cmath>

#include "qosc/detail/dd.hpp"
#include "qosc/specfun.hpp"
#include "qosc/spectrum.hpp"

namespace qosc {

namespace {

// z^n / sqrt(F(n)) for n = 0..dim-1, accumulated multiplicatively
Eigen::VectorXcd monomial_over_sqrt_f(Complex z, const ModelParams& params,
                                      int dim) {
  Eigen::VectorXcd r(dim);
  r(0) = 1.0;
  for (int n = 1; n < dim; ++n)
    r(n) = r(n - 1) * z / std::sqrt(energy(n, params));
  return r;
}

void check_tail(const FockVector& v, double tail_tol, const char* who) {
  if (v.tail() > tail_tol)
    throw TruncationError(std::string(who) +
                          ": truncation tail exceeds tail_tol; increase dim");
}

double b_param(const ModelParams& params) {
  return 2.0 + 2.0 / (3.0 * params.epsilon);
}

}  // namespace

int default_dim(Complex z) {
  double a = std::abs(z);
  return std::max(40, static_cast<int>(std::ceil(a * a + 10.0 * a + 20.0)));
}

FockVector coherent(const CoherentLabel& label, const ModelParams& params,
                    int dim, double tail_tol) {
  if (dim < 2) throw DimensionError("coherent: dim must be >= 2");
  ModelParams p(params.epsilon, label.alpha);
  double w = 2.0 / (3.0 * p.epsilon);
  double norm2 = hyp0f1(b_param(p), w * std::norm(label.z)).real();
  double a0 = 1.0 / std::sqrt(norm2);

  FockVector v{p, monomial_over_sqrt_f(label.z, p, dim)};
  for (int n = 0; n < dim; ++n)
    v.amps(n) *= a0 * detail::cis_prod(-p.alpha, energy(n, p));
  check_tail(v, tail_tol, "coherent");
  return v;
}

Complex kernel(Complex z, Complex z_prime, const ModelParams& params) {
  double b = b_param(params);
  double w = 2.0 / (3.0 * params.epsilon);
  Complex num = hyp0f1(b, w * std::conj(z) * z_prime);
  double d1 = hyp0f1(b, w * std::norm(z)).real();
  double d2 = hyp0f1(b, w * std::norm(z_prime)).real();
  return num / std::sqrt(d1 * d2);
}

FockVector evolve(const FockVector& state, double t) {
  FockVector v = state;
  for (int n = 0; n < v.dim(); ++n)
    v.amps(n) *= detail::cis_prod(-t, energy(n, v.params));
  return v;
}

double cat_normalization(CatParity parity, Complex z, const ModelParams& params) {
  double eps = params.epsilon;
  double inv3e = 1.0 / (3.0 * eps);
  double x = std::pow(std::abs(z), 4) / (36.0 * eps * eps);
  if (parity == CatParity::even) {
    double s = hyp0f3(0.5, inv3e + 1.0, inv3e + 1.5, x).real();
    return 1.0 / std::sqrt(s);
  }
  if (std::abs(z) == 0.0)
    throw DegenerateLabelError("odd cat: normalization diverges at z = 0");
  double s = std::norm(z) / (1.0 + 3.0 * eps) *
             hyp0f3(1.5, inv3e + 2.0, inv3e + 1.5, x).real();
  return 1.0 / std::sqrt(s);
}

namespace {

FockVector parity_cat(CatParity parity, const CoherentLabel& label,
                      const ModelParams& params, int dim, double tail_tol) {
  ModelParams p(params.epsilon, label.alpha);
  double norm_const = cat_normalization(parity, label.z, p);
  Eigen::VectorXcd mono = monomial_over_sqrt_f(label.z, p, dim);
  FockVector v{p, Eigen::VectorXcd::Zero(dim)};
  int start = parity == CatParity::even ? 0 : 1;
  for (int n = start; n < dim; n += 2)
    v.amps(n) = norm_const * mono(n) * detail::cis_prod(-p.alpha, energy(n, p));
  check_tail(v, tail_tol, "cat");
  return v;
}

}  // namespace

FockVector even_cat(const CoherentLabel& label, const ModelParams& params,
                    int dim, double tail_tol) {
  return parity_cat(CatParity::even, label, params, dim, tail_tol);
}

FockVector odd_cat(const CoherentLabel& label, const ModelParams& params,
                   int dim, double tail_tol) {
  return parity_cat(CatParity::odd, label, params, dim, tail_tol);
}

Complex cat_overlaps(Complex z, Complex z_prime, CatParity parity,
                     const ModelParams& params) {
  double eps = params.epsilon;
  double inv3e = 1.0 / (3.0 * eps);
  Complex u = std::conj(z) * z_prime;
  Complex xu = u * u / (36.0 * eps * eps);
  double xz = std::pow(std::abs(z), 4) / (36.0 * eps * eps);
  double xzp = std::pow(std::abs(z_prime), 4) / (36.0 * eps * eps);
  if (parity == CatParity::even) {
    Complex num = hyp0f3(0.5, inv3e + 1.0, inv3e + 1.5, xu);
    double d1 = hyp0f3(0.5, inv3e + 1.0, inv3e + 1.5, xz).real();
    double d2 = hyp0f3(0.5, inv3e + 1.0, inv3e + 1.5, xzp).real();
    return num / std::sqrt(d1 * d2);
  }
  Complex num = u * hyp0f3(1.5, inv3e + 2.0, inv3e + 1.5, xu);
  double d1 = std::norm(z) * hyp0f3(1.5, inv3e + 2.0, inv3e + 1.5, xz).real();
  double d2 =
      std::norm(z_prime) * hyp0f3(1.5, inv3e + 2.0, inv3e + 1.5, xzp).real();
  if (d1 == 0.0 || d2 == 0.0)
    throw DegenerateLabelError("odd cat overlap: z = 0 label");
  return num / std::sqrt(d1 * d2);
}

namespace {

// sum_{n>=n0} r^{2n} weight(n) / F(n), summed until the tail is negligible
double trig_norm_series(double r, double phi, const ModelParams& params,
                        bool use_sin) {
  double sum = 0.0;
  double mono = 1.0;  // r^{2n} / F(n)
  for (long long n = 0; n < 200000; ++n) {
    if (n > 0) mono *= r * r / energy(n, params);
    double c = use_sin ? std::sin(n * phi) : std::cos(n * phi);
    double term = mono * c * c;
    sum += term;
    if (n > 4 && mono <= 1e-18 * std::max(sum, 1e-300)) return sum;
  }
  throw EvaluationError("cat normalization series did not converge");
}

}  // namespace

FockVector real_cat(const CoherentLabel& label, const ModelParams& params,
                    int dim, double tail_tol) {
  ModelParams p(params.epsilon, label.alpha);
  double r = std::abs(label.z);
  double phi = std::arg(label.z);
  double n_plus = 1.0 / std::sqrt(trig_norm_series(r, phi, p, false));
  FockVector v{p, Eigen::VectorXcd::Zero(dim)};
  double mono = 1.0;  // r^n / sqrt(F(n))
  for (int n = 0; n < dim; ++n) {
    if (n > 0) mono *= r / std::sqrt(energy(n, p));
    v.amps(n) =
        n_plus * mono * std::cos(n * phi) * detail::cis_prod(-p.alpha, energy(n, p));
  }
  check_tail(v, tail_tol, "real_cat");
  return v;
}

FockVector imaginary_cat(const CoherentLabel& label, const ModelParams& params,
                         int dim, double tail_tol) {
  ModelParams p(params.epsilon, label.alpha);
  double r = std::abs(label.z);
  double phi = std::arg(label.z);
  if (r == 0.0 || std::abs(std::sin(phi)) < 1e-12)
    throw DegenerateLabelError(
        "imaginary_cat: phi in pi*Z (or z = 0) leaves no antisymmetric part");
  double n_minus = 1.0 / std::sqrt(trig_norm_series(r, phi, p, true));
  FockVector v{p, Eigen::VectorXcd::Zero(dim)};
  double mono = 1.0;
  for (int n = 1; n < dim; ++n) {
    mono *= r / std::sqrt(energy(n, p));
    v.amps(n) =
        n_minus * mono * std::sin(n * phi) * detail::cis_prod(-p.alpha, energy(n, p));
  }
  check_tail(v, tail_tol, "imaginary_cat");
  return v;
}

double cat_distribution(CatKind kind, const CoherentLabel& label,
                        const ModelParams& params, long long n) {
  if (n < 0) throw DomainError("cat_distribution: n must be >= 0");
  double r = std::abs(label.z);
  double phi = std::arg(label.z);
  switch (kind) {
    case CatKind::even: {
      if (n % 2 != 0) return 0.0;
      double ne = cat_normalization(CatParity::even, label.z, params);
      return ne * ne * std::pow(r, 2.0 * n) *
             std::exp(-ln_big_f(n, params));
    }
    case CatKind::odd: {
      if (n % 2 != 1) return 0.0;
      double no = cat_normalization(CatParity::odd, label.z, params);
      return no * no * std::pow(r, 2.0 * n) * std::exp(-ln_big_f(n, params));
    }
    case CatKind::real: {
      double np2 = 1.0 / trig_norm_series(r, phi, params, false);
      double c = std::cos(n * phi);
      return np2 * std::pow(r, 2.0 * n) * c * c * std::exp(-ln_big_f(n, params));
    }
    case CatKind::imaginary: {
      if (n == 0) return 0.0;
      if (r == 0.0 || std::abs(std::sin(phi)) < 1e-12)
        throw DegenerateLabelError("cat_distribution: degenerate imaginary cat");
      double nm2 = 1.0 / trig_norm_series(r, phi, params, true);
      double s = std::sin(n * phi);
      return nm2 * std::pow(r, 2.0 * n) * s * s * std::exp(-ln_big_f(n, params));
    }
  }
  throw DomainError("cat_distribution: unknown kind");
}

Eigen::VectorXcd standard_coherent_amplitudes(Complex z, double alpha, int dim) {
  Eigen::VectorXcd a(dim);
  a(0) = std::exp(-0.5 * std::norm(z));
  for (int n = 1; n < dim; ++n) a(n) = a(n - 1) * z / std::sqrt(double(n));
  for (int n = 0; n < dim; ++n) a(n) *= detail::cis_prod(-alpha, double(n));
  return a;
}

std::vector<double> harmonic_limit_fidelity(Complex z, double alpha,
                                            const std::vector<double>& eps_sequence,
                                            int dim) {
  Eigen::VectorXcd ref = standard_coherent_amplitudes(z, alpha, dim);
  std::vector<double> out;
  out.reserve(eps_sequence.size());
  for (double eps : eps_sequence) {
    FockVector v = coherent({z, alpha}, ModelParams(eps), dim);
    out.push_back(std::abs(ref.dot(v.amps)) / (ref.norm() * v.amps.norm()));
  }
  return out;
}

}  // namespace qosc
