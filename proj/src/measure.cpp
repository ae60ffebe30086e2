// measure.cpp

#include "qosc/measure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "qosc/specfun.hpp"
#include "qosc/spectrum.hpp"

namespace qosc {

namespace {

// 32-point Gauss-Legendre rule on [-1, 1], computed once by Newton iteration
// on the Legendre polynomial roots.
struct GaussRule {
  std::array<double, 32> x{};
  std::array<double, 32> w{};
  GaussRule() {
    const int n = 32;
    for (int i = 0; i < n; ++i) {
      double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = xi;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
        double dx = p1 / dp;
        xi -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      double p0 = 1.0, p1 = xi;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
      x[i] = xi;
      w[i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
    }
  }
};

const GaussRule& gauss32() {
  static const GaussRule rule;
  return rule;
}

void fill_composite(double a, double b, int panels, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  const GaussRule& g = gauss32();
  nodes.clear();
  weights.clear();
  nodes.reserve(static_cast<size_t>(panels) * 32);
  weights.reserve(static_cast<size_t>(panels) * 32);
  double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    double lo = a + p * h;
    double mid = lo + 0.5 * h;
    for (int i = 0; i < 32; ++i) {
      nodes.push_back(mid + 0.5 * h * g.x[i]);
      weights.push_back(0.5 * h * g.w[i]);
    }
  }
}

// the order is pinned by the Mellin pair
// integral y^{s-1} 2 y^{nu/2} K_nu(2 sqrt(y)) dy = Gamma(s) Gamma(s + nu)
// with nu = 2/(3 eps) + 1
double nu_order(const ModelParams& params) {
  return 1.0 + 2.0 / (3.0 * params.epsilon);
}

}  // namespace

RadialQuadrature RadialQuadrature::build(double decay, double power, double tol,
                                         int panels) {
  if (!(decay > 0.0)) throw DomainError("RadialQuadrature: decay must be > 0");
  // peak of r^power e^{-decay r}, then the 1e-18-of-peak cutoff (plus margin)
  double peak = std::max(power, 0.0) / decay;
  double target = (power > 0.0 ? power * std::log(peak) : 0.0) - decay * peak -
                  18.0 * std::log(10.0) - 5.0;
  double lo = std::max(peak, 1e-8);
  double hi = peak + (60.0 + 4.0 * std::max(power, 1.0)) / decay;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double v = (power > 0.0 ? power * std::log(mid) : 0.0) - decay * mid;
    (v > target ? lo : hi) = mid;
  }
  RadialQuadrature q;
  q.r_max = hi;
  q.tol = tol;
  fill_composite(0.0, q.r_max, panels, q.coarse_nodes, q.coarse_weights);
  fill_composite(0.0, q.r_max, 2 * panels, q.nodes, q.weights);
  q.n_nodes = static_cast<int>(q.nodes.size());
  return q;
}

double RadialQuadrature::integrate(const std::function<double(double)>& f) const {
  double fine = 0.0;
  for (size_t i = 0; i < nodes.size(); ++i) fine += weights[i] * f(nodes[i]);
  double coarse = 0.0;
  for (size_t i = 0; i < coarse_nodes.size(); ++i)
    coarse += coarse_weights[i] * f(coarse_nodes[i]);
  double scale = std::max(std::abs(fine), 1e-300);
  if (std::abs(fine - coarse) > tol * scale)
    throw QuadratureError("quadrature failed node-doubling certification");
  return fine;
}

RadialQuadrature unity_quadrature(const ModelParams& params, int n_max,
                                  double tol) {
  double inv3e = 1.0 / (3.0 * params.epsilon);
  double decay = 2.0 * std::sqrt(2.0 * inv3e);
  double power = 2.0 * n_max + 2.0 * inv3e + 2.0;
  return RadialQuadrature::build(decay, power, tol);
}

RadialQuadrature moment_quadrature(const ModelParams& params, int n_max,
                                   double tol) {
  double power = 2.0 * n_max + 2.0 / (3.0 * params.epsilon);
  return RadialQuadrature::build(2.0, power, tol);
}

double ln_weight_h(double x, const ModelParams& params) {
  if (!(x > 0.0)) throw DomainError("weight_h: requires x > 0");
  double eps = params.epsilon;
  double inv3e = 1.0 / (3.0 * eps);
  double t = std::sqrt(2.0 * inv3e * x);
  double nu = nu_order(params);
  double k = bessel_k(nu, 2.0 * t);
  if (k <= 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(4.0) + (2.0 * inv3e + 1.0) * std::log(t) -
         std::log(3.0 * M_PI * eps) - ln_gamma(2.0 + 2.0 * inv3e) + std::log(k);
}

double weight_h(double x, const ModelParams& params) {
  return std::exp(ln_weight_h(x, params));
}

namespace {

// ln g(y) with g(y) = (3 pi eps / 2) Gamma(2 + 2/(3 eps)) h((3 eps / 2) y)
double ln_g(double y, const ModelParams& params) {
  double eps = params.epsilon;
  return std::log(1.5 * M_PI * eps) + ln_gamma(2.0 + 2.0 / (3.0 * eps)) +
         ln_weight_h(1.5 * eps * y, params);
}

}  // namespace

MomentCheck moment_check(int n, const ModelParams& params,
                         const RadialQuadrature& quad) {
  if (n < 1) throw DomainError("moment_check: n must be >= 1");
  // y = v^2 substitution: integral 2 v^{2n-1} g(v^2) dv
  auto f = [&](double v) {
    if (v <= 0.0) return 0.0;
    return 2.0 * std::exp((2.0 * n - 1.0) * std::log(v) + ln_g(v * v, params));
  };
  double computed = quad.integrate(f);
  double expected =
      std::exp(ln_gamma(double(n)) + ln_gamma(n + 2.0 / (3.0 * params.epsilon) + 1.0));
  return {computed, expected, std::abs(computed - expected) / expected};
}

namespace {

// pi/F(n) * integral x^n h(x) dx for n = 0..dim-1, certified per entry.
// The substitution x = r^2 gives 2 pi/F(n) * integral r^{2n+1} h(r^2) dr;
// ln h is precomputed once per node and shared across n.
std::vector<double> unity_diagonals(int dim, const ModelParams& params,
                                    const RadialQuadrature& quad) {
  auto lnh_at = [&](const std::vector<double>& rs) {
    std::vector<double> out(rs.size());
    for (size_t i = 0; i < rs.size(); ++i)
      out[i] = ln_weight_h(rs[i] * rs[i], params);
    return out;
  };
  std::vector<double> lnh_fine = lnh_at(quad.nodes);
  std::vector<double> lnh_coarse = lnh_at(quad.coarse_nodes);

  std::vector<double> diag(dim);
  for (int n = 0; n < dim; ++n) {
    double lnf = ln_big_f(n, params);
    auto sum_grid = [&](const std::vector<double>& rs,
                        const std::vector<double>& ws,
                        const std::vector<double>& lnh) {
      double s = 0.0;
      for (size_t i = 0; i < rs.size(); ++i)
        s += ws[i] *
             std::exp((2.0 * n + 1.0) * std::log(rs[i]) + lnh[i] - lnf);
      return 2.0 * M_PI * s;
    };
    double fine = sum_grid(quad.nodes, quad.weights, lnh_fine);
    double coarse = sum_grid(quad.coarse_nodes, quad.coarse_weights, lnh_coarse);
    if (std::abs(fine - coarse) > quad.tol * std::max(std::abs(fine), 1e-300))
      throw QuadratureError("unity diagonal failed doubling certification");
    diag[n] = fine;
  }
  return diag;
}

}  // namespace

OperatorMatrix resolution_of_unity(int dim, const ModelParams& params,
                                   const RadialQuadrature& quad) {
  if (dim < 1) throw DimensionError("resolution_of_unity: dim must be >= 1");
  std::vector<double> diag = unity_diagonals(dim, params, quad);
  OperatorMatrix m = OperatorMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) m(n, n) = diag[n];
  return m;
}

double cat_measures(CatParity parity, double r, double /*phi*/,
                    const ModelParams& params) {
  if (!(r > 0.0)) throw DomainError("cat_measures: requires r > 0");
  double nc = cat_normalization(parity, Complex(r, 0.0), params);
  return weight_h(r * r, params) * r / (nc * nc);
}

std::vector<double> cat_completeness_diagonals(int dim, const ModelParams& params,
                                               const RadialQuadrature& quad) {
  // |amplitude_n(r)|^2 carries N_parity(r)^2 (0F3 closed form) and the cat
  // measure density carries N_parity(r)^{-2}; both are evaluated numerically
  // so the completeness sum genuinely exercises Eqs. for N_e, N_o.
  auto diag_for = [&](CatParity parity, int n) {
    double lnf = ln_big_f(n, params);
    auto f = [&](double r) {
      double nc = cat_normalization(parity, Complex(r, 0.0), params);
      double amp2 = nc * nc * std::exp(2.0 * n * std::log(r) - lnf);
      return 2.0 * M_PI * amp2 * cat_measures(parity, r, 0.0, params);
    };
    return quad.integrate(f);
  };
  std::vector<double> diag(dim);
  for (int n = 0; n < dim; ++n)
    diag[n] = diag_for(n % 2 == 0 ? CatParity::even : CatParity::odd, n);
  return diag;
}

FockVector reconstruct(const FockVector& state, const RadialQuadrature& quad,
                       const ModelParams& params) {
  std::vector<double> diag = unity_diagonals(state.dim(), params, quad);
  FockVector out = state;
  for (int n = 0; n < state.dim(); ++n) out.amps(n) = state.amps(n) * diag[n];
  return out;
}

}  // namespace qosc
