#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "qosc/analytic.hpp"
#include "qosc/specfun.hpp"
#include "qosc/measure.hpp"
#include "qosc/spectrum.hpp"

using qosc::Complex;
using qosc::EntireFunctionCoeffs;
using qosc::FockVector;
using qosc::GisLabel;
using qosc::ModelParams;

namespace {

FockVector random_state(const ModelParams& p, int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXcd amps(dim);
  for (int n = 0; n < dim; ++n) amps(n) = Complex(u(rng), u(rng));
  amps /= amps.norm();
  return {p, amps};
}

qosc::OperatorMatrix conjugated(const qosc::CoeffMap& op, const ModelParams& p,
                                int dim) {
  // matrix of to_analytic^{-1} . op . to_analytic in the Fock basis
  qosc::OperatorMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    FockVector basis{p, Eigen::VectorXcd::Zero(dim)};
    basis.amps(j) = 1.0;
    EntireFunctionCoeffs c = qosc::to_analytic(basis);
    c.coeffs = op(c.coeffs);
    m.col(j) = qosc::from_analytic(c).amps;
  }
  return m;
}

}  // namespace

TEST_CASE("analytic round trip") {
  ModelParams p(0.1, 0.8);
  FockVector v = random_state(p, 25, 3);
  FockVector back = qosc::from_analytic(qosc::to_analytic(v));
  CHECK((back.amps - v.amps).norm() < 1e-15);

  FockVector vac{p, Eigen::VectorXcd::Zero(5)};
  vac.amps(0) = 1.0;
  EntireFunctionCoeffs c = qosc::to_analytic(vac);
  CHECK(c.coeffs(0) == Complex(1.0));
  for (int n = 1; n < 5; ++n) CHECK(c.coeffs(n) == Complex(0));
}

TEST_CASE("coherent state maps to the 0F1 generating series") {
  ModelParams p(0.1);
  Complex z(1.1, -0.4);
  FockVector v = qosc::coherent({z, 0.0}, p, 40);
  EntireFunctionCoeffs c = qosc::to_analytic(v);
  double a0 = 1.0 / std::sqrt(
      oracle::hyp0f1(2.0 + 2.0 / 0.3, (2.0 / 0.3) * std::norm(z)).real());
  for (int n = 0; n < 20; ++n) {
    Complex want = a0 * std::pow(z, n) /
                   static_cast<double>(oracle::big_f(n, 0.1));
    CHECK(std::abs(c.coeffs(n) - want) < 1e-13);
  }
}

TEST_CASE("analytic operators conjugate to the ladder matrices") {
  for (double alpha : {0.0, 0.6}) {
    ModelParams p(0.1, alpha);
    int dim = 14;
    auto ops = qosc::analytic_operators(dim, p);
    auto lad = qosc::ladder_matrices(dim, p);
    qosc::OperatorMatrix lower = conjugated(ops.lower, p, dim);
    qosc::OperatorMatrix number = conjugated(ops.number, p, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        CHECK(std::abs(lower(i, j) - lad.lower(i, j)) < 1e-12);
        CHECK(std::abs(number(i, j) - lad.number(i, j)) < 1e-12);
      }
    // raise drops the top coefficient; compare below the edge only
    qosc::OperatorMatrix raise = conjugated(ops.raise, p, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim - 1; ++j)
        CHECK(std::abs(raise(i, j) - lad.raise(i, j)) < 1e-12);
  }
}

TEST_CASE("commutator of coefficient maps realizes 1 + 3 eps (N+1)") {
  ModelParams p(0.1);
  int dim = 12;
  auto ops = qosc::analytic_operators(dim, p);
  Eigen::VectorXcd c = random_state(p, dim, 5).amps;
  Eigen::VectorXcd comm = ops.lower(ops.raise(c)) - ops.raise(ops.lower(c));
  for (int n = 0; n < dim - 2; ++n) {
    Complex want = (1.0 + 3.0 * p.epsilon * (n + 1.0)) * c(n);
    CHECK(std::abs(comm(n) - want) < 1e-13);
  }
  // raise on the constant function is the monomial z
  Eigen::VectorXcd one = Eigen::VectorXcd::Zero(dim);
  one(0) = 1.0;
  Eigen::VectorXcd raised = ops.raise(one);
  CHECK(raised(1) == Complex(1.0));
  CHECK(raised(0) == Complex(0.0));
  CHECK_THROWS_AS(qosc::analytic_operators(2, p), qosc::DimensionError);
}

TEST_CASE("lower tends to d/dz in the small-eps regime") {
  ModelParams p(1e-9);
  auto ops = qosc::analytic_operators(8, p);
  Eigen::VectorXcd c = Eigen::VectorXcd::Ones(8);
  Eigen::VectorXcd lowered = ops.lower(c);
  for (int n = 0; n + 1 < 8; ++n)
    CHECK(std::abs(lowered(n) - Complex(n + 1.0)) < 1e-6);
}

TEST_CASE("kummer solution: ODE residual, branches, Fock-space match") {
  ModelParams p(0.1, 0.5);
  for (const GisLabel& label :
       {GisLabel{Complex(0.5), Complex(1.0)}, GisLabel{Complex(2.0, 1.0), Complex(1.0, 0.5)},
        GisLabel{Complex(0.5), Complex(0.0)}}) {
    EntireFunctionCoeffs k = qosc::kummer_gis(label, p, 60);
    CAPTURE(label.lambda.real());
    CHECK(qosc::verify_ode(k, label, p) < 1e-10);
    EntireFunctionCoeffs k2 = qosc::kummer_gis(label, p, 60, -1);
    CHECK((k.coeffs - k2.coeffs).norm() < 1e-10);

    FockVector fock = qosc::from_analytic(k);
    fock.amps /= fock.amps.norm();
    fock.amps *= std::conj(fock.amps(0)) / std::abs(fock.amps(0));
    FockVector rec = qosc::gis_recurrence(label, p, 60);
    CHECK((fock.amps - rec.amps).norm() < 1e-10);
  }
  CHECK_THROWS_AS(qosc::kummer_gis({Complex(1.0), Complex(1.0)}, p, 20),
                  qosc::DegenerateLabelError);
  CHECK_THROWS_AS(qosc::kummer_gis({Complex(-1.0), Complex(1.0)}, p, 20),
                  qosc::NoSolutionError);
}

TEST_CASE("verify_ode: positive on the GK state, discriminates noise") {
  ModelParams p(0.1);
  Complex z(1.0, 0.4);
  GisLabel gk{Complex(1.0), z};
  EntireFunctionCoeffs c = qosc::to_analytic(qosc::coherent({z, 0.0}, p, 40));
  CHECK(qosc::verify_ode(c, gk, p) < 1e-10);

  EntireFunctionCoeffs noise{p, random_state(p, 40, 9).amps};
  CHECK(qosc::verify_ode(noise, gk, p) > 1e-3);
}

TEST_CASE("gk analytic form matches the lambda = 1 kernel series") {
  ModelParams p(0.1);
  Complex zp(0.9, 0.3);
  EntireFunctionCoeffs g = qosc::gk_analytic(zp, p, 25);
  for (int n = 0; n < 25; ++n) {
    Complex want = std::pow((2.0 / 0.3) * zp, n) /
                   std::exp(qosc::ln_gamma(n + 1.0)) /
                   static_cast<double>(oracle::pochhammer(oracle::big(2.0 + 2.0 / 0.3), n));
    CHECK(std::abs(g.coeffs(n) - want) < 1e-12 * std::max(std::abs(want), 1e-12));
  }
}

TEST_CASE("harmonic limit proxy approaches the gaussian expansion") {
  GisLabel label{Complex(0.5), Complex(1.0)};
  EntireFunctionCoeffs proxy = qosc::harmonic_limit_analytic(label, label.z, 1e-6, 12);
  Eigen::VectorXcd lim = qosc::gaussian_limit_coeffs(label.lambda, label.z, 12);
  for (int n = 0; n < 10; ++n)
    CHECK(std::abs(proxy.coeffs(n) - lim(n)) /
              std::max(1.0, std::abs(lim(n))) < 1e-4);

  // explicit expansion coefficients of the gaussian exponent
  Complex a = 2.0 * label.z / (1.0 + label.lambda);
  Complex b = (label.lambda - 1.0) / (label.lambda + 1.0);
  CHECK(std::abs(lim(1) - a) < 1e-15);
  CHECK(std::abs(lim(2) - (a * a / 2.0 + b / 2.0)) < 1e-15);

  // lambda = 1, z = 0 is the constant function
  EntireFunctionCoeffs flat =
      qosc::harmonic_limit_analytic({Complex(1.0), Complex(0.0)}, Complex(0.0), 1e-6, 6);
  CHECK(flat.coeffs(0) == Complex(1.0));
  for (int n = 1; n < 6; ++n) CHECK(std::abs(flat.coeffs(n)) < 1e-15);

  CHECK_THROWS_AS(qosc::harmonic_limit_analytic(label, label.z, 0.01, 8),
                  qosc::DomainError);
}

TEST_CASE("scalar product through the measure matches the Fock inner product") {
  ModelParams p(0.1);
  FockVector f = random_state(p, 10, 21);
  FockVector g = random_state(p, 10, 22);
  qosc::RadialQuadrature quad = qosc::unity_quadrature(p, 9);
  qosc::OperatorMatrix unity = qosc::resolution_of_unity(10, p, quad);
  EntireFunctionCoeffs cf = qosc::to_analytic(f);
  EntireFunctionCoeffs cg = qosc::to_analytic(g);
  // <f|g> = sum_n conj(cf_n) cg_n F(n), with F(n) carried by the quadrature
  Complex via_measure = 0.0;
  for (int n = 0; n < 10; ++n)
    via_measure += std::conj(cf.coeffs(n)) * cg.coeffs(n) *
                   qosc::big_f(n, p) * unity(n, n);
  CHECK(std::abs(via_measure - qosc::inner(f, g)) < 1e-6);
}
