#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "qosc/measure.hpp"
#include "qosc/specfun.hpp"
#include "qosc/spectrum.hpp"
#include "qosc/states.hpp"

using qosc::Complex;
using qosc::ModelParams;
using qosc::RadialQuadrature;

TEST_CASE("radial quadrature on closed-form integrals") {
  // integral_0^inf r^3 e^{-2r} dr = 3!/2^4
  RadialQuadrature q = RadialQuadrature::build(2.0, 3.0);
  double got = q.integrate([](double r) { return r * r * r * std::exp(-2.0 * r); });
  CHECK(std::abs(got - 6.0 / 16.0) < 1e-12);

  RadialQuadrature q2 = RadialQuadrature::build(1.0, 12.5);
  double got2 = q2.integrate(
      [](double r) { return std::exp(12.5 * std::log(r) - r); });
  double want2 = std::exp(qosc::ln_gamma(13.5));
  CHECK(std::abs(got2 - want2) < 1e-10 * want2);

  CHECK_THROWS_AS(RadialQuadrature::build(0.0, 3.0), qosc::DomainError);
}

TEST_CASE("doubling certification rejects under-resolved integrands") {
  RadialQuadrature q = RadialQuadrature::build(2.0, 3.0, 1e-12, 4);
  CHECK_THROWS_AS(
      q.integrate([](double r) { return std::cos(300.0 * r * r); }),
      qosc::QuadratureError);
}

TEST_CASE("weight h: positive, integrable, oracle-checked order") {
  ModelParams p(0.1);
  for (double x : {0.01, 0.5, 3.0, 20.0}) {
    double h = qosc::weight_h(x, p);
    CHECK(h > 0.0);
    CHECK(std::isfinite(h));
    // independent assembly from the oracle Bessel K
    double inv3e = 1.0 / 0.3;
    double t = std::sqrt(2.0 * inv3e * x);
    double want = 4.0 * std::pow(t, 2.0 * inv3e + 1.0) /
                  (3.0 * M_PI * 0.1 *
                   std::exp(qosc::ln_gamma(2.0 + 2.0 * inv3e))) *
                  oracle::bessel_k(1.0 + 2.0 * inv3e, 2.0 * t);
    CHECK(std::abs(h - want) < 1e-9 * want);
  }
  CHECK_THROWS_AS(qosc::weight_h(0.0, p), qosc::DomainError);
}

TEST_CASE("mellin moments across eps") {
  for (double eps : {0.05, 0.1, 0.3}) {
    ModelParams p(eps);
    RadialQuadrature quad = qosc::moment_quadrature(p, 20);
    for (int n = 1; n <= 20; ++n) {
      auto check = qosc::moment_check(n, p, quad);
      CAPTURE(eps);
      CAPTURE(n);
      CHECK(check.rel_err < 1e-10);
    }
  }
  CHECK_THROWS_AS(
      qosc::moment_check(0, ModelParams(0.1), qosc::moment_quadrature(ModelParams(0.1), 5)),
      qosc::DomainError);
}

TEST_CASE("resolution of unity") {
  for (double eps : {0.1, 0.3}) {
    ModelParams p(eps);
    int dim = 14;
    RadialQuadrature quad = qosc::unity_quadrature(p, dim - 1);
    qosc::OperatorMatrix m = qosc::resolution_of_unity(dim, p, quad);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        if (i == j)
          CHECK(std::abs(m(i, i) - 1.0) < 1e-8);
        else
          CHECK(m(i, j) == Complex(0));
      }
  }
}

TEST_CASE("reconstruction through the measure is the identity") {
  ModelParams p(0.1);
  qosc::FockVector v = qosc::coherent({Complex(1.0, 0.5), 0.0}, p, 28);
  RadialQuadrature quad = qosc::unity_quadrature(p, 27);
  qosc::FockVector back = qosc::reconstruct(v, quad, p);
  CHECK((back.amps - v.amps).norm() < 1e-8);
}

TEST_CASE("cat measures and completeness") {
  ModelParams p(0.1);
  for (double r : {0.3, 1.0, 2.0}) {
    double de = qosc::cat_measures(qosc::CatParity::even, r, 0.4, p);
    double dodd = qosc::cat_measures(qosc::CatParity::odd, r, 1.1, p);
    CHECK(de > 0.0);
    CHECK(dodd > 0.0);
    double ne = qosc::cat_normalization(qosc::CatParity::even, Complex(r), p);
    CHECK(std::abs(de - qosc::weight_h(r * r, p) * r / (ne * ne)) < 1e-14 * de);
  }
  CHECK_THROWS_AS(qosc::cat_measures(qosc::CatParity::even, 0.0, 0.0, p),
                  qosc::DomainError);

  int dim = 10;
  RadialQuadrature quad = qosc::unity_quadrature(p, dim - 1);
  auto diag = qosc::cat_completeness_diagonals(dim, p, quad);
  REQUIRE(int(diag.size()) == dim);
  for (int n = 0; n < dim; ++n) {
    CAPTURE(n);
    CHECK(std::abs(diag[n] - 1.0) < 1e-6);
  }
}
