#include <doctest.h>

#include <random>

#include "ssdg/errors.hpp"
#include "ssdg/functionals.hpp"
#include "test_support.hpp"

using namespace ssdg;

namespace {

ComplexField plane_wave_field(const Grid1D& g, Real k) {
  ComplexField field;
  field.grid = g;
  field.values.resize(g.n);
  const ArrayXr x = g.points();
  for (Index i = 0; i < g.n; ++i) field.values[i] = std::polar(1.0, k * x[i]);
  return field;
}

}  // namespace

TEST_CASE("functionals of a plane wave are pointwise constants") {
  const Grid1D g = make_grid(0.0, 2.0 * kPi, 256);
  const ComplexField field = plane_wave_field(g, 3.0);
  const FunctionalValues vals = eval_functionals(field, 0.0, DerivScheme::Spectral);

  CHECK(vals.valid_mask.count() == g.n);
  const Real expected_lambda[5] = {-9.0, 0.0, -9.0, 0.0, 9.0};
  const Real expected_r[5] = {0.0, 0.0, 9.0, 0.0, 0.0};
  for (int j = 0; j < 5; ++j) {
    CHECK((vals.lambda_vals[j] - expected_lambda[j]).abs().maxCoeff() < 1e-9);
    CHECK((vals.r_vals[j] - expected_r[j]).abs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("gaussian log-derivative checks at x = 1") {
  // psi = exp(-x^2/2): L5 = x^2, R5 = 4 x^2
  const Grid1D g = make_grid(-8.0, 8.0, 4096);
  ComplexField field;
  field.grid = g;
  const ArrayXr x = g.points();
  field.values = (-0.5 * x.square()).exp().cast<Complex>();
  const FunctionalValues vals = eval_functionals(field, 1e-8);

  // nearest grid index to x = 1
  Index idx = 0;
  (x - 1.0).abs().minCoeff(&idx);
  CHECK(vals.lambda_vals[4][idx] == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(vals.r_vals[4][idx] == doctest::Approx(4.0).epsilon(1e-5));
}

TEST_CASE("lambda and c columns agree for converted coefficient pairs") {
  std::mt19937 rng(19);
  const Grid1D g = make_grid(0.0, 2.0 * kPi, 512);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexField field = test::random_smooth_field(rng, g);
    const FunctionalValues vals = eval_functionals(field, 0.0, DerivScheme::Spectral);
    for (int set = 0; set < 5; ++set) {
      const NonlinearCoeffs coeffs = test::random_coeffs(rng);
      const CCoeffs c = lambda_to_c(coeffs);
      ArrayXr lhs = ArrayXr::Zero(g.n);
      ArrayXr rhs = ArrayXr::Zero(g.n);
      Real scale = 0.0;
      for (int j = 0; j < 5; ++j) {
        lhs += coeffs.lambda[j] * vals.lambda_vals[j];
        rhs += c.c[j] * vals.r_vals[j];
        scale = std::max({scale, vals.lambda_vals[j].abs().maxCoeff(),
                          vals.r_vals[j].abs().maxCoeff()});
      }
      CHECK((lhs - rhs).abs().maxCoeff() <= 1e-8 * scale);
    }
  }
}

TEST_CASE("lambda/c columns agree to discretization error with differences") {
  std::mt19937 rng(29);
  const Grid1D g = make_grid(0.0, 2.0 * kPi, 1024);
  const ComplexField field = test::random_smooth_field(rng, g);
  const FunctionalValues vals = eval_functionals(field, 0.0, DerivScheme::CentralFD2);
  const NonlinearCoeffs coeffs = test::random_coeffs(rng);
  const CCoeffs c = lambda_to_c(coeffs);
  ArrayXr lhs = ArrayXr::Zero(g.n);
  ArrayXr rhs = ArrayXr::Zero(g.n);
  for (int j = 0; j < 5; ++j) {
    lhs += coeffs.lambda[j] * vals.lambda_vals[j];
    rhs += c.c[j] * vals.r_vals[j];
  }
  CHECK((lhs - rhs).abs().maxCoeff() < 50.0 * g.dx * g.dx);
}

TEST_CASE("omega psi vanishes for the gradient-squared functional on plane waves") {
  const Grid1D g = make_grid(0.0, 2.0 * kPi, 256);
  const ComplexField field = plane_wave_field(g, 3.0);
  const NonlinearCoeffs coeffs = simpl_coeffs(0.5);
  const ArrayXc w = eval_omega_psi(field, coeffs, kDefaultDensityFloor,
                                   DerivScheme::Spectral);
  CHECK(w.abs().maxCoeff() < 1e-9);
}

TEST_CASE("omega psi vanishes in the linear limit") {
  std::mt19937 rng(31);
  const Grid1D g = make_grid(-5.0, 5.0, 128);
  const ComplexField field = test::random_smooth_field(rng, g);
  NonlinearCoeffs coeffs;
  coeffs.lambda << 1, 2, 3, 4, 5;
  coeffs.Dtilde = 0.0;
  coeffs.D = 0.0;
  const ArrayXc w = eval_omega_psi(field, coeffs, kDefaultDensityFloor);
  CHECK(w.abs().maxCoeff() == 0.0);
}

TEST_CASE("hermitian part is real for all inputs") {
  std::mt19937 rng(37);
  const Grid1D g = make_grid(-5.0, 5.0, 256);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexField field = test::random_smooth_field(rng, g);
    NonlinearCoeffs coeffs = test::random_coeffs(rng);
    coeffs.D = 0.0;  // no antihermitian part
    const ArrayXc w = eval_omega(field, coeffs, kDefaultDensityFloor);
    CHECK(w.imag().abs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("antihermitian part matches D * lap(rho) / (2 rho)") {
  std::mt19937 rng(43);
  const Grid1D g = make_grid(0.0, 2.0 * kPi, 512);
  const ComplexField field = test::random_smooth_field(rng, g);
  NonlinearCoeffs coeffs;
  coeffs.D = 0.8;
  const ArrayXc w = eval_omega(field, coeffs, 0.0, DerivScheme::Spectral);
  const ArrayXr rho = field.values.abs2();
  const ArrayXr lap_rho = derivative(rho, g, 2, DerivScheme::Spectral);
  CHECK((w.imag() - 0.5 * 0.8 * lap_rho / rho).abs().maxCoeff() < 1e-7);
  CHECK(w.real().abs().maxCoeff() == 0.0);  // Dtilde = 0
}

TEST_CASE("galilean-family omega matches its closed functional form") {
  // For mu = eta = 0 the real part reduces to
  //   (1/2) [ sigma Re(psi''/psi) + nu Im div(psi'/psi)
  //           + xi (Re psi'/psi)^2 + sigma (Im psi'/psi)^2 ]
  std::mt19937 rng(47);
  const Grid1D g = make_grid(0.0, 2.0 * kPi, 512);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexField field = test::random_smooth_field(rng, g);
    const NonlinearCoeffs coeffs = test::random_galilean_coeffs(rng);
    const DerivedParams p = derive_params(coeffs);

    const ArrayXc w = eval_omega(field, coeffs, 0.0, DerivScheme::Spectral);

    const ArrayXc dpsi = derivative(field.values, g, 1, DerivScheme::Spectral);
    const ArrayXc d2psi = derivative(field.values, g, 2, DerivScheme::Spectral);
    const ArrayXc log1 = dpsi / field.values;
    const ArrayXc log2 = d2psi / field.values;
    const ArrayXc div_log1 = log2 - log1.square();
    const ArrayXr expected =
        0.5 * (p.sigma * log2.real() + p.nu * div_log1.imag() +
               p.xi * log1.real().square() + p.sigma * log1.imag().square());
    const Real scale = expected.abs().maxCoeff() + 1.0;
    CHECK((w.real() - expected).abs().maxCoeff() < 1e-9 * scale);
  }
}

TEST_CASE("empty support is rejected") {
  const Grid1D g = make_grid(-1.0, 1.0, 64);
  ComplexField field;
  field.grid = g;
  field.values = ArrayXc::Zero(g.n);
  CHECK_THROWS_AS(eval_functionals(field, 1e-12), EmptySupport);
  CHECK_THROWS_AS(eval_omega_psi(field, simpl_coeffs(0.5), 1e-12), EmptySupport);
}

TEST_CASE("mask zeroes points below the density floor") {
  const Grid1D g = make_grid(-4.0, 4.0, 128);
  ComplexField field;
  field.grid = g;
  field.values = ArrayXc::Zero(g.n);
  // a narrow box of support in the middle
  for (Index i = g.n / 4; i < 3 * g.n / 4; ++i) field.values[i] = Complex(1.0, 0.0);
  const FunctionalValues vals = eval_functionals(field, 1e-12);
  CHECK(vals.valid_mask.count() == g.n / 2);
  for (Index i = 0; i < g.n / 4; ++i) {
    for (int j = 0; j < 5; ++j) {
      CHECK(vals.lambda_vals[j][i] == 0.0);
      CHECK(vals.r_vals[j][i] == 0.0);
    }
  }
}
