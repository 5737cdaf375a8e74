#include "ssdg/functionals.hpp"

#include "ssdg/errors.hpp"

namespace ssdg {

namespace {

ArrayXb density_mask(const ArrayXr& rho, Real floor) {
  const Real rho_max = rho.maxCoeff();
  if (rho_max <= 0.0) throw EmptySupport("field has identically zero density");
  return rho > floor * rho_max;
}

}  // namespace

ArrayXc omega_pointwise(const ArrayXc& psi, const ArrayXc& dpsi,
                        const ArrayXc& d2psi, const ArrayXb& valid,
                        const NonlinearCoeffs& coeffs) {
  const Index n = psi.size();
  const ArrayXc one = ArrayXc::Constant(n, Complex(1.0, 0.0));
  const ArrayXc safe_psi = valid.select(psi, one);

  const ArrayXc log1 = dpsi / safe_psi;    // psi'/psi
  const ArrayXc log2 = d2psi / safe_psi;   // psi''/psi
  const ArrayXc log1_sq = log1.square();

  const Array5r& l = coeffs.lambda;
  ArrayXr real_part = ArrayXr::Zero(n);
  if (l[0] != 0.0) real_part += l[0] * log2.real();
  if (l[1] != 0.0) real_part += l[1] * log2.imag();
  if (l[2] != 0.0) real_part += l[2] * log1_sq.real();
  if (l[3] != 0.0) real_part += l[3] * log1_sq.imag();
  if (l[4] != 0.0) real_part += l[4] * log1.abs2();
  real_part *= coeffs.Dtilde;

  ArrayXc omega = real_part.cast<Complex>();
  if (coeffs.D != 0.0) {
    // rho''/rho = 2 Re(psi'' conj(psi))/rho + 2 |psi'|^2/rho
    const ArrayXr rho = psi.abs2();
    const ArrayXr safe_rho = valid.select(rho, ArrayXr::Ones(n));
    const ArrayXr lap_rho_over_rho =
        2.0 * ((d2psi * psi.conjugate()).real() + dpsi.abs2()) / safe_rho;
    omega += kImaginaryUnit * (0.5 * coeffs.D * lap_rho_over_rho).cast<Complex>();
  }
  return valid.select(omega, ArrayXc::Zero(n));
}

FunctionalValues eval_functionals(const ComplexField& field, Real floor,
                                  DerivScheme scheme) {
  const Index n = field.grid.n;
  const ArrayXc& psi = field.values;
  const ArrayXr rho = psi.abs2();
  const ArrayXb valid = density_mask(rho, floor);

  const ArrayXc one = ArrayXc::Constant(n, Complex(1.0, 0.0));
  const ArrayXc safe_psi = valid.select(psi, one);
  const ArrayXr zero = ArrayXr::Zero(n);

  const ArrayXc dpsi = derivative(psi, field.grid, 1, scheme);
  const ArrayXc d2psi = derivative(psi, field.grid, 2, scheme);
  const ArrayXc log1 = dpsi / safe_psi;
  const ArrayXc log2 = d2psi / safe_psi;
  const ArrayXc log1_sq = log1.square();

  FunctionalValues out;
  out.valid_mask = valid;
  out.lambda_vals[0] = valid.select(log2.real(), zero);
  out.lambda_vals[1] = valid.select(log2.imag(), zero);
  out.lambda_vals[2] = valid.select(log1_sq.real(), zero);
  out.lambda_vals[3] = valid.select(log1_sq.imag(), zero);
  out.lambda_vals[4] = valid.select(log1.abs2(), zero);

  const ArrayXr j = (psi.conjugate() * dpsi).imag();
  const ArrayXr safe_rho = valid.select(rho, ArrayXr::Ones(n));
  const ArrayXr drho = derivative(rho, field.grid, 1, scheme);
  const ArrayXr d2rho = derivative(rho, field.grid, 2, scheme);
  const ArrayXr dj = derivative(j, field.grid, 1, scheme);

  out.r_vals[0] = valid.select(dj / safe_rho, zero);
  out.r_vals[1] = valid.select(d2rho / safe_rho, zero);
  out.r_vals[2] = valid.select(j.square() / safe_rho.square(), zero);
  out.r_vals[3] = valid.select(j * drho / safe_rho.square(), zero);
  out.r_vals[4] = valid.select(drho.square() / safe_rho.square(), zero);
  return out;
}

ArrayXc eval_omega(const ComplexField& field, const NonlinearCoeffs& coeffs,
                   Real floor, DerivScheme scheme) {
  const ArrayXr rho = field.values.abs2();
  const ArrayXb valid = density_mask(rho, floor);
  const ArrayXc dpsi = derivative(field.values, field.grid, 1, scheme);
  const ArrayXc d2psi = derivative(field.values, field.grid, 2, scheme);
  return omega_pointwise(field.values, dpsi, d2psi, valid, coeffs);
}

ArrayXc eval_omega_psi(const ComplexField& field, const NonlinearCoeffs& coeffs,
                       Real floor, DerivScheme scheme) {
  return eval_omega(field, coeffs, floor, scheme) * field.values;
}

}  // namespace ssdg
