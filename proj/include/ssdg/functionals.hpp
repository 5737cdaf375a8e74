// Pointwise evaluation of the ten nonlinear functionals and assembly of the
// full nonlinear term Omega{psi} = R{psi} + i*I{psi}.
//
// The lambda column is built from log-derivatives of psi:
//   L1 = Re(psi''/psi)   L2 = Im(psi''/psi)   L3 = Re((psi'/psi)^2)
//   L4 = Im((psi'/psi)^2)   L5 = |psi'|^2/|psi|^2
// The R column is built from the observables rho = |psi|^2 and
// j = Im(conj(psi) psi'), each differentiated on the grid:
//   R1 = j'/rho   R2 = rho''/rho   R3 = j^2/rho^2   R4 = j*rho'/rho^2
//   R5 = (rho')^2/rho^2
// The two columns are independent discretizations of the same analytic
// quantities; coefficient sets related by the conversion table must agree
// up to discretization error.
#pragma once

#include <array>

#include "ssdg/coeffs.hpp"
#include "ssdg/field.hpp"
#include "ssdg/types.hpp"

namespace ssdg {

// Relative density floor below which the nonlinear term is defined to vanish
// (the product Omega{psi}*psi is set to zero, matching the node convention).
inline constexpr Real kDefaultDensityFloor = 1e-12;

struct FunctionalValues {
  std::array<ArrayXr, 5> lambda_vals;
  std::array<ArrayXr, 5> r_vals;
  ArrayXb valid_mask;  // rho > floor * max(rho); masked entries carry zeros
};

// Throws EmptySupport when rho is identically zero.
FunctionalValues eval_functionals(const ComplexField& field, Real floor,
                                  DerivScheme scheme = DerivScheme::CentralFD2);

// Omega = Dtilde * sum_j lambda_j L_j + i * (D/2) * rho''/rho, evaluated from
// psi and its derivatives (the rho derivatives expanded through psi', psi'').
// Entries below the floor are zero. Throws EmptySupport when rho == 0.
ArrayXc eval_omega(const ComplexField& field, const NonlinearCoeffs& coeffs,
                   Real floor, DerivScheme scheme = DerivScheme::CentralFD2);

// (R + iI) * psi with the same masking; zero at and below the floor.
ArrayXc eval_omega_psi(const ComplexField& field, const NonlinearCoeffs& coeffs,
                       Real floor, DerivScheme scheme = DerivScheme::CentralFD2);

// Pointwise Omega given psi and its first two derivatives, zero where the
// mask is false. Lets callers with non-grid derivative data (ghost-point
// sampling, analytic derivatives) share the assembly.
ArrayXc omega_pointwise(const ArrayXc& psi, const ArrayXc& dpsi,
                        const ArrayXc& d2psi, const ArrayXb& valid,
                        const NonlinearCoeffs& coeffs);

}  // namespace ssdg
