// Coefficient algebra for the homogeneous nonlinear Schrodinger family:
// the lambda/c parametrizations of the nonlinear functional, the reduced
// parameters (sigma, xi, eta, mu, nu), soliton-regime classification,
// exponents, the dispersion relation, and the gauge invariants of the
// one-parameter gradient-squared functional.
#pragma once

#include <optional>

#include "ssdg/types.hpp"

namespace ssdg {

// One equation instance in the lambda parametrization. lambda[j-1] stores
// lambda_j. D is the antihermitian diffusion strength (>= 0), Dtilde the
// overall real-part multiplier.
struct NonlinearCoeffs {
  Array5r lambda = Array5r::Zero();
  Real D = 0.0;
  Real Dtilde = 0.0;
};

// Same instance in the density/current parametrization. c[j-1] stores c_j.
struct CCoeffs {
  Array5r c = Array5r::Zero();
};

// Reduced coefficients of the amplitude equation.
//   sigma = 2*Dt*l1, xi = 2*Dt*(l3+l5), eta = 2*Dt*(l5-l3-l1),
//   mu = 2*Dt*(l2+l4), nu = 2*Dt*l2
struct DerivedParams {
  Real sigma = 0.0;
  Real xi = 0.0;
  Real eta = 0.0;
  Real mu = 0.0;
  Real nu = 0.0;
};

// Parameter bundle for a travelling-wave solution with linear phase.
// Exactly one of gamma_tilde / s is set, matching sign(gamma_sq - kappa^2).
struct SolitonParams {
  Real k = 0.0;
  Real omega = 0.0;
  Real gamma_sq = 0.0;
  Real kappa = 0.0;
  Real alpha = 1.0;
  Real delta = 0.0;
  std::optional<Real> gamma_tilde;  // oscillation rate sqrt(gamma_sq - kappa^2)
  std::optional<Real> s;            // growth rate sqrt(kappa^2 - gamma_sq)
};

// Values of the five invariants of the nonlinear gauge transformation
// family, as reported for the gradient-squared functional.
struct GaugeInvariants {
  Real tau1 = 0.0;
  Real tau2 = 0.0;
  Real tau3 = 0.0;
  Real tau4 = 0.0;
  Real iota5 = 0.0;
};

enum class FlsBranch { WeakBranch, StrongBranch, Inadmissible };

enum class Regime {
  ExponentialSoliton,
  NonNormalizable,
  FiniteLengthSoliton,
  PlaneWaveLimit,
};

// Conversion table between the two parametrizations. Exact inverses of each
// other (all coefficients are dyadic rationals).
CCoeffs lambda_to_c(const NonlinearCoeffs& coeffs);
Array5r c_to_lambda(const CCoeffs& coeffs);

// Assembles a lambda-form instance from c-form weights plus the diffusion
// constants (which are shared between the parametrizations).
NonlinearCoeffs coeffs_from_c(const CCoeffs& c, Real D, Real Dtilde);

DerivedParams derive_params(const NonlinearCoeffs& coeffs);

// Galilean invariance holds iff mu = 0 and eta = 0 (equivalently
// c1 + c4 = 0 and c3 = 0).
bool check_galilean(const DerivedParams& p);

// Existence window for the finite-length soliton: weak branch 0 < xi < 1-sigma,
// strong branch 0 > xi > 1-sigma (which forces sigma > 1).
FlsBranch fls_admissible(Real sigma, Real xi);

struct Exponents {
  Real alpha;  // (1-sigma)/(1-sigma-xi)
  Real delta;  // xi/(1-sigma-xi) = alpha - 1
};

// Throws DegenerateExponent when 1 - sigma - xi = 0.
Exponents exponents(Real sigma, Real xi);

// omega = k^2(1+eta)/2 + gamma_sq*(1-sigma)^2 / (2*(1-sigma-xi)).
// Throws DegenerateExponent when 1 - sigma - xi = 0.
Real dispersion_omega_from_gamma_sq(Real k, Real gamma_sq, const DerivedParams& p);

// Same with gamma_sq = gamma^2 (the oscillatory case).
Real dispersion_omega(Real k, Real gamma, const DerivedParams& p);

// Case split on (gamma_sq, kappa): gamma_sq < 0 exponential soliton;
// gamma_sq > kappa^2 finite-length soliton; gamma_sq = 0 and kappa = 0 plane
// wave; everything else (including the boundaries gamma_sq = kappa^2 != 0)
// non-normalizable.
Regime classify_regime(Real gamma_sq, Real kappa);

// Full parameter bundle for given (k, gamma_sq) and derived params.
// Throws DegenerateExponent when 1 - sigma - xi = 0.
SolitonParams make_soliton_params(Real k, Real gamma_sq, const DerivedParams& p);

// Invariants of the one-parameter functional (xi/8)(grad rho / rho)^2:
// tau1 = tau4 = 0, tau2 = 1/8, tau3 = -1, iota5 = -xi/16.
// Throws NotSimplFamily unless 0 < xi < 1.
GaugeInvariants ngt_invariants_simpl(Real xi);

// Checks that the instance actually lies in the one-parameter family
// (sigma = nu = mu = eta = 0, 0 < xi < 1) before reporting the invariants.
GaugeInvariants ngt_invariants_simpl(const NonlinearCoeffs& coeffs);

// Convenience constructor for the family (xi/8)(grad rho / rho)^2, realized
// as lambda3 = lambda5 = 1, Dtilde = xi/4. Throws NotSimplFamily unless
// 0 < xi < 1.
NonlinearCoeffs simpl_coeffs(Real xi);

}  // namespace ssdg
