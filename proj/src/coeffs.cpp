#include "ssdg/coeffs.hpp"

#include <cmath>

#include "ssdg/errors.hpp"

namespace ssdg {

CCoeffs lambda_to_c(const NonlinearCoeffs& coeffs) {
  const Array5r& l = coeffs.lambda;
  CCoeffs out;
  out.c[0] = l[1];
  out.c[1] = 0.5 * l[0];
  out.c[2] = l[4] - l[0] - l[2];
  out.c[3] = l[3];
  out.c[4] = 0.25 * (l[4] + l[2] - l[0]);
  return out;
}

Array5r c_to_lambda(const CCoeffs& coeffs) {
  const Array5r& c = coeffs.c;
  Array5r l;
  l[0] = 2.0 * c[1];
  l[1] = c[0];
  l[2] = 2.0 * c[4] - 0.5 * c[2];
  l[3] = c[3];
  l[4] = 2.0 * c[1] + 2.0 * c[4] + 0.5 * c[2];
  return l;
}

NonlinearCoeffs coeffs_from_c(const CCoeffs& c, Real D, Real Dtilde) {
  NonlinearCoeffs out;
  out.lambda = c_to_lambda(c);
  out.D = D;
  out.Dtilde = Dtilde;
  return out;
}

DerivedParams derive_params(const NonlinearCoeffs& coeffs) {
  const Array5r& l = coeffs.lambda;
  const Real two_dt = 2.0 * coeffs.Dtilde;
  DerivedParams p;
  p.sigma = two_dt * l[0];
  p.xi = two_dt * (l[2] + l[4]);
  p.eta = two_dt * (l[4] - l[2] - l[0]);
  p.mu = two_dt * (l[1] + l[3]);
  p.nu = two_dt * l[1];
  return p;
}

bool check_galilean(const DerivedParams& p) { return p.mu == 0.0 && p.eta == 0.0; }

FlsBranch fls_admissible(Real sigma, Real xi) {
  if (xi > 0.0 && xi < 1.0 - sigma) return FlsBranch::WeakBranch;
  if (xi < 0.0 && xi > 1.0 - sigma) return FlsBranch::StrongBranch;
  return FlsBranch::Inadmissible;
}

Exponents exponents(Real sigma, Real xi) {
  const Real denom = 1.0 - sigma - xi;
  if (denom == 0.0) {
    throw DegenerateExponent("exponent substitution undefined: 1 - sigma - xi = 0");
  }
  return {(1.0 - sigma) / denom, xi / denom};
}

Real dispersion_omega_from_gamma_sq(Real k, Real gamma_sq, const DerivedParams& p) {
  const Real denom = 1.0 - p.sigma - p.xi;
  if (denom == 0.0) {
    throw DegenerateExponent("dispersion relation undefined: 1 - sigma - xi = 0");
  }
  const Real one_minus_sigma = 1.0 - p.sigma;
  return 0.5 * k * k * (1.0 + p.eta) +
         0.5 * gamma_sq * one_minus_sigma * one_minus_sigma / denom;
}

Real dispersion_omega(Real k, Real gamma, const DerivedParams& p) {
  return dispersion_omega_from_gamma_sq(k, gamma * gamma, p);
}

Regime classify_regime(Real gamma_sq, Real kappa) {
  const Real kappa_sq = kappa * kappa;
  if (gamma_sq < 0.0) return Regime::ExponentialSoliton;
  if (gamma_sq > kappa_sq) return Regime::FiniteLengthSoliton;
  if (gamma_sq == 0.0 && kappa == 0.0) return Regime::PlaneWaveLimit;
  return Regime::NonNormalizable;
}

SolitonParams make_soliton_params(Real k, Real gamma_sq, const DerivedParams& p) {
  const Exponents e = exponents(p.sigma, p.xi);
  SolitonParams sp;
  sp.k = k;
  sp.gamma_sq = gamma_sq;
  sp.kappa = 2.0 * p.mu * k / (1.0 - p.sigma);
  sp.alpha = e.alpha;
  sp.delta = e.delta;
  sp.omega = dispersion_omega_from_gamma_sq(k, gamma_sq, p);
  const Real osc_sq = gamma_sq - sp.kappa * sp.kappa;
  if (osc_sq > 0.0) {
    sp.gamma_tilde = std::sqrt(osc_sq);
  } else {
    sp.s = std::sqrt(-osc_sq);
  }
  return sp;
}

GaugeInvariants ngt_invariants_simpl(Real xi) {
  if (!(xi > 0.0 && xi < 1.0)) {
    throw NotSimplFamily("gradient-squared functional requires 0 < xi < 1");
  }
  GaugeInvariants inv;
  inv.tau1 = 0.0;
  inv.tau2 = 0.125;
  inv.tau3 = -1.0;
  inv.tau4 = 0.0;
  inv.iota5 = -xi / 16.0;
  return inv;
}

GaugeInvariants ngt_invariants_simpl(const NonlinearCoeffs& coeffs) {
  const DerivedParams p = derive_params(coeffs);
  if (p.sigma != 0.0 || p.nu != 0.0 || p.mu != 0.0 || p.eta != 0.0) {
    throw NotSimplFamily(
        "coefficients are not in the one-parameter gradient-squared family "
        "(requires sigma = nu = mu = eta = 0)");
  }
  return ngt_invariants_simpl(p.xi);
}

NonlinearCoeffs simpl_coeffs(Real xi) {
  if (!(xi > 0.0 && xi < 1.0)) {
    throw NotSimplFamily("gradient-squared functional requires 0 < xi < 1");
  }
  NonlinearCoeffs out;
  out.lambda << 0.0, 0.0, 1.0, 0.0, 1.0;
  out.D = 0.0;
  out.Dtilde = 0.25 * xi;
  return out;
}

}  // namespace ssdg
