// Exact travelling-wave solutions with linear phase: the finite-length
// soliton (compactly supported cos^(1+delta) profile), the exponentially
// confined cosh soliton, the plane wave, the general mode of the linearized
// amplitude equation, and the 2D/3D radial Helmholtz profiles.
#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "ssdg/coeffs.hpp"
#include "ssdg/field.hpp"
#include "ssdg/types.hpp"

namespace ssdg {

// exp(i(kx - omega t)) with omega = k^2/2.
struct PlaneWave {
  Real k = 0.0;
  Real omega = 0.0;
  Real amplitude = 1.0;
};

// Modulus [cos(gt*u)]^(1+delta) * exp((1+delta)*kappa*u) on |gt*u| < pi/2,
// u = x - k t - x0; identically zero outside the closed support. Carries a
// continuous first derivative at the support edges (delta > 0).
struct FlsSolution1D {
  SolitonParams params;
  Real x0 = 0.0;
  Real normalization = 1.0;
  bool galilean = true;  // false when mu or eta nonzero (drifting profile)

  Real support_half_width() const { return 0.5 * kPi / *params.gamma_tilde; }
  Real center(Real t) const { return x0 + params.k * t; }
};

// Modulus [cosh(beta*u)]^(-|alpha|), u = x - k t.
struct CoshSoliton {
  Real k = 0.0;
  Real beta = 0.0;
  Real abs_alpha = 0.0;
  Real omega = 0.0;
  Real normalization = 1.0;
};

// Real profile f(x) = e^(kappa x) (C1 e^(s x) + C2 e^(-s x)) of the
// linearized amplitude equation; time independent, used to classify the
// non-normalizable regimes.
struct LinearMode {
  Real C1 = 0.0;
  Real C2 = 0.0;
  Real kappa = 0.0;
  Real s = 0.0;
};

using AnalyticSolution = std::variant<PlaneWave, FlsSolution1D, CoshSoliton, LinearMode>;

// Throws InadmissibleParams when delta <= 0 or gamma_tilde <= 0,
// DegenerateExponent when 1 - sigma - xi = 0.
FlsSolution1D build_fls(Real k, Real gamma_tilde, const DerivedParams& p, Real x0 = 0.0);

// Throws InadmissibleParams when alpha >= 0 or mu != 0 or beta <= 0.
CoshSoliton build_cosh_soliton(Real k, Real beta, const DerivedParams& p);

PlaneWave build_plane_wave(Real k);

// Exact closed-form value; identically zero outside an FLS support.
Complex eval(const AnalyticSolution& sol, Real x, Real t);

// Analytic d psi / d t. Throws OutsideSupport at or beyond an FLS
// support boundary.
Complex time_derivative(const AnalyticSolution& sol, Real x, Real t);

// Grid sampling at fixed time.
ComplexField sample(const AnalyticSolution& sol, const Grid1D& grid, Real t);

// Open support interval at time t, when the solution has compact support.
std::optional<std::pair<Real, Real>> support_interval(const AnalyticSolution& sol, Real t);

// Returns a copy rescaled so the L2 norm (integral of rho over space) is 1.
// Supported for FLS and cosh solitons.
AnalyticSolution l2_normalized(const AnalyticSolution& sol);

// Radial factor of the 2D/3D finite-length packets: J_m(gamma r) in 2D,
// gamma * j_l(gamma r) in 3D (so the l = 0 case is sin(gamma r)/r).
// first_zero is the first positive node, located by a bracketing scan and
// bisection run to machine precision.
struct RadialProfile {
  int dim = 2;
  int mode_index = 0;
  Real gamma = 1.0;
  Real first_zero = 0.0;
};

RadialProfile radial_profile(int dim, int mode_index, Real gamma);
Real radial_eval(const RadialProfile& profile, Real r);

}  // namespace ssdg
