// Time integration of i dpsi/dt = -(1/2) psi'' + Omega{psi} psi on the
// periodic grid: classical RK4 over a finite-difference Laplacian, or
// Strang splitting with the linear half-steps applied exactly in Fourier
// space and Omega frozen over the nonlinear sub-step.
#pragma once

#include "ssdg/coeffs.hpp"
#include "ssdg/field.hpp"
#include "ssdg/functionals.hpp"
#include "ssdg/trajectory.hpp"
#include "ssdg/types.hpp"

namespace ssdg {

enum class Scheme { RK4FD, SplitStep };

// Relative density floor used while propagating. Higher than the evaluation
// floor on purpose: one grid point inside a compact support edge the
// one-sided difference overestimates psi'/psi by dx/eps^2, so Omega*psi
// spikes far above its true O(1) value once rho drops below ~(dx/2)^4.
// Masking at 1e-7 removes the spike zone while the field there is
// negligible in L2.
inline constexpr Real kPropagationDensityFloor = 1e-7;

struct PropagatorConfig {
  Real dt = 0.0;
  Scheme scheme = Scheme::RK4FD;
  Real density_floor = kPropagationDensityFloor;
  int record_every = 1;
};

// Largest stable dt: 0.2 dx^2 for the explicit scheme, 0.1 dx for splitting.
Real stability_limit(const Grid1D& grid, Scheme scheme);

// One time step. Throws UnstableStep when max|psi| grows by more than 10x.
ComplexField step(const ComplexField& field, const NonlinearCoeffs& coeffs,
                  const PropagatorConfig& cfg);

// Repeated stepping over [0, T] with snapshots every record_every steps (the
// initial and final states are always recorded). When a reference solution
// is supplied, each snapshot's diagnostics include the phase-factored L2
// error against it. Throws UnstableStep with the failing time attached.
TrajectoryRecord run(const ComplexField& initial, const NonlinearCoeffs& coeffs,
                     Real T, const PropagatorConfig& cfg,
                     const AnalyticSolution* reference = nullptr);

// Initial-data helpers for stability studies.
// Gaussian low-pass in Fourier space with length scale `width`.
ComplexField mollify(const ComplexField& field, Real width);
// Adds band-limited noise of the given relative amplitude (deterministic in
// the seed).
ComplexField perturb(const ComplexField& field, Real amplitude, unsigned seed);

}  // namespace ssdg
