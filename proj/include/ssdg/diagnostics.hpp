// Scalar verification instruments: norm, centroid, width, trajectory-level
// average energy, phase-factored overlap error, and the pointwise residual
// of an analytic solution in the full evolution equation.
#pragma once

#include "ssdg/analytic.hpp"
#include "ssdg/coeffs.hpp"
#include "ssdg/field.hpp"
#include "ssdg/trajectory.hpp"
#include "ssdg/types.hpp"

namespace ssdg {

// Rectangle-rule integral of rho over the periodic domain.
Real norm(const ComplexField& field);

// Copy scaled so norm() == 1. Throws EmptySupport on a zero field.
ComplexField normalized(const ComplexField& field);

// integral(x rho)/integral(rho). Throws EmptySupport when norm is zero.
Real centroid(const ComplexField& field);

// sqrt of the density variance about the centroid.
Real field_width(const ComplexField& field);

// Centroids unwrapped across the periodic seam: each snapshot's first moment
// is taken with positions mapped into the image nearest the previous
// centroid (the first snapshot anchors at its density peak), so the series
// tracks a translating packet monotonically through the wrap.
std::vector<Real> centroid_series(const TrajectoryRecord& record, const Grid1D& grid);

// <E> = Re[ i * integral(conj(psi) dpsi/dt) ] estimated with centered time
// differences of the snapshots, averaged over interior times; each estimate
// is divided by the snapshot norm. Equals omega for an exact soliton.
// Throws TooFewSnapshots below 3 snapshots.
Real average_energy(const TrajectoryRecord& record);

// L2 distance after normalizing both fields and factoring out the optimal
// global phase: sqrt(2 - 2|<f, s>|). Throws EmptySupport if either side has
// zero norm.
Real overlap_error(const ComplexField& field, const AnalyticSolution& sol, Real t);
Real overlap_error(const ComplexField& field, const ComplexField& other);

struct ResidualReport {
  Real max_interior = 0.0;
  Real interior_threshold = 0.0;
  Index boundary_excluded_points = 0;
};

// Samples the solution at time t, discretizes the spatial terms, takes
// d psi/d t analytically, and reports the max residual of
//   i dpsi/dt + (1/2) psi'' - Omega{psi} psi
// over points with rho > threshold * max(rho).
//
// With central differences the stencils use ghost samples beyond the domain
// ends, so a non-periodic profile (e.g. cosh tails) never sees the wrap
// seam. The spectral scheme differentiates the periodic core directly and
// is exact for solutions commensurate with the domain (plane waves with
// k = 2 pi m / L), putting their residual at the rounding floor.
ResidualReport pde_residual(const AnalyticSolution& sol, Real t, const Grid1D& grid,
                            const NonlinearCoeffs& coeffs, Real interior_threshold,
                            DerivScheme scheme = DerivScheme::CentralFD2);

}  // namespace ssdg
