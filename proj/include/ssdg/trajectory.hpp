// Time series of field snapshots plus per-snapshot scalar diagnostics.
#pragma once

#include <vector>

#include "ssdg/analytic.hpp"
#include "ssdg/field.hpp"
#include "ssdg/types.hpp"

namespace ssdg {

struct SnapshotDiagnostics {
  Real norm = 0.0;
  Real centroid = 0.0;
  Real width = 0.0;
  Real l2_error_vs_analytic = std::numeric_limits<Real>::quiet_NaN();
};

struct TrajectoryRecord {
  std::vector<Real> times;
  std::vector<ComplexField> snapshots;
  std::vector<SnapshotDiagnostics> diagnostics;
};

// Record built by sampling an exact solution at the given times (no
// propagation); diagnostics filled the same way as a propagated record.
TrajectoryRecord sample_trajectory(const AnalyticSolution& sol, const Grid1D& grid,
                                   const std::vector<Real>& times);

}  // namespace ssdg
