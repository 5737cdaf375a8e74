#include "ssdg/trajectory.hpp"

#include "ssdg/diagnostics.hpp"

namespace ssdg {

TrajectoryRecord sample_trajectory(const AnalyticSolution& sol, const Grid1D& grid,
                                   const std::vector<Real>& times) {
  TrajectoryRecord record;
  record.times = times;
  record.snapshots.reserve(times.size());
  record.diagnostics.reserve(times.size());
  for (Real t : times) {
    ComplexField snap = sample(sol, grid, t);
    SnapshotDiagnostics d;
    d.norm = norm(snap);
    if (d.norm > 0.0) {
      d.centroid = centroid(snap);
      d.width = field_width(snap);
    }
    d.l2_error_vs_analytic = 0.0;
    record.snapshots.push_back(std::move(snap));
    record.diagnostics.push_back(d);
  }
  return record;
}

}  // namespace ssdg
