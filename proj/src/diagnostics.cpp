#include "ssdg/diagnostics.hpp"

#include <cmath>

#include "ssdg/errors.hpp"
#include "ssdg/functionals.hpp"

namespace ssdg {

Real norm(const ComplexField& field) {
  return field.values.abs2().sum() * field.grid.dx;
}

ComplexField normalized(const ComplexField& field) {
  const Real n = norm(field);
  if (n <= 0.0) throw EmptySupport("cannot normalize a zero field");
  ComplexField out = field;
  out.values /= std::sqrt(n);
  return out;
}

Real centroid(const ComplexField& field) {
  const ArrayXr rho = field.values.abs2();
  const Real total = rho.sum();
  if (total <= 0.0) throw EmptySupport("centroid of a zero field");
  return (field.grid.points() * rho).sum() / total;
}

Real field_width(const ComplexField& field) {
  const ArrayXr rho = field.values.abs2();
  const Real total = rho.sum();
  if (total <= 0.0) throw EmptySupport("width of a zero field");
  const ArrayXr x = field.grid.points();
  const Real mean = (x * rho).sum() / total;
  const Real var = ((x - mean).square() * rho).sum() / total;
  return std::sqrt(std::max(var, 0.0));
}

std::vector<Real> centroid_series(const TrajectoryRecord& record, const Grid1D& grid) {
  const Real length = grid.length();
  const ArrayXr x = grid.points();
  std::vector<Real> out;
  out.reserve(record.snapshots.size());
  for (const ComplexField& snap : record.snapshots) {
    const ArrayXr rho = snap.values.abs2();
    const Real total = rho.sum();
    if (total <= 0.0) throw EmptySupport("centroid of a zero field");
    Real anchor;
    if (out.empty()) {
      Index peak = 0;
      rho.maxCoeff(&peak);
      anchor = x[peak];
    } else {
      anchor = out.back();
    }
    // first moment with every position mapped into the image nearest the
    // anchor, so a packet straddling the wrap stays together
    Real moment = 0.0;
    for (Index i = 0; i < grid.n; ++i) {
      const Real xi = x[i] - length * std::round((x[i] - anchor) / length);
      moment += xi * rho[i];
    }
    out.push_back(moment / total);
  }
  return out;
}

Real average_energy(const TrajectoryRecord& record) {
  const std::size_t m = record.snapshots.size();
  if (m < 3) throw TooFewSnapshots("average energy needs at least 3 snapshots");
  const Real dx = record.snapshots.front().grid.dx;
  Real acc = 0.0;
  for (std::size_t j = 1; j + 1 < m; ++j) {
    const ArrayXc& prev = record.snapshots[j - 1].values;
    const ArrayXc& next = record.snapshots[j + 1].values;
    const ArrayXc& mid = record.snapshots[j].values;
    const Real dt2 = record.times[j + 1] - record.times[j - 1];
    const ArrayXc dpsi_dt = (next - prev) / dt2;
    const Complex inner = (mid.conjugate() * dpsi_dt).sum() * dx;
    const Real snap_norm = mid.abs2().sum() * dx;
    acc += (kImaginaryUnit * inner).real() / snap_norm;
  }
  return acc / static_cast<Real>(m - 2);
}

Real overlap_error(const ComplexField& field, const ComplexField& other) {
  const Real dx = field.grid.dx;
  const Real nf = std::sqrt(field.values.abs2().sum() * dx);
  const Real ns = std::sqrt(other.values.abs2().sum() * dx);
  if (nf <= 0.0 || ns <= 0.0) throw EmptySupport("overlap of a zero field");
  const Complex inner =
      (field.values.conjugate() * other.values).sum() * dx / (nf * ns);
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::abs(inner)));
}

Real overlap_error(const ComplexField& field, const AnalyticSolution& sol, Real t) {
  return overlap_error(field, sample(sol, field.grid, t));
}

ResidualReport pde_residual(const AnalyticSolution& sol, Real t, const Grid1D& grid,
                            const NonlinearCoeffs& coeffs, Real interior_threshold,
                            DerivScheme scheme) {
  if (!(interior_threshold > 0.0 && interior_threshold < 1.0)) {
    throw std::invalid_argument("interior_threshold must lie in (0, 1)");
  }
  const Index n = grid.n;
  const Real dx = grid.dx;

  ArrayXc psi(n), dpsi(n), d2psi(n);
  if (scheme == DerivScheme::Spectral) {
    psi = sample(sol, grid, t).values;
    dpsi = derivative(psi, grid, 1, DerivScheme::Spectral);
    d2psi = derivative(psi, grid, 2, DerivScheme::Spectral);
  } else {
    // one ghost sample beyond each end keeps the stencils off the wrap seam
    ArrayXc ext(n + 2);
    for (Index i = 0; i < n + 2; ++i) {
      ext[i] = eval(sol, grid.x_min + static_cast<Real>(i - 1) * dx, t);
    }
    psi = ext.segment(1, n);
    dpsi = (ext.tail(n) - ext.head(n)) / (2.0 * dx);
    d2psi = (ext.tail(n) - 2.0 * psi + ext.head(n)) / (dx * dx);
  }

  const ArrayXr rho = psi.abs2();
  const Real rho_max = rho.maxCoeff();
  if (rho_max <= 0.0) throw EmptySupport("residual of a zero field");
  const ArrayXb valid = rho > interior_threshold * rho_max;

  const ArrayXc omega_psi =
      omega_pointwise(psi, dpsi, d2psi, valid, coeffs) * psi;

  ResidualReport report;
  report.interior_threshold = interior_threshold;
  report.boundary_excluded_points = n - valid.count();
  Real max_abs = 0.0;
  for (Index i = 0; i < n; ++i) {
    if (!valid[i]) continue;
    const Complex dpsi_dt = time_derivative(sol, grid.point(i), t);
    const Complex r = kImaginaryUnit * dpsi_dt + 0.5 * d2psi[i] - omega_psi[i];
    max_abs = std::max(max_abs, std::abs(r));
  }
  report.max_interior = max_abs;
  return report;
}

}  // namespace ssdg
