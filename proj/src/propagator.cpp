#include "ssdg/propagator.hpp"

#include <cmath>
#include <random>
#include <unsupported/Eigen/FFT>

#include "ssdg/diagnostics.hpp"
#include "ssdg/errors.hpp"

namespace ssdg {

namespace {

ArrayXr squared_wavenumbers(const Grid1D& grid) {
  const Index n = grid.n;
  const Real base = 2.0 * kPi / grid.length();
  ArrayXr k2(n);
  for (Index i = 0; i <= n / 2; ++i) {
    const Real k = base * static_cast<Real>(i);
    k2[i] = k * k;
  }
  for (Index i = n / 2 + 1; i < n; ++i) {
    const Real k = base * static_cast<Real>(i - n);
    k2[i] = k * k;
  }
  return k2;
}

// Pointwise Omega from the stencil values; rho > 0 guaranteed by the caller.
inline Complex omega_scalar(Complex psi, Complex left, Complex right, Real rho,
                            Real inv_2dx, Real inv_dx2, const NonlinearCoeffs& coeffs) {
  const Complex d1 = (right - left) * inv_2dx;
  const Complex d2 = (right - 2.0 * psi + left) * inv_dx2;
  const Complex conj_over_rho = std::conj(psi) / rho;
  const Complex log1 = d1 * conj_over_rho;
  const Complex log2 = d2 * conj_over_rho;
  const Complex log1_sq = log1 * log1;
  const Array5r& l = coeffs.lambda;
  Real re = l[0] * log2.real() + l[1] * log2.imag() + l[2] * log1_sq.real() +
            l[3] * log1_sq.imag() + l[4] * std::norm(log1);
  re *= coeffs.Dtilde;
  if (coeffs.D == 0.0) return Complex(re, 0.0);
  const Real lap_rho_over_rho =
      2.0 * ((d2 * std::conj(psi)).real() + std::norm(d1)) / rho;
  return Complex(re, 0.5 * coeffs.D * lap_rho_over_rho);
}

// dpsi/dt = i ((1/2) psi'' - Omega{psi} psi), fused single pass (hot path).
void rhs(const ArrayXc& psi, const Grid1D& grid, const NonlinearCoeffs& coeffs,
         Real floor, ArrayXc& out) {
  const Index n = grid.n;
  const Real inv_dx2 = 1.0 / (grid.dx * grid.dx);
  const Real inv_2dx = 0.5 / grid.dx;
  const bool nonlinear = coeffs.Dtilde != 0.0 || coeffs.D != 0.0;
  const Real rho_floor = nonlinear ? floor * psi.abs2().maxCoeff() : 0.0;

  out.resize(n);
  const Complex* v = psi.data();
  Complex* o = out.data();
  for (Index i = 0; i < n; ++i) {
    const Complex left = v[i == 0 ? n - 1 : i - 1];
    const Complex right = v[i == n - 1 ? 0 : i + 1];
    const Complex center = v[i];
    const Complex d2 = (right - 2.0 * center + left) * inv_dx2;
    Complex acc = 0.5 * d2;
    if (nonlinear) {
      const Real rho = std::norm(center);
      if (rho > rho_floor) {
        acc -= omega_scalar(center, left, right, rho, inv_2dx, inv_dx2, coeffs) * center;
      }
    }
    o[i] = Complex(-acc.imag(), acc.real());  // multiply by i
  }
}

ArrayXc rk4_step(const ArrayXc& psi, const Grid1D& grid, const NonlinearCoeffs& coeffs,
                 Real dt, Real floor) {
  thread_local ArrayXc k1, k2, k3, k4, stage;
  rhs(psi, grid, coeffs, floor, k1);
  stage = psi + (0.5 * dt) * k1;
  rhs(stage, grid, coeffs, floor, k2);
  stage = psi + (0.5 * dt) * k2;
  rhs(stage, grid, coeffs, floor, k3);
  stage = psi + dt * k3;
  rhs(stage, grid, coeffs, floor, k4);
  return psi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

ArrayXc split_step(const ArrayXc& psi, const Grid1D& grid,
                   const NonlinearCoeffs& coeffs, Real dt, Real floor) {
  thread_local Eigen::FFT<Real> fft;
  const ArrayXr k2 = squared_wavenumbers(grid);
  const ArrayXc half_linear =
      (-kImaginaryUnit * (0.25 * dt) * k2.cast<Complex>()).exp();

  Eigen::VectorXcd hat(grid.n);
  Eigen::VectorXcd buf = psi.matrix();
  fft.fwd(hat, buf);
  hat.array() *= half_linear;
  fft.inv(buf, hat);

  ArrayXc mid = buf.array();
  const Real rho_max = mid.abs2().maxCoeff();
  if (rho_max > 0.0) {
    const ArrayXc omega = eval_omega(ComplexField{grid, mid}, coeffs, floor,
                                     DerivScheme::CentralFD2);
    mid *= (-kImaginaryUnit * dt * omega).exp();
  }

  buf = mid.matrix();
  fft.fwd(hat, buf);
  hat.array() *= half_linear;
  fft.inv(buf, hat);
  return buf.array();
}

SnapshotDiagnostics snapshot_diagnostics(const ComplexField& field,
                                         const AnalyticSolution* reference, Real t) {
  SnapshotDiagnostics d;
  d.norm = norm(field);
  if (d.norm > 0.0) {
    d.centroid = centroid(field);
    d.width = field_width(field);
    if (reference != nullptr) {
      d.l2_error_vs_analytic = overlap_error(field, *reference, t);
    }
  } else {
    d.centroid = std::numeric_limits<Real>::quiet_NaN();
    d.width = 0.0;
  }
  return d;
}

}  // namespace

Real stability_limit(const Grid1D& grid, Scheme scheme) {
  if (scheme == Scheme::RK4FD) return 0.2 * grid.dx * grid.dx;
  return 0.1 * grid.dx;
}

ComplexField step(const ComplexField& field, const NonlinearCoeffs& coeffs,
                  const PropagatorConfig& cfg) {
  const Real before = std::sqrt(field.values.abs2().maxCoeff());
  ComplexField out;
  out.grid = field.grid;
  if (cfg.scheme == Scheme::RK4FD) {
    out.values = rk4_step(field.values, field.grid, coeffs, cfg.dt, cfg.density_floor);
  } else {
    out.values = split_step(field.values, field.grid, coeffs, cfg.dt, cfg.density_floor);
  }
  const Real after = std::sqrt(out.values.abs2().maxCoeff());
  if (after > 10.0 * before) {
    throw UnstableStep("amplitude grew more than 10x within one step");
  }
  return out;
}

TrajectoryRecord run(const ComplexField& initial, const NonlinearCoeffs& coeffs,
                     Real T, const PropagatorConfig& cfg,
                     const AnalyticSolution* reference) {
  if (!(T > 0.0)) throw std::invalid_argument("run requires T > 0");
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("run requires dt > 0");
  if (cfg.dt > stability_limit(initial.grid, cfg.scheme)) {
    throw std::invalid_argument("dt exceeds the stability limit for this grid");
  }
  const long n_steps = std::lround(std::ceil(T / cfg.dt - 1e-9));
  const int cadence = std::max(cfg.record_every, 1);

  TrajectoryRecord record;
  record.times.push_back(0.0);
  record.snapshots.push_back(initial);
  record.diagnostics.push_back(snapshot_diagnostics(initial, reference, 0.0));

  ComplexField state = initial;
  for (long i = 1; i <= n_steps; ++i) {
    const Real t = static_cast<Real>(i) * cfg.dt;
    try {
      state = step(state, coeffs, cfg);
    } catch (const UnstableStep& e) {
      throw UnstableStep(std::string(e.what()), t);
    }
    if (i % cadence == 0 || i == n_steps) {
      record.times.push_back(t);
      record.snapshots.push_back(state);
      record.diagnostics.push_back(snapshot_diagnostics(state, reference, t));
    }
  }
  return record;
}

ComplexField mollify(const ComplexField& field, Real width) {
  if (width <= 0.0) return field;
  thread_local Eigen::FFT<Real> fft;
  const ArrayXr k2 = squared_wavenumbers(field.grid);
  Eigen::VectorXcd hat(field.grid.n);
  Eigen::VectorXcd buf = field.values.matrix();
  fft.fwd(hat, buf);
  hat.array() *= (-0.5 * width * width * k2).exp().cast<Complex>();
  fft.inv(buf, hat);
  return ComplexField{field.grid, buf.array()};
}

ComplexField perturb(const ComplexField& field, Real amplitude, unsigned seed) {
  if (amplitude == 0.0) return field;
  std::mt19937 rng(seed);
  std::normal_distribution<Real> gauss(0.0, 1.0);
  const Real scale =
      amplitude * std::sqrt(field.values.abs2().maxCoeff());
  const ArrayXr x = field.grid.points();
  const Real base = 2.0 * kPi / field.grid.length();
  ArrayXc noise = ArrayXc::Zero(field.grid.n);
  for (int m = 1; m <= 8; ++m) {
    const Real cr = gauss(rng), ci = gauss(rng), sr = gauss(rng), si = gauss(rng);
    const ArrayXr arg = (base * m) * x;
    noise += arg.cos().cast<Complex>() * Complex(cr, ci) +
             arg.sin().cast<Complex>() * Complex(sr, si);
  }
  noise *= scale / std::sqrt(32.0);
  return ComplexField{field.grid, field.values + noise};
}

}  // namespace ssdg
