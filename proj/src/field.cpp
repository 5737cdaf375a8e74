#include "ssdg/field.hpp"

#include <unsupported/Eigen/FFT>

#include "ssdg/errors.hpp"

namespace ssdg {

namespace {

// Angular wavenumber ladder 2*pi/L * [0, 1, ..., n/2, -(n/2-1), ..., -1].
ArrayXr fourier_wavenumbers(const Grid1D& grid) {
  const Index n = grid.n;
  const Real base = 2.0 * kPi / grid.length();
  ArrayXr k(n);
  for (Index i = 0; i <= n / 2; ++i) k[i] = base * static_cast<Real>(i);
  for (Index i = n / 2 + 1; i < n; ++i) k[i] = base * static_cast<Real>(i - n);
  return k;
}

ArrayXc spectral_derivative(const Eigen::Ref<const ArrayXc>& values,
                            const Grid1D& grid, int order) {
  thread_local Eigen::FFT<Real> fft;
  const Index n = grid.n;
  Eigen::VectorXcd in = values.matrix();
  Eigen::VectorXcd hat(n);
  fft.fwd(hat, in);

  const ArrayXr k = fourier_wavenumbers(grid);
  if (order == 1) {
    hat.array() *= kImaginaryUnit * k.cast<Complex>();
    // the Nyquist mode has no well-defined odd derivative on a real lattice
    if (n % 2 == 0) hat[n / 2] = Complex(0.0, 0.0);
  } else {
    hat.array() *= (-k * k).cast<Complex>();
  }
  Eigen::VectorXcd out(n);
  fft.inv(out, hat);
  return out.array();
}

ArrayXc fd_derivative(const Eigen::Ref<const ArrayXc>& values,
                      const Grid1D& grid, int order) {
  const Index n = grid.n;
  ArrayXc out(n);
  if (order == 1) {
    const Real w = 1.0 / (2.0 * grid.dx);
    out.segment(1, n - 2) = (values.tail(n - 2) - values.head(n - 2)) * w;
    out[0] = (values[1] - values[n - 1]) * w;
    out[n - 1] = (values[0] - values[n - 2]) * w;
  } else {
    const Real w = 1.0 / (grid.dx * grid.dx);
    out.segment(1, n - 2) =
        (values.tail(n - 2) - 2.0 * values.segment(1, n - 2) + values.head(n - 2)) * w;
    out[0] = (values[1] - 2.0 * values[0] + values[n - 1]) * w;
    out[n - 1] = (values[0] - 2.0 * values[n - 1] + values[n - 2]) * w;
  }
  return out;
}

}  // namespace

ArrayXr Grid1D::points() const {
  return ArrayXr::LinSpaced(n, x_min, x_min + static_cast<Real>(n - 1) * dx);
}

Grid1D make_grid(Real x_min, Real x_max, Index n) {
  if (!(x_max > x_min)) throw InvalidGrid("grid requires x_max > x_min");
  if (n < 8) throw InvalidGrid("grid requires n >= 8");
  Grid1D g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n = n;
  g.dx = (x_max - x_min) / static_cast<Real>(n);
  return g;
}

ArrayXc derivative(const Eigen::Ref<const ArrayXc>& values, const Grid1D& grid,
                   int order, DerivScheme scheme) {
  if (scheme == DerivScheme::Spectral) return spectral_derivative(values, grid, order);
  return fd_derivative(values, grid, order);
}

ArrayXr derivative(const Eigen::Ref<const ArrayXr>& values, const Grid1D& grid,
                   int order, DerivScheme scheme) {
  if (scheme == DerivScheme::Spectral) {
    return spectral_derivative(values.cast<Complex>(), grid, order).real();
  }
  const Index n = grid.n;
  ArrayXr out(n);
  if (order == 1) {
    const Real w = 1.0 / (2.0 * grid.dx);
    out.segment(1, n - 2) = (values.tail(n - 2) - values.head(n - 2)) * w;
    out[0] = (values[1] - values[n - 1]) * w;
    out[n - 1] = (values[0] - values[n - 2]) * w;
  } else {
    const Real w = 1.0 / (grid.dx * grid.dx);
    out.segment(1, n - 2) =
        (values.tail(n - 2) - 2.0 * values.segment(1, n - 2) + values.head(n - 2)) * w;
    out[0] = (values[1] - 2.0 * values[0] + values[n - 1]) * w;
    out[n - 1] = (values[0] - 2.0 * values[n - 1] + values[n - 2]) * w;
  }
  return out;
}

Observables observables(const ComplexField& field, DerivScheme scheme) {
  Observables obs;
  obs.rho = field.values.abs2();
  const ArrayXc dpsi = derivative(field.values, field.grid, 1, scheme);
  obs.j = (field.values.conjugate() * dpsi).imag();
  return obs;
}

}  // namespace ssdg
