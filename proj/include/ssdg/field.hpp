// Uniform periodic 1D grid, gridded complex wavefunction, spatial
// derivatives (central differences or Fourier), and the hydrodynamic
// observables rho and j.
#pragma once

#include "ssdg/types.hpp"

namespace ssdg {

// Periodic convention: samples at x_i = x_min + i*dx for i in [0, n),
// with dx = (x_max - x_min)/n, so x_max is the wrap image of x_min.
struct Grid1D {
  Real x_min = 0.0;
  Real x_max = 0.0;
  Index n = 0;
  Real dx = 0.0;

  Real length() const { return x_max - x_min; }
  Real point(Index i) const { return x_min + static_cast<Real>(i) * dx; }
  ArrayXr points() const;
};

// Throws InvalidGrid unless x_max > x_min and n >= 8.
Grid1D make_grid(Real x_min, Real x_max, Index n);

struct ComplexField {
  Grid1D grid;
  ArrayXc values;
};

enum class DerivScheme {
  CentralFD2,  // second-order central differences with periodic wrap
  Spectral,    // Fourier differentiation
};

// Periodic derivative of the requested order (1 or 2).
ArrayXc derivative(const Eigen::Ref<const ArrayXc>& values, const Grid1D& grid,
                   int order, DerivScheme scheme = DerivScheme::CentralFD2);
ArrayXr derivative(const Eigen::Ref<const ArrayXr>& values, const Grid1D& grid,
                   int order, DerivScheme scheme = DerivScheme::CentralFD2);

struct Observables {
  ArrayXr rho;  // |psi|^2
  ArrayXr j;    // Im(conj(psi) * grad psi)
};

Observables observables(const ComplexField& field,
                        DerivScheme scheme = DerivScheme::CentralFD2);

}  // namespace ssdg
