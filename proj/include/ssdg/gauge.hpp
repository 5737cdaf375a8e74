// Nonlinear gauge transformation psi -> |psi| exp[i(z* ln psi + z ln psi*)],
// realized on gridded fields as the phase map
//   theta' = 2a ln|psi| + 2b theta,  z = a + ib,
// with theta the 1D-unwrapped phase. Modulus preserving by construction.
#pragma once

#include "ssdg/field.hpp"
#include "ssdg/types.hpp"

namespace ssdg {

struct GaugeTransform {
  Complex z{0.0, 0.0};

  Real a() const { return z.real(); }
  Real b() const { return z.imag(); }
};

// Unwrapped phase over the valid set (rho > floor * max rho), anchored at
// the principal value of the leftmost valid point (in circular order).
// Entries outside the valid set are zero. Throws DisconnectedSupport when
// the valid set is not a single circular interval, EmptySupport when rho
// vanishes identically.
ArrayXr unwrapped_phase(const ComplexField& field, Real floor);

// Applies the transform; points at or below the floor map to exactly 0.
// z = i/2 is the identity (returned unchanged up to sub-floor zeroing);
// z = 0 strips the phase.
ComplexField apply_ngt(const ComplexField& field, const GaugeTransform& xf, Real floor);

}  // namespace ssdg
