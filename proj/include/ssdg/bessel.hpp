// Integer-order Bessel functions J_m and spherical Bessel functions j_l,
// self-contained: ascending power series for small argument, Hankel's
// asymptotic expansion (J_m) or Miller downward recurrence (j_l) for large.
// Accuracy target ~1e-10 over the desk-scale argument range.
#pragma once

#include "ssdg/types.hpp"

namespace ssdg {

// J_m(x) for m >= 0, any real x.
Real cyl_bessel_j(int m, Real x);

// j_l(x) for l >= 0, x >= 0; j_0(x) = sin(x)/x with j_0(0) = 1.
Real sph_bessel_j(int l, Real x);

}  // namespace ssdg
