#include "ssdg/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace ssdg {

namespace {

constexpr Real kSeriesAsymptoticSwitch = 12.0;

Real cyl_series(int m, Real x) {
  // J_m(x) = sum_s (-1)^s (x/2)^(2s+m) / (s! (s+m)!)
  const Real half_x = 0.5 * x;
  Real term = 1.0;
  for (int i = 1; i <= m; ++i) term *= half_x / static_cast<Real>(i);
  Real sum = term;
  const Real q = half_x * half_x;
  for (int s = 1; s <= 300; ++s) {
    term *= -q / (static_cast<Real>(s) * static_cast<Real>(s + m));
    sum += term;
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
  }
  return sum;
}

Real cyl_asymptotic(int m, Real x) {
  // Hankel's expansion: J_m(x) ~ sqrt(2/(pi x)) [P cos(chi) - Q sin(chi)],
  // chi = x - (2m+1) pi/4, with P, Q the even/odd-term series in 1/(8x).
  const Real mu = 4.0 * static_cast<Real>(m) * static_cast<Real>(m);
  const Real inv8x = 1.0 / (8.0 * x);
  Real p = 1.0;
  Real q = 0.0;
  Real ak = 1.0;  // prod_{j<=k} (mu - (2j-1)^2) / (k! 8^k), times x^-k applied below
  Real prev = std::numeric_limits<Real>::max();
  for (int k = 1; k <= 30; ++k) {
    const Real odd = static_cast<Real>(2 * k - 1);
    ak *= (mu - odd * odd) / static_cast<Real>(k) * inv8x;
    if (std::abs(ak) >= prev) break;  // asymptotic tail started growing
    prev = std::abs(ak);
    const int phase = (k / 2) % 2 ? -1 : 1;
    if (k % 2 == 1) {
      q += phase * ak;
    } else {
      p += phase * ak;
    }
    if (std::abs(ak) < 1e-17) break;
  }
  const Real chi = x - (0.5 * static_cast<Real>(m) + 0.25) * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

Real sph_series(int l, Real x) {
  // j_l(x) = x^l/(2l+1)!! [1 - (x^2/2)/(1!(2l+3)) + ...]
  Real lead = 1.0;
  for (int i = 1; i <= l; ++i) lead *= x / static_cast<Real>(2 * i + 1);
  const Real h = 0.5 * x * x;
  Real term = 1.0;
  Real sum = 1.0;
  for (int s = 1; s <= 60; ++s) {
    term *= -h / (static_cast<Real>(s) * static_cast<Real>(2 * (l + s) + 1));
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return lead * sum;
}

Real sph_miller(int l, Real x) {
  // Downward recurrence j_{k-1} = (2k+1)/x j_k - j_{k+1}, normalized by j_0.
  const int start = l + 25 + static_cast<int>(1.5 * x);
  Real jp = 0.0;
  Real jc = 1e-300;
  Real target = 0.0;
  for (int k = start; k >= 1; --k) {
    const Real jm = (2.0 * static_cast<Real>(k) + 1.0) / x * jc - jp;
    jp = jc;
    jc = jm;
    if (k - 1 == l) target = jc;
    if (std::abs(jc) > 1e250) {  // rescale to dodge overflow
      jc *= 1e-250;
      jp *= 1e-250;
      target *= 1e-250;
    }
  }
  return target * (std::sin(x) / x) / jc;
}

}  // namespace

Real cyl_bessel_j(int m, Real x) {
  if (m < 0) throw std::invalid_argument("cyl_bessel_j: order must be >= 0");
  if (x < 0.0) {
    const Real v = cyl_bessel_j(m, -x);
    return (m % 2 == 0) ? v : -v;
  }
  if (x <= kSeriesAsymptoticSwitch) return cyl_series(m, x);
  // Hankel's expansion is reliable only for small order; higher orders come
  // from the three-term recurrence seeded at J_0, J_1 (forward is stable for
  // m < x, downward Miller otherwise).
  const Real j0 = cyl_asymptotic(0, x);
  if (m == 0) return j0;
  const Real j1 = cyl_asymptotic(1, x);
  if (m == 1) return j1;
  if (static_cast<Real>(m) < x) {
    Real prev = j0;
    Real cur = j1;
    for (int k = 1; k < m; ++k) {
      const Real next = 2.0 * static_cast<Real>(k) / x * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  const int start = m + 30 + static_cast<int>(x);
  Real jp = 0.0;
  Real jc = 1e-300;
  Real target = 0.0;
  for (int k = start; k >= 1; --k) {
    const Real jm = 2.0 * static_cast<Real>(k) / x * jc - jp;
    jp = jc;
    jc = jm;
    if (k - 1 == m) target = jc;
    if (std::abs(jc) > 1e250) {
      jc *= 1e-250;
      jp *= 1e-250;
      target *= 1e-250;
    }
  }
  return target * j0 / jc;
}

Real sph_bessel_j(int l, Real x) {
  if (l < 0) throw std::invalid_argument("sph_bessel_j: order must be >= 0");
  if (x < 0.0) throw std::invalid_argument("sph_bessel_j: argument must be >= 0");
  if (x < 0.5) return sph_series(l, x);
  if (l == 0) return std::sin(x) / x;
  return sph_miller(l, x);
}

}  // namespace ssdg
