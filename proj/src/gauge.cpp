#include "ssdg/gauge.hpp"

#include <cmath>

#include "ssdg/errors.hpp"

namespace ssdg {

namespace {

// Start index of the single circular run of true entries. Throws when the
// set is empty or splits into several runs.
Index circular_run_start(const ArrayXb& valid) {
  const Index n = valid.size();
  const Index n_valid = valid.count();
  if (n_valid == 0) throw EmptySupport("gauge transform of a zero field");
  if (n_valid == n) return 0;

  Index start = -1;
  Index rises = 0;
  for (Index i = 0; i < n; ++i) {
    const bool prev = valid[(i + n - 1) % n];
    if (valid[i] && !prev) {
      ++rises;
      start = i;
    }
  }
  if (rises != 1) {
    throw DisconnectedSupport("valid set splits into multiple intervals");
  }
  return start;
}

}  // namespace

ArrayXr unwrapped_phase(const ComplexField& field, Real floor) {
  const Index n = field.grid.n;
  const ArrayXr rho = field.values.abs2();
  const Real rho_max = rho.maxCoeff();
  if (rho_max <= 0.0) throw EmptySupport("gauge transform of a zero field");
  const ArrayXb valid = rho > floor * rho_max;
  const Index start = circular_run_start(valid);

  ArrayXr theta = ArrayXr::Zero(n);
  Real prev = std::arg(field.values[start]);
  theta[start] = prev;
  for (Index offset = 1; offset < n; ++offset) {
    const Index i = (start + offset) % n;
    if (!valid[i]) break;  // single run: stop at the first invalid point
    Real raw = std::arg(field.values[i]);
    // shift into the branch closest to the previous point
    Real jump = raw - prev;
    jump -= 2.0 * kPi * std::round(jump / (2.0 * kPi));
    prev += jump;
    theta[i] = prev;
  }
  return theta;
}

ComplexField apply_ngt(const ComplexField& field, const GaugeTransform& xf, Real floor) {
  const Index n = field.grid.n;
  const ArrayXr rho = field.values.abs2();
  const Real rho_max = rho.maxCoeff();
  if (rho_max <= 0.0) throw EmptySupport("gauge transform of a zero field");
  const ArrayXb valid = rho > floor * rho_max;

  ComplexField out;
  out.grid = field.grid;

  // z = i/2 reproduces psi exactly; skip the trig round trip so re-ingested
  // snapshots survive bit-identically.
  if (xf.a() == 0.0 && xf.b() == 0.5) {
    circular_run_start(valid);  // still validate connectivity
    out.values = valid.select(field.values, ArrayXc::Zero(n));
    return out;
  }

  const ArrayXr theta = unwrapped_phase(field, floor);
  const ArrayXr modulus = rho.sqrt();
  const ArrayXr safe_mod = valid.select(modulus, ArrayXr::Ones(n));
  const ArrayXr phase = 2.0 * xf.a() * safe_mod.log() + 2.0 * xf.b() * theta;

  ArrayXc values(n);
  for (Index i = 0; i < n; ++i) {
    values[i] = valid[i] ? std::polar(modulus[i], phase[i]) : Complex(0.0, 0.0);
  }
  out.values = std::move(values);
  return out;
}

}  // namespace ssdg
