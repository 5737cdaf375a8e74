#include "ssdg/analytic.hpp"

#include <cmath>

#include "ssdg/bessel.hpp"
#include "ssdg/errors.hpp"

namespace ssdg {

namespace {

Complex phase_factor(Real k, Real omega, Real x, Real t) {
  return std::polar(1.0, k * x - omega * t);
}

// Simpson rule on [a, b].
template <typename F>
Real simpson(F&& f, Real a, Real b, int intervals) {
  const Real h = (b - a) / intervals;
  Real sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) {
    sum += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

Real bisect_first_zero(const RadialProfile& profile, Real lo, Real hi) {
  constexpr int kScanPoints = 1000;
  const Real step = (hi - lo) / kScanPoints;
  Real a = lo;
  Real fa = radial_eval(profile, a);
  Real b = 0.0;
  bool bracketed = false;
  for (int i = 1; i <= kScanPoints; ++i) {
    b = lo + i * step;
    const Real fb = radial_eval(profile, b);
    if (fa * fb <= 0.0 && fb != fa) {
      bracketed = true;
      break;
    }
    a = b;
    fa = fb;
  }
  if (!bracketed) {
    throw InadmissibleParams("radial profile: no node found inside the scan bracket");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const Real mid = 0.5 * (a + b);
    if (mid == a || mid == b) break;  // interval no longer splittable
    const Real fm = radial_eval(profile, mid);
    if (fm == 0.0) return mid;
    if (fa * fm < 0.0) {
      b = mid;
    } else {
      a = mid;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

FlsSolution1D build_fls(Real k, Real gamma_tilde, const DerivedParams& p, Real x0) {
  if (!(gamma_tilde > 0.0)) {
    throw InadmissibleParams("finite-length soliton requires gamma_tilde > 0");
  }
  const Exponents e = exponents(p.sigma, p.xi);  // throws DegenerateExponent
  if (!(e.delta > 0.0)) {
    throw InadmissibleParams(
        "finite-length soliton requires delta > 0 (xi and 1-sigma-xi of equal sign)");
  }
  const Real kappa = 2.0 * p.mu * k / (1.0 - p.sigma);
  const Real gamma_sq = gamma_tilde * gamma_tilde + kappa * kappa;

  FlsSolution1D sol;
  sol.params = make_soliton_params(k, gamma_sq, p);
  sol.x0 = x0;
  sol.normalization = 1.0;
  sol.galilean = check_galilean(p);
  return sol;
}

CoshSoliton build_cosh_soliton(Real k, Real beta, const DerivedParams& p) {
  if (!(beta > 0.0)) throw InadmissibleParams("cosh soliton requires beta > 0");
  if (p.mu != 0.0) {
    throw InadmissibleParams("symmetric cosh soliton requires mu = 0");
  }
  const Exponents e = exponents(p.sigma, p.xi);
  if (!(e.alpha < 0.0)) {
    throw InadmissibleParams(
        "cosh soliton requires alpha < 0 (nonlinearity past the critical line)");
  }
  CoshSoliton sol;
  sol.k = k;
  sol.beta = beta;
  sol.abs_alpha = -e.alpha;
  sol.omega = dispersion_omega_from_gamma_sq(k, -beta * beta, p);
  return sol;
}

PlaneWave build_plane_wave(Real k) { return PlaneWave{k, 0.5 * k * k, 1.0}; }

Complex eval(const AnalyticSolution& sol, Real x, Real t) {
  return std::visit(
      [&](const auto& s) -> Complex {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PlaneWave>) {
          return s.amplitude * phase_factor(s.k, s.omega, x, t);
        } else if constexpr (std::is_same_v<T, FlsSolution1D>) {
          const Real gt = *s.params.gamma_tilde;
          const Real u = x - s.center(t);
          if (std::abs(gt * u) >= 0.5 * kPi) return Complex(0.0, 0.0);
          const Real a = 1.0 + s.params.delta;
          const Real modulus = std::pow(std::cos(gt * u), a) *
                               std::exp(a * s.params.kappa * u) * s.normalization;
          return modulus * phase_factor(s.params.k, s.params.omega, x, t);
        } else if constexpr (std::is_same_v<T, CoshSoliton>) {
          const Real u = x - s.k * t;
          const Real modulus =
              std::pow(std::cosh(s.beta * u), -s.abs_alpha) * s.normalization;
          return modulus * phase_factor(s.k, s.omega, x, t);
        } else {
          return Complex(
              std::exp(s.kappa * x) *
                  (s.C1 * std::exp(s.s * x) + s.C2 * std::exp(-s.s * x)),
              0.0);
        }
      },
      sol);
}

Complex time_derivative(const AnalyticSolution& sol, Real x, Real t) {
  return std::visit(
      [&](const auto& s) -> Complex {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PlaneWave>) {
          return Complex(0.0, -s.omega) * eval(sol, x, t);
        } else if constexpr (std::is_same_v<T, FlsSolution1D>) {
          const Real gt = *s.params.gamma_tilde;
          const Real u = x - s.center(t);
          if (std::abs(gt * u) >= 0.5 * kPi) {
            throw OutsideSupport("time derivative defined strictly inside the support");
          }
          const Real a = 1.0 + s.params.delta;
          // g'/g = a (kappa - gt tan(gt u))
          const Real glog = a * (s.params.kappa - gt * std::tan(gt * u));
          return Complex(-s.params.k * glog, -s.params.omega) * eval(sol, x, t);
        } else if constexpr (std::is_same_v<T, CoshSoliton>) {
          const Real u = x - s.k * t;
          const Real glog = -s.abs_alpha * s.beta * std::tanh(s.beta * u);
          return Complex(-s.k * glog, -s.omega) * eval(sol, x, t);
        } else {
          return Complex(0.0, 0.0);  // static profile
        }
      },
      sol);
}

ComplexField sample(const AnalyticSolution& sol, const Grid1D& grid, Real t) {
  ComplexField field;
  field.grid = grid;
  field.values.resize(grid.n);
  for (Index i = 0; i < grid.n; ++i) {
    field.values[i] = eval(sol, grid.point(i), t);
  }
  return field;
}

std::optional<std::pair<Real, Real>> support_interval(const AnalyticSolution& sol,
                                                      Real t) {
  if (const auto* fls = std::get_if<FlsSolution1D>(&sol)) {
    const Real c = fls->center(t);
    const Real h = fls->support_half_width();
    return std::make_pair(c - h, c + h);
  }
  return std::nullopt;
}

AnalyticSolution l2_normalized(const AnalyticSolution& sol) {
  if (const auto* fls = std::get_if<FlsSolution1D>(&sol)) {
    const Real gt = *fls->params.gamma_tilde;
    const Real a = 1.0 + fls->params.delta;
    const Real kappa = fls->params.kappa;
    const Real h = fls->support_half_width();
    const Real integral = simpson(
        [&](Real u) {
          const Real c = std::cos(gt * u);
          return (c <= 0.0) ? 0.0
                            : std::pow(c, 2.0 * a) * std::exp(2.0 * a * kappa * u);
        },
        -h, h, 1 << 14);
    FlsSolution1D out = *fls;
    out.normalization = fls->normalization / std::sqrt(integral);
    return out;
  }
  if (const auto* cosh_sol = std::get_if<CoshSoliton>(&sol)) {
    const Real a = cosh_sol->abs_alpha;
    const Real beta = cosh_sol->beta;
    // integrand ~ 2^(2a) exp(-2 a beta |u|); cut where the tail is < 1e-16
    const Real cutoff = std::max(40.0, 40.0 / (2.0 * a)) / beta;
    const Real integral = simpson(
        [&](Real u) { return std::pow(std::cosh(beta * u), -2.0 * a); }, -cutoff,
        cutoff, 1 << 15);
    CoshSoliton out = *cosh_sol;
    out.normalization = cosh_sol->normalization / std::sqrt(integral);
    return out;
  }
  throw InadmissibleParams("L2 normalization requires a normalizable solution");
}

RadialProfile radial_profile(int dim, int mode_index, Real gamma) {
  if (dim != 2 && dim != 3) throw InadmissibleParams("radial profile: dim must be 2 or 3");
  if (mode_index < 0) throw InadmissibleParams("radial profile: mode_index must be >= 0");
  if (!(gamma > 0.0)) throw InadmissibleParams("radial profile: gamma must be > 0");
  RadialProfile profile{dim, mode_index, gamma, 0.0};
  profile.first_zero = bisect_first_zero(profile, 0.1 / gamma, 20.0 / gamma);
  return profile;
}

Real radial_eval(const RadialProfile& profile, Real r) {
  if (profile.dim == 2) return cyl_bessel_j(profile.mode_index, profile.gamma * r);
  return profile.gamma * sph_bessel_j(profile.mode_index, profile.gamma * r);
}

}  // namespace ssdg
