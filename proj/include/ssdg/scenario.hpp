// JSON scenario configuration and the five command entry points behind the
// command-line tool. Everything here is deterministic given a config.
#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssdg/analytic.hpp"
#include "ssdg/coeffs.hpp"
#include "ssdg/gauge.hpp"
#include "ssdg/propagator.hpp"
#include "ssdg/types.hpp"

namespace ssdg {

// Invalid or ill-formed configuration; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SolutionKind { Fls, Cosh, PlaneWave, LinearMode };

struct SolutionSpec {
  SolutionKind kind = SolutionKind::Fls;
  Real k = 0.0;
  Real gamma_tilde = 1.0;  // FLS oscillation rate
  Real beta = 1.0;         // cosh decay rate
  Real x0 = 0.0;
  Real C1 = 1.0, C2 = 1.0, s = 0.0;  // linear mode
  bool normalize = false;
};

struct GridSpec {
  Real x_min = -20.0;
  Real x_max = 20.0;
  Index n = 2048;
};

struct PropagationSpec {
  Real T = 1.0;
  std::optional<Real> dt;  // absent = "auto" (half the stability limit)
  Scheme scheme = Scheme::RK4FD;
  int record_every = 100;
  Real density_floor = kDefaultDensityFloor;
  Real mollify_width = 0.0;
  Real perturbation = 0.0;
  unsigned seed = 0;
};

enum class ResidualScheme { Auto, CentralFD2, Spectral };

struct ResidualSpec {
  Real threshold = 1e-3;
  Real time = 0.0;
  // Auto picks spectral differentiation for plane waves (exact on
  // commensurate wavenumbers) and central differences otherwise.
  ResidualScheme scheme = ResidualScheme::Auto;
};

struct GaugeSpec {
  GaugeTransform transform;
  std::optional<std::string> input_csv;
};

struct ScenarioConfig {
  NonlinearCoeffs coeffs;
  SolutionSpec solution;
  GridSpec grid;
  PropagationSpec propagation;
  ResidualSpec residual;
  GaugeSpec gauge;
  std::optional<Real> classify_gamma_sq;
  std::vector<Real> times{0.0};  // snapshot times for the analytic command
  std::string out_dir = "out";
};

// Throws ConfigError with the offending file location / field path.
ScenarioConfig load_config(const std::string& path);

// Builds the solution selected in the config (constructor errors propagate).
AnalyticSolution build_solution(const ScenarioConfig& config);

// Each command writes its artifacts under out_dir and logs to `log`.
// Errors are reported by exception: ConfigError for configuration problems,
// the library's numerical exceptions otherwise.
void cmd_classify(const ScenarioConfig& config, const std::string& out_dir,
                  std::ostream& log);
void cmd_analytic(const ScenarioConfig& config, const std::string& out_dir,
                  std::ostream& log);
void cmd_residual(const ScenarioConfig& config, const std::string& out_dir,
                  std::ostream& log);
void cmd_evolve(const ScenarioConfig& config, const std::string& out_dir,
                std::ostream& log);
void cmd_gauge(const ScenarioConfig& config, const std::string& out_dir,
               std::ostream& log);

}  // namespace ssdg
