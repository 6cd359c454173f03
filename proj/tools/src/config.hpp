#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liouville/critical_spectrum.hpp"
#include "liouville/degree.hpp"
#include "liouville/generating_series.hpp"
#include "liouville/torus/solver.hpp"
#include "liouville/torus/weights.hpp"

namespace liouville::app {

// Malformed or unreadable input; the message names the file and field.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SolverSection {
  std::size_t resolution = 64;
  double tol = 1e-8;
  std::size_t steps = 10;
};

struct CapsSection {
  double exponent_cap = kDefaultCap;
  double tolerance = kDefaultCriticalTol;
};

struct PohozaevSection {
  std::optional<std::vector<double>> sigma;
  double mu = 1.0;
  std::optional<std::vector<double>> direction;
  std::optional<std::vector<double>> mus;
};

struct InstanceConfig {
  std::string source;  // file name used in messages
  std::optional<std::vector<std::vector<double>>> matrix;
  std::optional<std::vector<double>> rho;
  bool rho_induced = false;  // "rho": "induced"
  std::optional<SurfaceSpec> surface;
  std::vector<double> gammas;
  std::optional<std::vector<TorusPoint>> positions;
  SolverSection solver;
  CapsSection caps;
  std::optional<std::vector<torus::SmoothFactor>> weights;
  std::optional<PohozaevSection> pohozaev;

  SingularitySet singularities() const;
  InteractionMatrix interaction_matrix() const;
  // Explicit rho, or the masses forced by the torus normalization.
  std::vector<double> resolved_rho() const;
  ProblemInstance problem() const;
  torus::WeightSpec weight_spec() const;
};

InstanceConfig parse_config(const std::string& text, const std::string& source);
InstanceConfig load_config(const std::string& path);

} // namespace liouville::app
