#include "liouville/pohozaev.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "liouville/errors.hpp"

namespace liouville {

namespace {

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

} // namespace

double pohozaev_residual(const InteractionMatrix& a, const MassVector& m) {
  return a.quadratic_form(m.sigma) - 4.0 * m.mu * sum(m.sigma);
}

MassVector solve_mass_on_hypersurface(const InteractionMatrix& a, double mu,
                                      const std::vector<double>& direction) {
  if (direction.size() != a.n()) throw InvalidArgument("direction length does not match matrix");
  for (double d : direction)
    if (!(d > 0.0)) throw DegenerateDirection("direction must have positive components");
  const double form = a.quadratic_form(direction);
  if (!(form > 0.0)) {
    std::ostringstream msg;
    msg << "quadratic form along the direction is " << form << ", not positive";
    throw DegenerateDirection(msg.str());
  }
  const double t = 4.0 * mu * sum(direction) / form;
  MassVector out{direction, mu};
  for (double& s : out.sigma) s *= t;
  return out;
}

ConditionReport minimal_mass_check(const InteractionMatrix& a, const MassVector& m) {
  const std::vector<double> masses = a.apply(m.sigma);
  ConditionReport report;
  for (std::size_t i = 0; i < masses.size(); ++i)
    if (!(masses[i] > 2.0 * m.mu)) report.violations.push_back({"minimal_mass", {i}, masses[i]});
  return report;
}

MassVector energy_scaling_between_points(const MassVector& sigma_p, double mu_q) {
  if (!(mu_q > 0.0)) throw InvalidArgument("blowup weight must be positive");
  MassVector out{sigma_p.sigma, mu_q};
  for (double& s : out.sigma) s *= mu_q / sigma_p.mu;
  return out;
}

bool nonsimple_blowup_admissible(double gamma, double tol) {
  if (!(gamma > -1.0)) throw InvalidArgument("gamma must be > -1");
  const double mu = 1.0 + gamma;
  const double nearest = std::round(mu);
  return nearest >= 1.0 && std::abs(mu - nearest) <= tol;
}

std::vector<std::vector<double>> local_mass_split(const std::vector<double>& rho,
                                                  const std::vector<double>& mus) {
  if (mus.empty()) throw InvalidArgument("at least one blowup point is required");
  for (double mu : mus)
    if (!(mu > 0.0)) throw InvalidArgument("blowup weights must be positive");
  const double total = sum(mus);
  std::vector<std::vector<double>> split(rho.size(), std::vector<double>(mus.size()));
  for (std::size_t i = 0; i < rho.size(); ++i)
    for (std::size_t l = 0; l < mus.size(); ++l)
      split[i][l] = rho[i] * mus[l] / (2.0 * std::numbers::pi * total);
  return split;
}

double critical_surface_from_blowup(const InteractionMatrix& a, const std::vector<double>& rho,
                                    const std::vector<double>& mus) {
  const double mass = sum(rho);
  if (!(mass > 0.0)) throw ZeroMass("sum of rho must be positive");
  return a.quadratic_form(rho) - 8.0 * std::numbers::pi * sum(mus) * mass;
}

} // namespace liouville
