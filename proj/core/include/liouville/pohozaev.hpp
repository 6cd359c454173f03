#pragma once

#include <cstddef>
#include <vector>

#include "liouville/matrix_conditions.hpp"

namespace liouville {

// Local masses sigma_i at a blowup point of weight mu = 1 + gamma.
struct MassVector {
  std::vector<double> sigma;
  double mu = 1.0;
};

// sum_ij a_ij sigma_i sigma_j - 4 mu sum_i sigma_i
double pohozaev_residual(const InteractionMatrix& a, const MassVector& m);

// The point t*d (t > 0) on the Pohozaev hypersurface along a positive direction.
MassVector solve_mass_on_hypersurface(const InteractionMatrix& a, double mu,
                                      const std::vector<double>& direction);

// m_i = sum_j a_ij sigma_j > 2 mu for every i.
ConditionReport minimal_mass_check(const InteractionMatrix& a, const MassVector& m);

// Masses at a second simple blowup point of weight mu_q: (mu_q / mu_p) sigma.
MassVector energy_scaling_between_points(const MassVector& sigma_p, double mu_q);

// Non-simple blowup needs 1 + gamma to be a positive integer.
bool nonsimple_blowup_admissible(double gamma, double tol = 1e-9);

// sigma_{i,l} = rho_i mu_l / (2 pi sum_s mu_s); row i sums to rho_i / (2 pi).
std::vector<std::vector<double>> local_mass_split(const std::vector<double>& rho,
                                                  const std::vector<double>& mus);

// sum_ij a_ij rho_i rho_j - 8 pi (sum_l mu_l)(sum_i rho_i)
double critical_surface_from_blowup(const InteractionMatrix& a, const std::vector<double>& rho,
                                    const std::vector<double>& mus);

} // namespace liouville
