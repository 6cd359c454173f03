#pragma once

#include <vector>

#include "liouville/degree.hpp"
#include "liouville/torus/grid.hpp"

namespace liouville::torus {

// Normalized densities P_j = h_j e^{u_j} / <h_j e^{u_j}> (grid mean 1) and the
// logarithms of the masses <h_j e^{u_j}>.
struct Densities {
  std::vector<GridFunction> normalized;
  std::vector<double> log_mass;
};

// Throws ZeroMassDensity when some <h_j e^{u_j}> is not positive.
Densities compute_densities(const FieldSet& u, const std::vector<GridFunction>& h,
                            const TorusGrid& grid);

// R_i = Delta u_i + sum_j a_ij rho_j (P_j - 1)
FieldSet residual(const FieldSet& u, const ProblemInstance& p, const std::vector<GridFunction>& h,
                  const TorusGrid& grid);

// J(u) = 1/2 sum_ij a^{ij} int grad u_i . grad u_j - sum_i rho_i log int h_i e^{u_i}
double functional_J(const FieldSet& u, const ProblemInstance& p,
                    const std::vector<GridFunction>& h, const TorusGrid& grid);

// L^2 representative of the first variation of J on mean-zero fields:
// G_i = sum_j a^{ij} (-Delta u_j) - rho_i (P_i - 1). Applying A to G gives -R.
FieldSet functional_gradient(const FieldSet& u, const ProblemInstance& p,
                             const std::vector<GridFunction>& h, const TorusGrid& grid);

// Derivative of the residual at the state described by `densities`:
// (J d)_i = Delta d_i + sum_j a_ij rho_j (P_j d_j - P_j <P_j d_j>).
FieldSet apply_jacobian(const FieldSet& delta, const Densities& densities,
                        const InteractionMatrix& a, const std::vector<double>& rho,
                        const TorusGrid& grid);

} // namespace liouville::torus
