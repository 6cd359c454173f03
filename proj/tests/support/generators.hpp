#pragma once

#include <random>
#include <vector>

#include "liouville/matrix_conditions.hpp"

namespace liouville::gen {

// Random coupling matrix satisfying both hypotheses, drawn from the families
// the hypotheses are known to admit: positive scalars, 2x2 with
// max(a11, a22) <= a12, and zero-diagonal 3x3 with the triangle inequality.
inline InteractionMatrix valid_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> family(0, 2);
  std::uniform_real_distribution<double> u(0.2, 3.0);
  switch (family(rng)) {
    case 0:
      return InteractionMatrix({{u(rng)}});
    case 1: {
      const double a12 = u(rng);
      std::uniform_real_distribution<double> diag(0.0, a12);
      return InteractionMatrix({{diag(rng), a12}, {a12, diag(rng)}});
    }
    default: {
      while (true) {
        const double a1 = u(rng), a2 = u(rng), a3 = u(rng);
        if (a1 + a2 >= a3 && a1 + a3 >= a2 && a2 + a3 >= a1)
          return InteractionMatrix({{0, a1, a2}, {a1, 0, a3}, {a2, a3, 0}});
      }
    }
  }
}

inline std::vector<double> positive_vector(std::mt19937_64& rng, std::size_t n, double lo = 0.1,
                                           double hi = 5.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

// Rescale rho so that its normalized energy equals q (the energy is
// homogeneous of degree one in rho).
inline std::vector<double> rho_with_energy(const InteractionMatrix& a, std::vector<double> rho,
                                           double q) {
  double total = 0.0;
  for (double r : rho) total += r;
  const double current = a.quadratic_form(rho) / (8.0 * 3.14159265358979323846 * total);
  for (double& r : rho) r *= q / current;
  return rho;
}

} // namespace liouville::gen
