#pragma once

#include <vector>

#include "liouville/critical_spectrum.hpp"
#include "liouville/torus/grid.hpp"

namespace liouville::torus {

// amplitude * sin(2 pi (kx x1 + ky x2) + phase)
struct TrigMode {
  double amplitude = 0.0;
  int kx = 0;
  int ky = 0;
  double phase = 0.0;
};

// Smooth positive factor g(x) = base + sum of trigonometric modes.
struct SmoothFactor {
  double base = 1.0;
  std::vector<TrigMode> modes;

  double operator()(const TorusPoint& x) const;
  // x -> g(x - shift)
  SmoothFactor translated(const TorusPoint& shift) const;
};

struct WeightSpec {
  std::vector<SmoothFactor> smooth_factors;  // one per component
  SingularitySet singularities;              // positions required, gamma >= 0
};

// (sin^2(pi z1) + sin^2(pi z2)) / pi^2: periodic, positive off the lattice and
// ~|z|^2 at the origin.
double periodic_singular_weight(const TorusPoint& z);

// h_i(x) = g_i(x) * prod_l w(x - p_l)^{gamma_l}. Throws NegativeGamma for
// gamma_l < 0 and InvalidArgument when a smooth factor is not positive.
std::vector<GridFunction> build_weights(const WeightSpec& w, const TorusGrid& grid);

// Truncated Fourier series of the zero-mean Green's function of -Delta on the
// torus with pole q, summed over |k1|, |k2| <= M/2, k != 0, sampled on the grid.
GridFunction green_function(const TorusGrid& grid, const TorusPoint& q);

} // namespace liouville::torus
