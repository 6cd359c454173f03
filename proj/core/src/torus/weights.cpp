#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "liouville/errors.hpp"
#include "liouville/torus/weights.hpp"

namespace liouville::torus {

namespace {

constexpr double kPi = std::numbers::pi;

} // namespace

double SmoothFactor::operator()(const TorusPoint& x) const {
  double value = base;
  for (const TrigMode& m : modes)
    value += m.amplitude * std::sin(2.0 * kPi * (m.kx * x[0] + m.ky * x[1]) + m.phase);
  return value;
}

SmoothFactor SmoothFactor::translated(const TorusPoint& shift) const {
  SmoothFactor out = *this;
  for (TrigMode& m : out.modes) m.phase -= 2.0 * kPi * (m.kx * shift[0] + m.ky * shift[1]);
  return out;
}

double periodic_singular_weight(const TorusPoint& z) {
  const double s1 = std::sin(kPi * z[0]);
  const double s2 = std::sin(kPi * z[1]);
  return (s1 * s1 + s2 * s2) / (kPi * kPi);
}

std::vector<GridFunction> build_weights(const WeightSpec& w, const TorusGrid& grid) {
  const auto& gammas = w.singularities.gammas();
  for (std::size_t l = 0; l < gammas.size(); ++l)
    if (gammas[l] < 0.0) {
      std::ostringstream msg;
      msg << "singularity " << l << " has gamma " << gammas[l]
          << " < 0, outside the solver's scope";
      throw NegativeGamma(msg.str());
    }
  if (!gammas.empty() && !w.singularities.positions())
    throw InvalidArgument("torus weights need singularity positions");

  GridFunction singular(grid.points(), 1.0);
  if (!gammas.empty()) {
    const auto& positions = *w.singularities.positions();
    singular = grid.sample([&](const TorusPoint& x) {
      double factor = 1.0;
      for (std::size_t l = 0; l < gammas.size(); ++l) {
        if (gammas[l] == 0.0) continue;
        const TorusPoint z{x[0] - positions[l][0], x[1] - positions[l][1]};
        factor *= std::pow(periodic_singular_weight(z), gammas[l]);
      }
      return factor;
    });
  }

  std::vector<GridFunction> h;
  h.reserve(w.smooth_factors.size());
  for (std::size_t i = 0; i < w.smooth_factors.size(); ++i) {
    GridFunction g = grid.sample(w.smooth_factors[i]);
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (!(g[k] > 0.0)) {
        std::ostringstream msg;
        msg << "smooth factor " << i << " is not positive at grid node " << k;
        throw InvalidArgument(msg.str());
      }
      g[k] *= singular[k];
    }
    h.push_back(std::move(g));
  }
  return h;
}

GridFunction green_function(const TorusGrid& grid, const TorusPoint& q) {
  const std::size_t m = grid.resolution();
  const int half = static_cast<int>(m / 2);
  std::vector<std::complex<double>> coefficients(m * m);
  for (int k1 = -half; k1 <= half; ++k1) {
    for (int k2 = -half; k2 <= half; ++k2) {
      if (k1 == 0 && k2 == 0) continue;
      const double k_sq = static_cast<double>(k1 * k1 + k2 * k2);
      const double phase = -2.0 * kPi * (k1 * q[0] + k2 * q[1]);
      const auto a = static_cast<std::size_t>((k1 + static_cast<int>(m)) % static_cast<int>(m));
      const auto b = static_cast<std::size_t>((k2 + static_cast<int>(m)) % static_cast<int>(m));
      coefficients[a * m + b] += std::polar(1.0 / (4.0 * kPi * kPi * k_sq), phase);
    }
  }
  return grid.transform().synthesize(coefficients);
}

} // namespace liouville::torus
