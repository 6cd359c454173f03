#include <algorithm>
#include <cmath>
#include <sstream>

#include "liouville/errors.hpp"
#include "liouville/torus/system.hpp"

namespace liouville::torus {

namespace {

void check_shapes(const FieldSet& u, const ProblemInstance& p, const std::vector<GridFunction>& h,
                  const TorusGrid& grid) {
  if (u.n() != p.matrix.n() || h.size() != p.matrix.n() || p.rho.size() != p.matrix.n())
    throw InvalidArgument("field, weight and matrix sizes disagree");
  if (u.resolution != grid.resolution()) throw InvalidArgument("field resolution differs from grid");
}

} // namespace

Densities compute_densities(const FieldSet& u, const std::vector<GridFunction>& h,
                            const TorusGrid& grid) {
  Densities out;
  for (std::size_t j = 0; j < u.n(); ++j) {
    const GridFunction& uj = u.components[j];
    const double shift = *std::max_element(uj.begin(), uj.end());
    GridFunction density(uj.size());
    for (std::size_t k = 0; k < uj.size(); ++k) density[k] = h[j][k] * std::exp(uj[k] - shift);
    const double scaled_mass = grid.mean(density);
    if (!(scaled_mass > 0.0)) {
      std::ostringstream msg;
      msg << "component " << j + 1 << " has nonpositive mass <h e^u>";
      throw ZeroMassDensity(msg.str());
    }
    for (double& v : density) v /= scaled_mass;
    out.normalized.push_back(std::move(density));
    out.log_mass.push_back(std::log(scaled_mass) + shift);
  }
  return out;
}

FieldSet residual(const FieldSet& u, const ProblemInstance& p, const std::vector<GridFunction>& h,
                  const TorusGrid& grid) {
  check_shapes(u, p, h, grid);
  const Densities d = compute_densities(u, h, grid);
  const std::size_t n = u.n();
  FieldSet r{u.resolution, {}};
  for (std::size_t i = 0; i < n; ++i) {
    GridFunction ri = grid.laplacian(u.components[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const double c = p.matrix(i, j) * p.rho[j];
      if (c == 0.0) continue;
      const GridFunction& pj = d.normalized[j];
      for (std::size_t k = 0; k < ri.size(); ++k) ri[k] += c * (pj[k] - 1.0);
    }
    r.components.push_back(std::move(ri));
  }
  return r;
}

double functional_J(const FieldSet& u, const ProblemInstance& p,
                    const std::vector<GridFunction>& h, const TorusGrid& grid) {
  check_shapes(u, p, h, grid);
  const DenseMatrix& inv = p.matrix.inverse();
  const std::size_t n = u.n();

  std::vector<GridFunction> lap;
  lap.reserve(n);
  for (const auto& c : u.components) lap.push_back(grid.laplacian(c));

  double energy = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (inv(i, j) != 0.0) energy -= inv(i, j) * grid.inner(u.components[i], lap[j]);

  const Densities d = compute_densities(u, h, grid);
  double log_terms = 0.0;
  for (std::size_t i = 0; i < n; ++i) log_terms += p.rho[i] * d.log_mass[i];
  return 0.5 * energy - log_terms;
}

FieldSet functional_gradient(const FieldSet& u, const ProblemInstance& p,
                             const std::vector<GridFunction>& h, const TorusGrid& grid) {
  check_shapes(u, p, h, grid);
  const DenseMatrix& inv = p.matrix.inverse();
  const std::size_t n = u.n();
  const Densities d = compute_densities(u, h, grid);

  std::vector<GridFunction> lap;
  lap.reserve(n);
  for (const auto& c : u.components) lap.push_back(grid.laplacian(c));

  FieldSet g = FieldSet::zeros(n, u.resolution);
  for (std::size_t i = 0; i < n; ++i) {
    GridFunction& gi = g.components[i];
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < gi.size(); ++k) gi[k] -= inv(i, j) * lap[j][k];
    for (std::size_t k = 0; k < gi.size(); ++k) gi[k] -= p.rho[i] * (d.normalized[i][k] - 1.0);
    grid.project_mean_zero(gi);
  }
  return g;
}

FieldSet apply_jacobian(const FieldSet& delta, const Densities& densities,
                        const InteractionMatrix& a, const std::vector<double>& rho,
                        const TorusGrid& grid) {
  const std::size_t n = delta.n();
  std::vector<GridFunction> response(n);
  for (std::size_t j = 0; j < n; ++j) {
    const GridFunction& pj = densities.normalized[j];
    const GridFunction& dj = delta.components[j];
    const double avg = grid.inner(pj, dj);
    response[j].resize(dj.size());
    for (std::size_t k = 0; k < dj.size(); ++k) response[j][k] = pj[k] * (dj[k] - avg);
  }
  FieldSet out{delta.resolution, {}};
  for (std::size_t i = 0; i < n; ++i) {
    GridFunction oi = grid.laplacian(delta.components[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const double c = a(i, j) * rho[j];
      if (c == 0.0) continue;
      for (std::size_t k = 0; k < oi.size(); ++k) oi[k] += c * response[j][k];
    }
    out.components.push_back(std::move(oi));
  }
  return out;
}

} // namespace liouville::torus
