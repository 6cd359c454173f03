#include "liouville/torus/solver.hpp"

#include <cmath>
#include <sstream>

#include "gmres.hpp"
#include "liouville/errors.hpp"

namespace liouville::torus {

namespace {

FieldSet unflatten(const std::vector<double>& flat, std::size_t n, std::size_t resolution) {
  FieldSet f{resolution, {}};
  const std::size_t points = resolution * resolution;
  for (std::size_t i = 0; i < n; ++i)
    f.components.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(i * points),
                              flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * points));
  return f;
}

// Delta^{-1} J d = d + Delta^{-1} sum_j a_ij rho_j P_j (d_j - <P_j d_j>) on mean-zero d.
std::vector<double> preconditioned_jacobian(const std::vector<double>& flat, const Densities& d,
                                            const InteractionMatrix& a,
                                            const std::vector<double>& rho,
                                            const TorusGrid& grid) {
  const std::size_t n = a.n();
  const std::size_t points = grid.points();
  std::vector<GridFunction> response(n, GridFunction(points));
  for (std::size_t j = 0; j < n; ++j) {
    const std::span<const double> dj(flat.data() + j * points, points);
    const double avg = grid.inner(d.normalized[j], dj);
    for (std::size_t k = 0; k < points; ++k) response[j][k] = d.normalized[j][k] * (dj[k] - avg);
  }
  std::vector<double> out(flat.size());
  GridFunction coupled(points);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(coupled.begin(), coupled.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double c = a(i, j) * rho[j];
      if (c == 0.0) continue;
      for (std::size_t k = 0; k < points; ++k) coupled[k] += c * response[j][k];
    }
    const GridFunction smoothed = grid.inverse_laplacian(coupled);
    const std::span<const double> di(flat.data() + i * points, points);
    const double di_mean = grid.mean(di);
    for (std::size_t k = 0; k < points; ++k) out[i * points + k] = di[k] - di_mean + smoothed[k];
  }
  return out;
}

} // namespace

SolveResult solve_continuation(const ProblemInstance& p, const WeightSpec& w,
                               const TorusGrid& grid, const SolverOptions& opts) {
  p.validate();
  const std::size_t n = p.matrix.n();
  if (w.smooth_factors.size() != n)
    throw InvalidArgument("weight spec must provide one smooth factor per component");
  if (opts.steps == 0 || !(opts.t0 > 0.0 && opts.t0 <= 1.0))
    throw InvalidArgument("continuation needs at least one step and t0 in (0, 1]");

  const double q = normalized_energy(p.rho, p.matrix);
  const CriticalSpectrum spectrum = enumerate_spectrum(w.singularities, 2.0);
  const double first_level = spectrum.levels.front();
  if (!(q < first_level)) {
    std::ostringstream msg;
    msg << "normalized energy q = " << q << " is not below the first critical level "
        << first_level;
    throw PreconditionFailed(msg.str());
  }

  const std::vector<GridFunction> h = build_weights(w, grid);
  SolveResult result;
  result.u = FieldSet::zeros(n, grid.resolution());

  for (std::size_t s = 0; s < opts.steps; ++s) {
    const double t = s + 1 == opts.steps
                         ? 1.0
                         : opts.t0 + (1.0 - opts.t0) * static_cast<double>(s) /
                                         static_cast<double>(opts.steps - 1);
    ProblemInstance scaled = p;
    for (double& r : scaled.rho) r *= t;

    StepLog step;
    step.t = t;
    FieldSet r = residual(result.u, scaled, h, grid);
    double norm = r.l2_norm();
    step.residual_history.push_back(norm);

    while (norm > opts.tol) {
      if (step.newton_iterations == opts.max_newton) {
        std::ostringstream msg;
        msg << "Newton did not converge at t = " << t << " after " << opts.max_newton
            << " iterations; last residual " << norm;
        throw NoConvergence(msg.str());
      }
      const Densities d = compute_densities(result.u, h, grid);
      std::vector<double> rhs;
      for (const auto& c : r.components) {
        GridFunction g = grid.inverse_laplacian(c);
        for (double& v : g) v = -v;
        rhs.insert(rhs.end(), g.begin(), g.end());
      }
      const detail::GmresResult lin = detail::gmres(
          [&](const std::vector<double>& x) {
            return preconditioned_jacobian(x, d, scaled.matrix, scaled.rho, grid);
          },
          rhs, opts.linear_tol, opts.max_linear);
      step.linear_iterations += lin.iterations;
      FieldSet delta = unflatten(lin.x, n, grid.resolution());
      for (auto& c : delta.components) grid.project_mean_zero(c);

      double lambda = 1.0;
      while (true) {
        FieldSet trial = result.u;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t k = 0; k < grid.points(); ++k)
            trial.components[i][k] += lambda * delta.components[i][k];
          grid.project_mean_zero(trial.components[i]);
        }
        FieldSet trial_r = residual(trial, scaled, h, grid);
        const double trial_norm = trial_r.l2_norm();
        if (std::isfinite(trial_norm) && trial_norm < norm) {
          result.u = std::move(trial);
          r = std::move(trial_r);
          norm = trial_norm;
          break;
        }
        lambda *= 0.5;
        if (lambda < opts.damping_floor) {
          std::ostringstream msg;
          msg << "damping fell below " << opts.damping_floor << " at t = " << t
              << "; residual " << norm;
          throw StepFailure(msg.str());
        }
      }
      ++step.newton_iterations;
      step.residual_history.push_back(norm);
    }
    step.max_abs_u = result.u.max_abs();
    result.log.push_back(std::move(step));
    result.final_residual = norm;
  }
  return result;
}

VerificationReport verify_solution(const FieldSet& u, const ProblemInstance& p,
                                   const WeightSpec& w, const TorusGrid& grid) {
  const std::vector<GridFunction> h = build_weights(w, grid);
  VerificationReport report;
  const FieldSet r = residual(u, p, h, grid);
  double total = 0.0;
  for (const auto& ri : r.components) {
    const double l2 = grid.l2_norm(ri);
    double peak = 0.0;
    for (double v : ri) peak = std::max(peak, std::abs(v));
    report.residual_l2.push_back(l2);
    report.residual_max.push_back(peak);
    report.residual_mean.push_back(grid.mean(ri));
    total += l2 * l2;
  }
  report.total_residual_l2 = std::sqrt(total);

  const Densities d = compute_densities(u, h, grid);
  for (std::size_t i = 0; i < u.n(); ++i) {
    report.mean_defect.push_back(std::abs(grid.mean(u.components[i])));
    GridFunction shifted(grid.points());
    for (std::size_t k = 0; k < shifted.size(); ++k)
      shifted[k] = h[i][k] * std::exp(u.components[i][k] - d.log_mass[i]);
    report.normalized_mass.push_back(grid.mean(shifted));
  }
  try {
    report.functional = functional_J(u, p, h, grid);
  } catch (const SingularMatrix&) {
    report.functional.reset();
  }
  return report;
}

} // namespace liouville::torus
