#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liouville/degree.hpp"
#include "liouville/torus/grid.hpp"
#include "liouville/torus/system.hpp"
#include "liouville/torus/weights.hpp"

namespace liouville::torus {

struct SolverOptions {
  double tol = 1e-8;             // target L^2 norm of the residual
  std::size_t steps = 10;        // continuation steps t_0 < ... < 1
  double t0 = 0.1;
  std::size_t max_newton = 50;   // per continuation step
  double linear_tol = 1e-10;
  std::size_t max_linear = 200;
  double damping_floor = 1e-6;
};

struct StepLog {
  double t = 0.0;
  std::size_t newton_iterations = 0;
  std::size_t linear_iterations = 0;
  std::vector<double> residual_history;  // L^2 norm before each update and at exit
  double max_abs_u = 0.0;
};

struct SolveResult {
  FieldSet u;
  std::vector<StepLog> log;
  double final_residual = 0.0;
};

// Continuation in t*rho from u = 0 with damped Newton steps; linear systems are
// solved by GMRES on the inverse-Laplacian preconditioned Jacobian. Requires
// the normalized energy of rho to lie below the first critical level.
SolveResult solve_continuation(const ProblemInstance& p, const WeightSpec& w,
                               const TorusGrid& grid, const SolverOptions& opts = {});

struct VerificationReport {
  std::vector<double> residual_l2;
  std::vector<double> residual_max;
  std::vector<double> residual_mean;
  std::vector<double> mean_defect;        // |<u_i>|
  std::vector<double> normalized_mass;    // <h_i e^{v_i}>, v_i = u_i - log <h_i e^{u_i}>
  std::optional<double> functional;       // absent when A is singular
  double total_residual_l2 = 0.0;
};

VerificationReport verify_solution(const FieldSet& u, const ProblemInstance& p,
                                   const WeightSpec& w, const TorusGrid& grid);

} // namespace liouville::torus
