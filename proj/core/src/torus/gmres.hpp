#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace liouville::torus::detail {

struct GmresResult {
  std::vector<double> x;
  std::size_t iterations = 0;
  double relative_residual = 0.0;
  bool converged = false;
};

using LinearOperator = std::function<std::vector<double>(const std::vector<double>&)>;

// Unrestarted GMRES from a zero initial guess with modified Gram-Schmidt
// Arnoldi and Givens rotations.
GmresResult gmres(const LinearOperator& op, const std::vector<double>& rhs, double rel_tol,
                  std::size_t max_iterations);

} // namespace liouville::torus::detail
