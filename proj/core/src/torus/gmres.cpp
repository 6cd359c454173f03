#include "gmres.hpp"

#include <cmath>

namespace liouville::torus::detail {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

} // namespace

GmresResult gmres(const LinearOperator& op, const std::vector<double>& rhs, double rel_tol,
                  std::size_t max_iterations) {
  GmresResult result;
  result.x.assign(rhs.size(), 0.0);
  const double beta = std::sqrt(dot(rhs, rhs));
  if (beta == 0.0) {
    result.converged = true;
    return result;
  }

  std::vector<std::vector<double>> basis;
  basis.reserve(max_iterations + 1);
  basis.push_back(rhs);
  for (double& v : basis.back()) v /= beta;

  // Column-major Hessenberg entries, h[j] has j + 2 entries.
  std::vector<std::vector<double>> h;
  std::vector<double> cs, sn;
  std::vector<double> g{beta};

  std::size_t j = 0;
  for (; j < max_iterations; ++j) {
    std::vector<double> w = op(basis[j]);
    std::vector<double> col(j + 2, 0.0);
    for (std::size_t i = 0; i <= j; ++i) {
      col[i] = dot(w, basis[i]);
      for (std::size_t k = 0; k < w.size(); ++k) w[k] -= col[i] * basis[i][k];
    }
    col[j + 1] = std::sqrt(dot(w, w));

    for (std::size_t i = 0; i < j; ++i) {
      const double t = cs[i] * col[i] + sn[i] * col[i + 1];
      col[i + 1] = -sn[i] * col[i] + cs[i] * col[i + 1];
      col[i] = t;
    }
    const double r = std::hypot(col[j], col[j + 1]);
    const double c = r == 0.0 ? 1.0 : col[j] / r;
    const double s = r == 0.0 ? 0.0 : col[j + 1] / r;
    const double next_norm = col[j + 1];
    cs.push_back(c);
    sn.push_back(s);
    col[j] = r;
    col[j + 1] = 0.0;
    g.push_back(-s * g[j]);
    g[j] *= c;
    h.push_back(std::move(col));

    result.relative_residual = std::abs(g[j + 1]) / beta;
    if (result.relative_residual <= rel_tol || next_norm == 0.0) {
      ++j;
      result.converged = true;
      break;
    }
    for (double& v : w) v /= next_norm;
    basis.push_back(std::move(w));
  }
  result.iterations = j;

  // Back substitution for the least-squares coefficients.
  std::vector<double> y(j, 0.0);
  for (std::size_t ii = j; ii-- > 0;) {
    double s = g[ii];
    for (std::size_t k = ii + 1; k < j; ++k) s -= h[k][ii] * y[k];
    y[ii] = h[ii][ii] == 0.0 ? 0.0 : s / h[ii][ii];
  }
  for (std::size_t k = 0; k < j; ++k)
    for (std::size_t i = 0; i < rhs.size(); ++i) result.x[i] += y[k] * basis[k][i];
  return result;
}

} // namespace liouville::torus::detail
