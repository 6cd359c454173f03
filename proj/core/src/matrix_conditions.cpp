#include "liouville/matrix_conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

#include "liouville/errors.hpp"

namespace liouville {

namespace {

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

RowMajor to_eigen(const DenseMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  return Eigen::Map<const RowMajor>(m.data().data(), n, n);
}

DenseMatrix from_eigen(const RowMajor& m) {
  DenseMatrix out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return out;
}

} // namespace

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  DenseMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      std::ostringstream msg;
      msg << "matrix row " << i << " has " << rows[i].size() << " entries, expected "
          << rows.size();
      throw InvalidArgument(msg.str());
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<double>> DenseMatrix::rows() const {
  std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

double DenseMatrix::max_norm() const noexcept {
  double best = 0.0;
  for (double v : data_) best = std::max(best, std::abs(v));
  return best;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.size();
  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

InteractionMatrix::InteractionMatrix(DenseMatrix entries)
    : entries_(std::move(entries)), cache_(std::make_shared<InverseCache>()) {
  if (entries_.size() == 0) throw InvalidArgument("interaction matrix must be at least 1x1");
  if (entries_.size() > kMaxSystemSize)
    throw InvalidArgument("interaction matrix larger than 64x64 is not supported");
  for (double v : entries_.data())
    if (!std::isfinite(v)) throw InvalidArgument("interaction matrix has a non-finite entry");
}

void InteractionMatrix::ensure_inverse() const {
  std::call_once(cache_->once, [this] {
    const RowMajor a = to_eigen(entries_);
    const Eigen::Index n = a.rows();

    Eigen::JacobiSVD<RowMajor> svd(a);
    const auto& s = svd.singularValues();
    const double smax = s(0);
    const double smin = s(n - 1);
    cache_->condition =
        smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();

    if (!(cache_->condition <= kMaxConditionNumber)) {
      std::ostringstream msg;
      msg << "matrix is not invertible (condition number " << cache_->condition
          << " exceeds " << kMaxConditionNumber << ")";
      cache_->error = std::make_exception_ptr(SingularMatrix(msg.str()));
      return;
    }

    RowMajor inv = a.fullPivLu().inverse();
    const RowMajor eye = RowMajor::Identity(n, n);
    const double bound = 1e-10 * std::max(entries_.max_norm(), 1.0);
    // Newton-Schulz refinement for moderately ill-conditioned inputs.
    for (int pass = 0; pass < 3; ++pass) {
      const RowMajor defect = eye - a * inv;
      if (defect.cwiseAbs().maxCoeff() <= bound) break;
      inv += inv * defect;
    }
    const double residual = (a * inv - eye).cwiseAbs().maxCoeff();
    if (!(residual <= bound)) {
      std::ostringstream msg;
      msg << "inverse residual " << residual << " exceeds " << bound;
      cache_->error = std::make_exception_ptr(SingularMatrix(msg.str()));
      return;
    }
    cache_->inverse = from_eigen(inv);
  });
}

const DenseMatrix& InteractionMatrix::inverse() const {
  ensure_inverse();
  if (cache_->error) std::rethrow_exception(cache_->error);
  return cache_->inverse;
}

double InteractionMatrix::condition_number() const {
  ensure_inverse();
  return cache_->condition;
}

double InteractionMatrix::quadratic_form(std::span<const double> x) const {
  if (x.size() != n()) throw InvalidArgument("vector length does not match matrix size");
  double total = 0.0;
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j) total += entries_(i, j) * x[i] * x[j];
  return total;
}

std::vector<double> InteractionMatrix::apply(std::span<const double> x) const {
  if (x.size() != n()) throw InvalidArgument("vector length does not match matrix size");
  std::vector<double> out(n(), 0.0);
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j) out[i] += entries_(i, j) * x[j];
  return out;
}

InteractionMatrix InteractionMatrix::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != n()) throw InvalidArgument("permutation length does not match matrix size");
  DenseMatrix out(n());
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j) out(i, j) = entries_(perm[i], perm[j]);
  return InteractionMatrix(std::move(out));
}

InteractionMatrix InteractionMatrix::scaled(double c) const {
  DenseMatrix out = entries_;
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j) out(i, j) *= c;
  return InteractionMatrix(std::move(out));
}

bool ConditionReport::violates(const std::string& condition) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.condition == condition; });
}

void ConditionReport::merge(const ConditionReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

DenseMatrix invert(const InteractionMatrix& a) { return a.inverse(); }

bool irreducible(const InteractionMatrix& a) {
  const std::size_t n = a.n();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[j] || j == i) continue;
      if (std::abs(a(i, j)) > 0.0 || std::abs(a(j, i)) > 0.0) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == n;
}

ConditionReport check_h1(const InteractionMatrix& a, double tol) {
  ConditionReport report;
  const std::size_t n = a.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double gap = std::abs(a(i, j) - a(j, i));
      if (gap > tol) report.violations.push_back({"symmetric", {i, j}, gap});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) < -tol) report.violations.push_back({"nonnegative", {i, j}, a(i, j)});
  if (!irreducible(a)) report.violations.push_back({"irreducible", {}, 0.0});
  try {
    a.inverse();
  } catch (const SingularMatrix&) {
    report.violations.push_back({"invertible", {}, a.condition_number()});
  }
  return report;
}

ConditionReport check_h2(const InteractionMatrix& a, double tol) {
  const DenseMatrix& inv = a.inverse();
  ConditionReport report;
  const std::size_t n = a.n();
  for (std::size_t i = 0; i < n; ++i)
    if (inv(i, i) > tol) report.violations.push_back({"inverse_diagonal_nonpositive", {i, i}, inv(i, i)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && inv(i, j) < -tol)
        report.violations.push_back({"inverse_offdiagonal_nonnegative", {i, j}, inv(i, j)});
  const std::vector<double> sums = inverse_row_sums(a);
  for (std::size_t i = 0; i < n; ++i)
    if (sums[i] < -tol) report.violations.push_back({"inverse_row_sum_nonnegative", {i}, sums[i]});
  return report;
}

std::vector<double> inverse_row_sums(const InteractionMatrix& a) {
  const DenseMatrix& inv = a.inverse();
  std::vector<double> sums(a.n(), 0.0);
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) sums[i] += inv(i, j);
  return sums;
}

} // namespace liouville
