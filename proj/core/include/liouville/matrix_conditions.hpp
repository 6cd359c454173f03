#pragma once

#include <cstddef>
#include <exception>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

namespace liouville {

inline constexpr double kDefaultMatrixTol = 1e-10;
inline constexpr double kMaxConditionNumber = 1e12;
inline constexpr std::size_t kMaxSystemSize = 64;

// Dense row-major n x n matrix. Used both for the coupling matrix and its
// inverse.
class DenseMatrix {
public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  std::span<const double> data() const noexcept { return data_; }
  std::vector<std::vector<double>> rows() const;

  // Largest absolute entry.
  double max_norm() const noexcept;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

// The coupling matrix A = (a_ij) of the system together with a lazily cached
// inverse (a^{ij}). Copies share the cache; entries are immutable after
// construction, so concurrent readers see the same inverse.
class InteractionMatrix {
public:
  explicit InteractionMatrix(DenseMatrix entries);
  explicit InteractionMatrix(const std::vector<std::vector<double>>& rows)
      : InteractionMatrix(DenseMatrix::from_rows(rows)) {}
  InteractionMatrix(std::initializer_list<std::initializer_list<double>> rows)
      : InteractionMatrix(DenseMatrix::from_rows({rows.begin(), rows.end()})) {}

  std::size_t n() const noexcept { return entries_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const DenseMatrix& entries() const noexcept { return entries_; }

  // a^{ij}; throws SingularMatrix when A is not (numerically) invertible.
  const DenseMatrix& inverse() const;

  // 2-norm condition number; +inf for exactly singular matrices.
  double condition_number() const;

  // sum_{ij} a_ij x_i x_j
  double quadratic_form(std::span<const double> x) const;

  // (A x)_i
  std::vector<double> apply(std::span<const double> x) const;

  InteractionMatrix permuted(std::span<const std::size_t> perm) const;
  InteractionMatrix scaled(double c) const;

private:
  struct InverseCache {
    std::once_flag once;
    DenseMatrix inverse;
    double condition = 0.0;
    std::exception_ptr error;
  };

  void ensure_inverse() const;

  DenseMatrix entries_;
  std::shared_ptr<InverseCache> cache_;
};

struct Violation {
  std::string condition;
  std::vector<std::size_t> indices;  // 0-based witness indices
  double value = 0.0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ConditionReport {
  std::vector<Violation> violations;

  bool holds() const noexcept { return violations.empty(); }
  bool violates(const std::string& condition) const;
  void merge(const ConditionReport& other);
};

DenseMatrix invert(const InteractionMatrix& a);

// Connectivity of the undirected graph with an edge (i,j), i != j, whenever
// a_ij != 0 or a_ji != 0.
bool irreducible(const InteractionMatrix& a);

// Symmetric, non-negative, irreducible and invertible.
ConditionReport check_h1(const InteractionMatrix& a, double tol = kDefaultMatrixTol);

// Sign pattern of the inverse: a^{ii} <= 0, a^{ij} >= 0 (i != j), and
// nonnegative row sums. Throws SingularMatrix when A has no inverse.
ConditionReport check_h2(const InteractionMatrix& a, double tol = kDefaultMatrixTol);

// Row sums of the inverse, sum_j a^{ij}.
std::vector<double> inverse_row_sums(const InteractionMatrix& a);

} // namespace liouville
