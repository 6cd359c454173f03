#include <algorithm>
#include <cmath>
#include <numbers>

#include "liouville/errors.hpp"
#include "liouville/torus/grid.hpp"

namespace liouville::torus {

namespace {

constexpr double kFourPiSquared = 4.0 * std::numbers::pi * std::numbers::pi;

} // namespace

TorusGrid::TorusGrid(std::size_t resolution) : m_(resolution) {
  if (m_ < 4 || m_ % 2 != 0) throw InvalidArgument("grid resolution must be an even number >= 4");
  transform_ = std::make_shared<const SpectralTransform>(m_);
}

TorusPoint TorusGrid::node(std::size_t i, std::size_t j) const {
  const double h = 1.0 / static_cast<double>(m_);
  return {static_cast<double>(i) * h, static_cast<double>(j) * h};
}

int TorusGrid::wavenumber(std::size_t idx) const noexcept {
  const auto k = static_cast<int>(idx);
  const auto m = static_cast<int>(m_);
  return k <= m / 2 ? k : k - m;
}

GridFunction TorusGrid::laplacian(std::span<const double> f) const {
  auto spectrum = transform_->forward(f);
  const std::size_t cols = m_ / 2 + 1;
  for (std::size_t a = 0; a < m_; ++a) {
    const double k1 = wavenumber(a);
    for (std::size_t b = 0; b < cols; ++b) {
      const double k2 = static_cast<double>(b);
      spectrum[a * cols + b] *= -kFourPiSquared * (k1 * k1 + k2 * k2);
    }
  }
  return transform_->backward(spectrum);
}

GridFunction TorusGrid::inverse_laplacian(std::span<const double> f) const {
  auto spectrum = transform_->forward(f);
  const std::size_t cols = m_ / 2 + 1;
  for (std::size_t a = 0; a < m_; ++a) {
    const double k1 = wavenumber(a);
    for (std::size_t b = 0; b < cols; ++b) {
      const double k2 = static_cast<double>(b);
      const double k_sq = k1 * k1 + k2 * k2;
      spectrum[a * cols + b] = k_sq == 0.0 ? 0.0 : spectrum[a * cols + b] / (-kFourPiSquared * k_sq);
    }
  }
  return transform_->backward(spectrum);
}

double TorusGrid::mean(std::span<const double> f) const {
  double total = 0.0;
  for (double v : f) total += v;
  return total * weight();
}

double TorusGrid::inner(std::span<const double> f, std::span<const double> g) const {
  double total = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) total += f[k] * g[k];
  return total * weight();
}

double TorusGrid::l2_norm(std::span<const double> f) const { return std::sqrt(inner(f, f)); }

void TorusGrid::project_mean_zero(std::span<double> f) const {
  const double avg = mean(f);
  for (double& v : f) v -= avg;
}

FieldSet FieldSet::zeros(std::size_t n, std::size_t resolution) {
  return {resolution, std::vector<GridFunction>(n, GridFunction(resolution * resolution, 0.0))};
}

double FieldSet::max_abs() const noexcept {
  double best = 0.0;
  for (const auto& c : components)
    for (double v : c) best = std::max(best, std::abs(v));
  return best;
}

double FieldSet::l2_norm() const noexcept {
  double total = 0.0;
  std::size_t count = 0;
  for (const auto& c : components) {
    for (double v : c) total += v * v;
    count = c.size();
  }
  return count == 0 ? 0.0 : std::sqrt(total / static_cast<double>(count));
}

} // namespace liouville::torus
