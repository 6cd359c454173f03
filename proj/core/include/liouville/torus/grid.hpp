#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "liouville/critical_spectrum.hpp"

namespace liouville::torus {

// Row-major M x M samples: value[i * M + j] = f(i / M, j / M).
using GridFunction = std::vector<double>;

// FFTW plans for one resolution. Plans are created once; transforms allocate
// their own buffers, so a const transform may be shared between threads.
class SpectralTransform {
public:
  explicit SpectralTransform(std::size_t resolution);
  ~SpectralTransform();
  SpectralTransform(const SpectralTransform&) = delete;
  SpectralTransform& operator=(const SpectralTransform&) = delete;

  std::size_t resolution() const noexcept { return m_; }
  // Number of complex coefficients in the half spectrum, M * (M/2 + 1).
  std::size_t half_size() const noexcept { return m_ * (m_ / 2 + 1); }

  // Unnormalized forward real-to-complex DFT.
  std::vector<std::complex<double>> forward(std::span<const double> field) const;
  // Inverse of forward (includes the 1/M^2 factor).
  GridFunction backward(std::span<const std::complex<double>> half) const;
  // Real part of sum_k c_k exp(2 pi i k.x_j / M) over a full M x M coefficient
  // array (no normalization).
  GridFunction synthesize(std::span<const std::complex<double>> full) const;

private:
  struct Plans;
  std::size_t m_;
  std::unique_ptr<Plans> plans_;
};

// Uniform M x M grid on the unit flat torus [0,1)^2 (volume 1).
class TorusGrid {
public:
  explicit TorusGrid(std::size_t resolution = 64);

  std::size_t resolution() const noexcept { return m_; }
  std::size_t points() const noexcept { return m_ * m_; }
  double weight() const noexcept { return 1.0 / static_cast<double>(points()); }
  TorusPoint node(std::size_t i, std::size_t j) const;
  // Signed wavenumber of FFT index idx, in (-M/2, M/2].
  int wavenumber(std::size_t idx) const noexcept;

  const SpectralTransform& transform() const noexcept { return *transform_; }

  GridFunction laplacian(std::span<const double> f) const;
  // Solves Delta g = f for mean-zero g, discarding the mean of f.
  GridFunction inverse_laplacian(std::span<const double> f) const;

  double mean(std::span<const double> f) const;
  // Grid quadrature of f * g over the torus.
  double inner(std::span<const double> f, std::span<const double> g) const;
  double l2_norm(std::span<const double> f) const;
  void project_mean_zero(std::span<double> f) const;

  template <class Fn>
  GridFunction sample(Fn&& fn) const {
    GridFunction out(points());
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) out[i * m_ + j] = fn(node(i, j));
    return out;
  }

private:
  std::size_t m_;
  std::shared_ptr<const SpectralTransform> transform_;
};

// n unknown fields on a common grid.
struct FieldSet {
  std::size_t resolution = 0;
  std::vector<GridFunction> components;

  static FieldSet zeros(std::size_t n, std::size_t resolution);

  std::size_t n() const noexcept { return components.size(); }
  double max_abs() const noexcept;
  // sqrt(sum_i <f_i^2>) with the uniform quadrature.
  double l2_norm() const noexcept;
};

} // namespace liouville::torus
