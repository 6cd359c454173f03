#include <algorithm>
#include <mutex>

#include <fftw3.h>

#include "liouville/errors.hpp"
#include "liouville/torus/grid.hpp"

namespace liouville::torus {

namespace {

// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

template <class T>
struct FftwBuffer {
  explicit FftwBuffer(std::size_t count)
      : data(static_cast<T*>(fftw_malloc(sizeof(T) * std::max<std::size_t>(count, 1)))) {
    if (!data) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;

  T* data;
};

} // namespace

struct SpectralTransform::Plans {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
  fftw_plan c2c = nullptr;
};

SpectralTransform::SpectralTransform(std::size_t resolution)
    : m_(resolution), plans_(std::make_unique<Plans>()) {
  const int m = static_cast<int>(m_);
  FftwBuffer<double> real(m_ * m_);
  FftwBuffer<fftw_complex> half(half_size());
  FftwBuffer<fftw_complex> full_in(m_ * m_);
  FftwBuffer<fftw_complex> full_out(m_ * m_);

  std::lock_guard lock(planner_mutex());
  plans_->r2c = fftw_plan_dft_r2c_2d(m, m, real.data, half.data, FFTW_ESTIMATE);
  plans_->c2r = fftw_plan_dft_c2r_2d(m, m, half.data, real.data, FFTW_ESTIMATE);
  plans_->c2c =
      fftw_plan_dft_2d(m, m, full_in.data, full_out.data, FFTW_BACKWARD, FFTW_ESTIMATE);
  if (!plans_->r2c || !plans_->c2r || !plans_->c2c)
    throw InvalidArgument("FFTW could not plan the grid transforms");
}

SpectralTransform::~SpectralTransform() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plans_->r2c);
  fftw_destroy_plan(plans_->c2r);
  fftw_destroy_plan(plans_->c2c);
}

std::vector<std::complex<double>> SpectralTransform::forward(std::span<const double> field) const {
  FftwBuffer<double> in(m_ * m_);
  FftwBuffer<fftw_complex> out(half_size());
  std::copy(field.begin(), field.end(), in.data);
  fftw_execute_dft_r2c(plans_->r2c, in.data, out.data);
  std::vector<std::complex<double>> spectrum(half_size());
  for (std::size_t k = 0; k < spectrum.size(); ++k) spectrum[k] = {out.data[k][0], out.data[k][1]};
  return spectrum;
}

GridFunction SpectralTransform::backward(std::span<const std::complex<double>> half) const {
  FftwBuffer<fftw_complex> in(half_size());
  FftwBuffer<double> out(m_ * m_);
  for (std::size_t k = 0; k < half_size(); ++k) {
    in.data[k][0] = half[k].real();
    in.data[k][1] = half[k].imag();
  }
  fftw_execute_dft_c2r(plans_->c2r, in.data, out.data);
  const double scale = 1.0 / static_cast<double>(m_ * m_);
  GridFunction field(m_ * m_);
  for (std::size_t k = 0; k < field.size(); ++k) field[k] = out.data[k] * scale;
  return field;
}

GridFunction SpectralTransform::synthesize(std::span<const std::complex<double>> full) const {
  FftwBuffer<fftw_complex> in(m_ * m_);
  FftwBuffer<fftw_complex> out(m_ * m_);
  for (std::size_t k = 0; k < m_ * m_; ++k) {
    in.data[k][0] = full[k].real();
    in.data[k][1] = full[k].imag();
  }
  fftw_execute_dft(plans_->c2c, in.data, out.data);
  GridFunction field(m_ * m_);
  for (std::size_t k = 0; k < field.size(); ++k) field[k] = out.data[k][0];
  return field;
}

} // namespace liouville::torus
