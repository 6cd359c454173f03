#include "liouville/critical_spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "liouville/errors.hpp"

namespace liouville {

SingularitySet::SingularitySet(std::vector<double> gammas,
                               std::optional<std::vector<TorusPoint>> positions)
    : gammas_(std::move(gammas)), positions_(std::move(positions)) {
  if (gammas_.size() > kMaxSources)
    throw InvalidArgument("at most 20 singular sources are supported");
  for (std::size_t l = 0; l < gammas_.size(); ++l) {
    if (!std::isfinite(gammas_[l]) || gammas_[l] <= -1.0) {
      std::ostringstream msg;
      msg << "singularity " << l << ": gamma must be finite and > -1, got " << gammas_[l];
      throw InvalidArgument(msg.str());
    }
  }
  if (!positions_) return;
  if (positions_->size() != gammas_.size())
    throw InvalidArgument("singularity positions and strengths differ in length");
  for (std::size_t l = 0; l < positions_->size(); ++l) {
    const TorusPoint& p = (*positions_)[l];
    for (double c : p)
      if (!(c >= 0.0 && c < 1.0)) {
        std::ostringstream msg;
        msg << "singularity " << l << ": position must lie in [0,1)^2";
        throw InvalidArgument(msg.str());
      }
    for (std::size_t r = 0; r < l; ++r)
      if ((*positions_)[r] == p) {
        std::ostringstream msg;
        msg << "singularities " << r << " and " << l << " share a position";
        throw InvalidArgument(msg.str());
      }
  }
}

double SingularitySet::gamma_sum() const noexcept {
  double total = 0.0;
  for (double g : gammas_) total += g;
  return total;
}

bool SingularitySet::all_positive_integers(double tol) const noexcept {
  return std::all_of(gammas_.begin(), gammas_.end(), [tol](double g) {
    return g >= 1.0 - tol && std::abs(g - std::round(g)) <= tol;
  });
}

double ExponentKey::value(const std::vector<double>& gammas) const {
  double v = static_cast<double>(m);
  for (std::size_t l = 0; l < gammas.size(); ++l)
    if (subset & (1u << l)) v += 1.0 + gammas[l];
  return v;
}

std::vector<double> subset_weight_sums(const std::vector<double>& gammas) {
  const std::size_t count = std::size_t{1} << gammas.size();
  std::vector<double> sums(count, 0.0);
  for (std::size_t s = 1; s < count; ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    sums[s] = sums[s & (s - 1)] + (1.0 + gammas[low]);
  }
  return sums;
}

std::vector<double> merge_sorted(const std::vector<double>& sorted, double tol) {
  std::vector<double> out;
  double previous = 0.0;
  for (double v : sorted) {
    if (out.empty() || v - previous > tol) out.push_back(v);
    previous = v;
  }
  return out;
}

std::optional<std::size_t> CriticalSpectrum::find(double x) const {
  auto it = std::lower_bound(levels.begin(), levels.end(), x - merge_tol);
  if (it != levels.end() && std::abs(*it - x) <= merge_tol)
    return static_cast<std::size_t>(it - levels.begin());
  return std::nullopt;
}

CriticalSpectrum enumerate_spectrum(const SingularitySet& s, double cap, double merge_tol,
                                    std::size_t max_levels) {
  if (!(cap > 0.0) || !std::isfinite(cap)) throw InvalidArgument("spectrum cap must be positive");
  if (!(merge_tol >= 0.0)) throw InvalidArgument("merge tolerance must be nonnegative");

  const std::vector<double> sums = subset_weight_sums(s.gammas());

  std::size_t candidates = 0;
  for (double base : sums)
    if (base <= cap) candidates += static_cast<std::size_t>(std::floor(cap - base)) + 1;
  if (candidates > max_levels) {
    std::ostringstream msg;
    msg << "spectrum up to cap " << cap << " has " << candidates << " candidate levels (limit "
        << max_levels << ")";
    throw TooManyLevels(msg.str());
  }

  std::vector<double> values;
  values.reserve(candidates);
  const auto m_max = static_cast<std::uint32_t>(std::ceil(cap));
  for (double base : sums) {
    for (std::uint32_t m = 0; m <= m_max; ++m) {
      const double v = base + m;
      if (v > cap) break;
      if (v > 0.0) values.push_back(v);
    }
  }
  std::sort(values.begin(), values.end());

  CriticalSpectrum spectrum;
  spectrum.levels = merge_sorted(values, merge_tol);
  spectrum.cap = cap;
  spectrum.merge_tol = merge_tol;
  return spectrum;
}

std::size_t locate_region(double q, const CriticalSpectrum& spectrum, double tol) {
  if (!(q > 0.0)) throw InvalidArgument("normalized energy must be positive");
  const auto& levels = spectrum.levels;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (std::abs(q - levels[k]) <= tol) {
      std::ostringstream msg;
      msg << "q = " << q << " lies on critical level n_" << (k + 1) << " = " << levels[k];
      throw OnCriticalSurface(k + 1, levels[k], msg.str());
    }
  }
  if (levels.empty() || q > levels.back()) {
    std::ostringstream msg;
    msg << "q = " << q << " exceeds the largest enumerated level (cap " << spectrum.cap << ")";
    throw OutOfRange(msg.str());
  }
  return static_cast<std::size_t>(std::upper_bound(levels.begin(), levels.end(), q) -
                                  levels.begin());
}

} // namespace liouville
