#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace liouville {

inline constexpr double kDefaultMergeTol = 1e-9;
inline constexpr std::size_t kDefaultMaxLevels = 1'000'000;
inline constexpr std::size_t kMaxSources = 20;

using TorusPoint = std::array<double, 2>;

// Dirac source strengths gamma_l > -1, optionally with positions on the unit
// torus [0,1)^2.
class SingularitySet {
public:
  SingularitySet() = default;
  explicit SingularitySet(std::vector<double> gammas,
                          std::optional<std::vector<TorusPoint>> positions = std::nullopt);

  std::size_t size() const noexcept { return gammas_.size(); }
  bool empty() const noexcept { return gammas_.empty(); }
  const std::vector<double>& gammas() const noexcept { return gammas_; }
  const std::optional<std::vector<TorusPoint>>& positions() const noexcept { return positions_; }

  // mu_l = 1 + gamma_l
  double weight(std::size_t l) const { return 1.0 + gammas_.at(l); }
  double gamma_sum() const noexcept;

  // True when every gamma is a positive integer (within tol).
  bool all_positive_integers(double tol = 1e-12) const noexcept;

private:
  std::vector<double> gammas_;
  std::optional<std::vector<TorusPoint>> positions_;
};

// Exponent m + sum_{l in subset} (1 + gamma_l), kept as the exact pair.
struct ExponentKey {
  std::uint32_t m = 0;
  std::uint32_t subset = 0;  // bit l set <=> source l belongs to the subset

  double value(const std::vector<double>& gammas) const;

  friend auto operator<=>(const ExponentKey&, const ExponentKey&) = default;
};

// Sums sum_{l in S} (1 + gamma_l) for every subset S, indexed by bitmask.
std::vector<double> subset_weight_sums(const std::vector<double>& gammas);

// Merge values that lie within tol of their predecessor into one cluster,
// represented by its minimum. Input must be sorted.
std::vector<double> merge_sorted(const std::vector<double>& sorted, double tol);

// Critical levels n_1 < n_2 < ... in units of 8*pi, truncated at cap.
struct CriticalSpectrum {
  std::vector<double> levels;
  double cap = 0.0;
  double merge_tol = kDefaultMergeTol;

  // Index (0-based) of the level within merge_tol of x, if any.
  std::optional<std::size_t> find(double x) const;
};

CriticalSpectrum enumerate_spectrum(const SingularitySet& s, double cap,
                                    double merge_tol = kDefaultMergeTol,
                                    std::size_t max_levels = kDefaultMaxLevels);

// Region index k with n_k < q < n_{k+1}, n_0 = 0. Throws OnCriticalSurface when
// q is within tol of a level and OutOfRange when q exceeds the last level.
std::size_t locate_region(double q, const CriticalSpectrum& spectrum, double tol);

} // namespace liouville
