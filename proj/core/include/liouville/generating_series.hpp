#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "liouville/critical_spectrum.hpp"

namespace liouville {

inline constexpr double kDefaultCap = 20.0;

struct SeriesTerm {
  double exponent = 0.0;
  std::int64_t coefficient = 0;

  friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

// Finite sum of c * x^e with integer coefficients and real exponents
// e = m + sum_{l in S} (1 + gamma_l) <= cap. Exponents are stored as exact
// (m, S) keys against the list of factors multiplied in so far; numeric values
// are derived on demand and terms whose values agree within merge_tol are
// combined.
class GeneralizedSeries {
public:
  GeneralizedSeries(double cap, double merge_tol);

  double cap() const noexcept { return cap_; }
  double merge_tol() const noexcept { return merge_tol_; }
  // Exponent shifts 1 + gamma of the singular factors applied so far.
  const std::vector<double>& gammas() const noexcept { return gammas_; }

  // Nonzero terms in increasing exponent order.
  std::vector<SeriesTerm> terms() const;
  std::int64_t coefficient_at(double exponent) const;
  std::size_t size() const noexcept { return terms_.size(); }

  // Coefficients at the integer exponents 0..floor(cap); only meaningful when
  // every exponent is an integer.
  std::vector<std::int64_t> integer_coefficients() const;

  friend GeneralizedSeries expand_base(int chi, int sources, double cap, double merge_tol);
  friend GeneralizedSeries multiply_singular_factor(const GeneralizedSeries& s, double gamma);

private:
  struct KeyedTerm {
    ExponentKey key;
    std::int64_t coefficient = 0;
  };

  double value_of(const ExponentKey& key) const { return key.value(gammas_); }
  void normalize(std::vector<KeyedTerm> raw);

  double cap_;
  double merge_tol_;
  std::vector<double> gammas_;
  std::vector<KeyedTerm> terms_;
};

// (1 - x)^{chi - N} at the integer exponents 0..floor(cap). For chi - N < 0 this
// is the formal series (1 + x + x^2 + ...)^{N - chi}.
GeneralizedSeries expand_base(int chi, int sources, double cap,
                              double merge_tol = kDefaultMergeTol);

// s * (1 - x^{1 + gamma}), truncated at s.cap().
GeneralizedSeries multiply_singular_factor(const GeneralizedSeries& s, double gamma);

// g(x) = (1 - x)^{chi - N} * prod_l (1 - x^{1 + gamma_l})
GeneralizedSeries build_generating_function(int chi, const SingularitySet& s,
                                            double cap = kDefaultCap,
                                            double merge_tol = kDefaultMergeTol);

struct AlignedCoefficient {
  double level = 0.0;  // n_j, with n_0 = 0
  std::int64_t b = 0;  // b_j

  friend bool operator==(const AlignedCoefficient&, const AlignedCoefficient&) = default;
};

// (0, 1) followed by (n_j, b_j) for every level of the spectrum. Throws
// UnalignedExponent if g has a nonzero term off the spectrum.
std::vector<AlignedCoefficient> coefficients_aligned(const GeneralizedSeries& g,
                                                     const CriticalSpectrum& spectrum);

} // namespace liouville
