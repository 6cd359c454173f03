#include "liouville/generating_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "liouville/errors.hpp"

namespace liouville {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw CoefficientOverflow("generating-function coefficient exceeds 64-bit range");
  return out;
}

std::int64_t checked_negate(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min())
    throw CoefficientOverflow("generating-function coefficient exceeds 64-bit range");
  return -a;
}

// Binomial coefficients C(top, j) for j = 0..count-1 (top >= 0).
std::vector<std::int64_t> binomial_row(std::int64_t top, std::size_t count) {
  std::vector<std::int64_t> row;
  __extension__ using Wide = __int128;
  Wide c = 1;
  for (std::size_t j = 0; j < count; ++j) {
    if (static_cast<std::int64_t>(j) > top) {
      row.push_back(0);
      continue;
    }
    if (c > std::numeric_limits<std::int64_t>::max())
      throw CoefficientOverflow("binomial coefficient exceeds 64-bit range");
    row.push_back(static_cast<std::int64_t>(c));
    c = c * (top - static_cast<std::int64_t>(j)) / static_cast<std::int64_t>(j + 1);
  }
  return row;
}

} // namespace

GeneralizedSeries::GeneralizedSeries(double cap, double merge_tol)
    : cap_(cap), merge_tol_(merge_tol) {
  if (!(cap > 0.0) || !std::isfinite(cap)) throw InvalidArgument("series cap must be positive");
  if (!(merge_tol >= 0.0)) throw InvalidArgument("merge tolerance must be nonnegative");
}

void GeneralizedSeries::normalize(std::vector<KeyedTerm> raw) {
  std::vector<std::pair<double, KeyedTerm>> valued;
  valued.reserve(raw.size());
  for (const KeyedTerm& t : raw) {
    const double v = value_of(t.key);
    if (v <= cap_ && t.coefficient != 0) valued.emplace_back(v, t);
  }
  std::sort(valued.begin(), valued.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second.key < b.second.key;
  });

  terms_.clear();
  std::size_t i = 0;
  while (i < valued.size()) {
    KeyedTerm cluster = valued[i].second;
    double previous = valued[i].first;
    std::size_t j = i + 1;
    for (; j < valued.size() && valued[j].first - previous <= merge_tol_; ++j) {
      cluster.coefficient = checked_add(cluster.coefficient, valued[j].second.coefficient);
      previous = valued[j].first;
    }
    if (cluster.coefficient != 0) terms_.push_back(cluster);
    i = j;
  }
}

std::vector<SeriesTerm> GeneralizedSeries::terms() const {
  std::vector<SeriesTerm> out;
  out.reserve(terms_.size());
  for (const KeyedTerm& t : terms_) out.push_back({value_of(t.key), t.coefficient});
  return out;
}

std::int64_t GeneralizedSeries::coefficient_at(double exponent) const {
  for (const KeyedTerm& t : terms_)
    if (std::abs(value_of(t.key) - exponent) <= merge_tol_) return t.coefficient;
  return 0;
}

std::vector<std::int64_t> GeneralizedSeries::integer_coefficients() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(std::floor(cap_)) + 1, 0);
  for (const SeriesTerm& t : terms()) {
    const double r = std::round(t.exponent);
    if (std::abs(t.exponent - r) > merge_tol_) {
      std::ostringstream msg;
      msg << "series has a non-integer exponent " << t.exponent;
      throw InvalidArgument(msg.str());
    }
    out[static_cast<std::size_t>(r)] = t.coefficient;
  }
  return out;
}

GeneralizedSeries expand_base(int chi, int sources, double cap, double merge_tol) {
  if (sources < 0) throw InvalidArgument("number of sources must be nonnegative");
  GeneralizedSeries s(cap, merge_tol);
  const auto count = static_cast<std::size_t>(std::floor(cap)) + 1;
  const std::int64_t power = static_cast<std::int64_t>(chi) - sources;

  std::vector<GeneralizedSeries::KeyedTerm> raw;
  if (power >= 0) {
    const auto row = binomial_row(power, count);
    for (std::size_t m = 0; m < count; ++m) {
      const std::int64_t c = (m % 2 == 0) ? row[m] : checked_negate(row[m]);
      raw.push_back({{static_cast<std::uint32_t>(m), 0u}, c});
    }
  } else {
    // C(m + K - 1, K - 1) = C(m + K - 1, m), built by the recurrence in m.
    const std::int64_t k = -power;
    __extension__ using Wide = __int128;
  Wide c = 1;
    for (std::size_t m = 0; m < count; ++m) {
      if (c > std::numeric_limits<std::int64_t>::max())
        throw CoefficientOverflow("binomial coefficient exceeds 64-bit range");
      raw.push_back({{static_cast<std::uint32_t>(m), 0u}, static_cast<std::int64_t>(c)});
      c = c * (static_cast<std::int64_t>(m) + k) / static_cast<std::int64_t>(m + 1);
    }
  }
  s.normalize(std::move(raw));
  return s;
}

GeneralizedSeries multiply_singular_factor(const GeneralizedSeries& s, double gamma) {
  if (!(gamma > -1.0) || !std::isfinite(gamma))
    throw InvalidArgument("singular factor requires gamma > -1");
  if (s.gammas_.size() >= 31) throw InvalidArgument("too many singular factors");

  GeneralizedSeries out(s.cap_, s.merge_tol_);
  out.gammas_ = s.gammas_;
  out.gammas_.push_back(gamma);
  const std::uint32_t bit = 1u << s.gammas_.size();

  std::vector<GeneralizedSeries::KeyedTerm> raw;
  raw.reserve(2 * s.terms_.size());
  for (const auto& t : s.terms_) {
    raw.push_back(t);
    raw.push_back({{t.key.m, t.key.subset | bit}, checked_negate(t.coefficient)});
  }
  out.normalize(std::move(raw));
  return out;
}

GeneralizedSeries build_generating_function(int chi, const SingularitySet& s, double cap,
                                            double merge_tol) {
  GeneralizedSeries g = expand_base(chi, static_cast<int>(s.size()), cap, merge_tol);
  for (double gamma : s.gammas()) g = multiply_singular_factor(g, gamma);
  return g;
}

std::vector<AlignedCoefficient> coefficients_aligned(const GeneralizedSeries& g,
                                                     const CriticalSpectrum& spectrum) {
  std::vector<AlignedCoefficient> out;
  out.reserve(spectrum.levels.size() + 1);
  out.push_back({0.0, 0});
  for (double level : spectrum.levels) out.push_back({level, 0});

  for (const SeriesTerm& t : g.terms()) {
    if (std::abs(t.exponent) <= g.merge_tol()) {
      out[0].b = checked_add(out[0].b, t.coefficient);
      continue;
    }
    const auto index = spectrum.find(t.exponent);
    if (!index) {
      std::ostringstream msg;
      msg << "series term x^" << t.exponent << " (coefficient " << t.coefficient
          << ") does not sit on any critical level";
      throw UnalignedExponent(msg.str());
    }
    out[*index + 1].b = checked_add(out[*index + 1].b, t.coefficient);
  }
  return out;
}

} // namespace liouville
