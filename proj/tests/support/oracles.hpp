#pragma once

// Independent reference computations used by the unit and acceptance suites.
// Nothing here calls into the library code paths it is compared against.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace liouville::oracle {

// All values m + sum_{l in A} (1 + gamma_l) in (0, cap], collected by a plain
// double loop over (m, subset), sorted and merged within tol.
inline std::vector<double> brute_force_spectrum(const std::vector<double>& gammas, double cap,
                                                double tol) {
  std::vector<double> values;
  const std::size_t subsets = std::size_t{1} << gammas.size();
  for (int m = 0; m <= static_cast<int>(std::ceil(cap)); ++m) {
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      double v = m;
      for (std::size_t l = 0; l < gammas.size(); ++l)
        if ((mask >> l) & 1u) v += 1.0 + gammas[l];
      if (v > 0.0 && v <= cap) values.push_back(v);
    }
  }
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  for (double v : values)
    if (out.empty() || v - out.back() > tol) out.push_back(v);
  return out;
}

// Truncated integer polynomial product.
inline std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a,
                                          const std::vector<std::int64_t>& b, std::size_t degree) {
  std::vector<std::int64_t> out(degree + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= degree; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j) out[i + j] += a[i] * b[j];
  return out;
}

// (1 + x + ... + x^cap)^{-chi} * prod_l (1 + x + ... + x^{gamma_l}) truncated at
// cap, for chi <= 0 and integer gamma_l >= 0.
inline std::vector<std::int64_t> brute_force_series(int chi, const std::vector<int>& gammas,
                                                    std::size_t cap) {
  std::vector<std::int64_t> acc(cap + 1, 0);
  acc[0] = 1;
  const std::vector<std::int64_t> geometric(cap + 1, 1);
  for (int r = 0; r < -chi; ++r) acc = poly_mul(acc, geometric, cap);
  for (int g : gammas) acc = poly_mul(acc, std::vector<std::int64_t>(g + 1, 1), cap);
  return acc;
}

// (1 - x)^p for p >= 0 by repeated convolution.
inline std::vector<std::int64_t> one_minus_x_power(int p, std::size_t cap) {
  std::vector<std::int64_t> acc(cap + 1, 0);
  acc[0] = 1;
  for (int r = 0; r < p; ++r) acc = poly_mul(acc, {1, -1}, cap);
  return acc;
}

// sum over |k1|,|k2| <= half, k != 0 of cos(2 pi k.(x - q)) / (4 pi^2 |k|^2).
inline double green_lattice_sum(double x1, double x2, double q1, double q2, int half) {
  const double pi = std::numbers::pi;
  double total = 0.0;
  for (int k1 = -half; k1 <= half; ++k1)
    for (int k2 = -half; k2 <= half; ++k2) {
      if (k1 == 0 && k2 == 0) continue;
      total += std::cos(2.0 * pi * (k1 * (x1 - q1) + k2 * (x2 - q2))) /
               (4.0 * pi * pi * (k1 * k1 + k2 * k2));
    }
  return total;
}

// sum over |k1|,|k2| <= half, k != 0 of cos(2 pi k.(x - q)).
inline double delta_projection(double x1, double x2, double q1, double q2, int half) {
  const double pi = std::numbers::pi;
  double total = 0.0;
  for (int k1 = -half; k1 <= half; ++k1)
    for (int k2 = -half; k2 <= half; ++k2) {
      if (k1 == 0 && k2 == 0) continue;
      total += std::cos(2.0 * pi * (k1 * (x1 - q1) + k2 * (x2 - q2)));
    }
  return total;
}

// The hypotheses for a symmetric 2x2 matrix, stated directly.
inline bool n2_characterization(double a11, double a12, double a22) {
  const double det = a11 * a22 - a12 * a12;
  return a11 >= 0 && a12 >= 0 && a22 >= 0 && std::max(a11, a22) <= a12 && det != 0.0;
}

// The hypotheses for [[0,a1,a2],[a1,0,a3],[a2,a3,0]], stated directly.
inline bool a1_characterization(double a1, double a2, double a3) {
  return a1 > 0 && a2 > 0 && a3 > 0 && a1 + a2 >= a3 && a1 + a3 >= a2 && a2 + a3 >= a1;
}

// Bisection root of c^2 Q - c L = 0 on (lo, hi) for the positive scaling along
// a direction; used to check the closed-form hypersurface solution.
inline double bisect_positive_root(double quadratic, double linear, double lo, double hi) {
  auto f = [&](double c) { return c * c * quadratic - c * linear; };
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((f(lo) < 0) == (f(mid) < 0)) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace liouville::oracle
