#include <random>

#include <gtest/gtest.h>

#include "liouville/critical_spectrum.hpp"
#include "liouville/errors.hpp"
#include "support/oracles.hpp"

namespace liouville {
namespace {

using Levels = std::vector<double>;

TEST(SingularitySet, Validation) {
  EXPECT_THROW(SingularitySet({-1.0}), InvalidArgument);
  EXPECT_THROW(SingularitySet({0.5, 1.0}, std::vector<TorusPoint>{{0.1, 0.1}}), InvalidArgument);
  EXPECT_THROW(SingularitySet({0.5, 1.0}, std::vector<TorusPoint>{{0.1, 0.1}, {0.1, 0.1}}),
               InvalidArgument);
  EXPECT_THROW(SingularitySet({0.5}, std::vector<TorusPoint>{{1.0, 0.1}}), InvalidArgument);
  EXPECT_NO_THROW(SingularitySet({-0.5, 2.0}, std::vector<TorusPoint>{{0.0, 0.0}, {0.5, 0.5}}));
}

TEST(EnumerateSpectrum, NoSources) {
  EXPECT_EQ(enumerate_spectrum(SingularitySet{}, 3.5).levels, (Levels{1, 2, 3}));
}

TEST(EnumerateSpectrum, IntegerSourceCoincidesWithLadder) {
  // Brute force: m in 0..3, A in {{}, {1}} gives {1,2,3} u {2,3}.
  EXPECT_EQ(enumerate_spectrum(SingularitySet({1.0}), 3.5).levels, (Levels{1, 2, 3}));
}

TEST(EnumerateSpectrum, HalfIntegerSourceInterleaves) {
  EXPECT_EQ(enumerate_spectrum(SingularitySet({0.5}), 3.0).levels, (Levels{1, 1.5, 2, 2.5, 3}));
}

TEST(EnumerateSpectrum, NegativeStrengthAddsLevelsBelowOne) {
  // gamma = -0.75 contributes 0.25, 1.25, 2.25 ...
  EXPECT_EQ(enumerate_spectrum(SingularitySet({-0.75}), 2.5).levels,
            (Levels{0.25, 1, 1.25, 2, 2.25}));
}

TEST(EnumerateSpectrum, TooManyLevels) {
  EXPECT_THROW(enumerate_spectrum(SingularitySet{}, 100.0, 1e-9, 50), TooManyLevels);
  EXPECT_THROW(enumerate_spectrum(SingularitySet{}, 0.0), InvalidArgument);
}

TEST(EnumerateSpectrum, MatchesBruteForceOnRandomSources) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_real_distribution<double> gamma(-0.95, 4.0);
  std::uniform_real_distribution<double> cap(0.5, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> gammas(static_cast<std::size_t>(count(rng)));
    for (double& g : gammas) g = gamma(rng);
    const double c = cap(rng);
    const Levels expected = oracle::brute_force_spectrum(gammas, c, 1e-9);
    const Levels got = enumerate_spectrum(SingularitySet(gammas), c).levels;
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], expected[k], 1e-9);
  }
}

TEST(EnumerateSpectrum, EnlargingCapOnlyAppends) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> gamma(-0.9, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> gammas(3);
    for (double& g : gammas) g = gamma(rng);
    const Levels small = enumerate_spectrum(SingularitySet(gammas), 6.0).levels;
    const Levels large = enumerate_spectrum(SingularitySet(gammas), 12.0).levels;
    ASSERT_GE(large.size(), small.size());
    EXPECT_TRUE(std::equal(small.begin(), small.end(), large.begin()));
    for (std::size_t k = small.size(); k < large.size(); ++k) EXPECT_GT(large[k], 6.0);
  }
}

TEST(EnumerateSpectrum, IntegerStrengthsGiveIntegerLadder) {
  for (const std::vector<double>& gammas :
       {std::vector<double>{1, 2}, {3}, {1, 1, 1, 4}, {0, 2}}) {
    const Levels got = enumerate_spectrum(SingularitySet(gammas), 15.5).levels;
    Levels expected;
    for (int m = 1; m <= 15; ++m) expected.push_back(m);
    EXPECT_EQ(got, expected);
  }
}

TEST(LocateRegion, Examples) {
  const CriticalSpectrum ladder = enumerate_spectrum(SingularitySet{}, 3.5);
  EXPECT_EQ(locate_region(0.5, ladder, 1e-8), 0u);
  EXPECT_EQ(locate_region(2.5, ladder, 1e-8), 2u);

  const CriticalSpectrum half = enumerate_spectrum(SingularitySet({0.5}), 3.0);
  EXPECT_EQ(locate_region(1.7, half, 1e-8), 2u);
}

TEST(LocateRegion, CriticalAndOutOfRange) {
  const CriticalSpectrum ladder = enumerate_spectrum(SingularitySet{}, 3.5);
  try {
    locate_region(1.0, ladder, 1e-8);
    FAIL() << "expected OnCriticalSurface";
  } catch (const OnCriticalSurface& e) {
    EXPECT_EQ(e.index(), 1u);
    EXPECT_DOUBLE_EQ(e.level(), 1.0);
  }
  EXPECT_THROW(locate_region(2.0 + 5e-9, ladder, 1e-8), OnCriticalSurface);
  EXPECT_EQ(locate_region(2.0 + 5e-8, ladder, 1e-8), 2u);
  EXPECT_THROW(locate_region(3.2, ladder, 1e-8), OutOfRange);
  EXPECT_THROW(locate_region(0.0, ladder, 1e-8), InvalidArgument);
}

} // namespace
} // namespace liouville
