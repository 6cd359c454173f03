#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "liouville/degree.hpp"
#include "liouville/errors.hpp"
#include "support/generators.hpp"

namespace liouville {
namespace {

constexpr double kPi = std::numbers::pi;

const InteractionMatrix kScalar({{1.0}});
const InteractionMatrix kSwap({{0, 1}, {1, 0}});

ProblemInstance single(SurfaceSpec surface, SingularitySet s, double rho) {
  return {surface, std::move(s), kScalar, {rho}};
}

TEST(SurfaceSpec, EulerCharacteristic) {
  EXPECT_EQ(SurfaceSpec::sphere().chi(), 2);
  EXPECT_EQ(SurfaceSpec::torus().chi(), 0);
  EXPECT_EQ(SurfaceSpec::closed(3).chi(), -4);
  EXPECT_EQ(SurfaceSpec::planar_domain(0).chi(), 1);
  EXPECT_EQ(SurfaceSpec::planar_domain(2).chi(), -1);
  EXPECT_EQ(SurfaceSpec::from_chi(-7).chi(), -7);
  EXPECT_THROW(SurfaceSpec::closed(-1), InvalidArgument);
}

TEST(NormalizedEnergy, Examples) {
  EXPECT_NEAR(normalized_energy({8 * kPi}, kScalar), 1.0, 1e-15);
  EXPECT_NEAR(normalized_energy({1, 1}, kSwap), 1.0 / (8 * kPi), 1e-15);
  EXPECT_NEAR(normalized_energy({12 * kPi}, kScalar), 1.5, 1e-15);
}

TEST(NormalizedEnergy, Errors) {
  EXPECT_THROW(normalized_energy({0, 0}, kSwap), ZeroMass);
  EXPECT_THROW(normalized_energy({1, -1}, kSwap), NegativeRho);
  EXPECT_THROW(normalized_energy({1}, kSwap), InvalidArgument);
}

TEST(LeraySchauderDegree, SphereSingleEquation) {
  const DegreeResult r = leray_schauder_degree(single(SurfaceSpec::sphere(), {}, 12 * kPi));
  EXPECT_EQ(r.degree, -1);
  EXPECT_EQ(r.region_k, 1u);
  EXPECT_NEAR(r.q_normalized, 1.5, 1e-12);
  EXPECT_EQ(r.nearest_levels, (std::pair<double, double>{1.0, 2.0}));
  EXPECT_EQ(r.partial_coefficients, (std::vector<std::int64_t>{1, -2}));
}

TEST(LeraySchauderDegree, TorusTwoSources) {
  const DegreeResult r =
      leray_schauder_degree(single(SurfaceSpec::torus(), SingularitySet({1, 2}), 12 * kPi));
  EXPECT_EQ(r.degree, 3);
  EXPECT_EQ(r.region_k, 1u);
}

TEST(LeraySchauderDegree, BelowFirstLevelIsOne) {
  for (int chi : {2, 1, 0, -2, -6}) {
    const DegreeResult r =
        leray_schauder_degree(single(SurfaceSpec::from_chi(chi), SingularitySet({0.3}), 4 * kPi));
    EXPECT_EQ(r.degree, 1);
    EXPECT_EQ(r.region_k, 0u);
    EXPECT_EQ(r.nearest_levels.first, 0.0);
    EXPECT_EQ(r.nearest_levels.second, 1.0);
  }
}

TEST(LeraySchauderDegree, PlanarDomainUsesItsCharacteristic) {
  // Annulus: chi = 0, one source of strength 1: g = 1 + x, so the degree is 2
  // above the first level.
  const ProblemInstance p{SurfaceSpec::planar_domain(1), SingularitySet({1.0}), kSwap,
                          gen::rho_with_energy(kSwap, {1.0, 2.0}, 1.5)};
  EXPECT_EQ(leray_schauder_degree(p).degree, 2);
}

TEST(LeraySchauderDegree, Errors) {
  EXPECT_THROW(leray_schauder_degree(single(SurfaceSpec::sphere(), {}, 8 * kPi)), OnCriticalSurface);
  const ProblemInstance strong_diag{SurfaceSpec::torus(), {}, InteractionMatrix({{2, 1}, {1, 2}}),
                                    {1, 1}};
  EXPECT_THROW(leray_schauder_degree(strong_diag), HypothesisViolation);
  const ProblemInstance reducible{SurfaceSpec::torus(), {}, InteractionMatrix({{1, 0}, {0, 1}}),
                                  {1, 1}};
  EXPECT_THROW(leray_schauder_degree(reducible), HypothesisViolation);
  EXPECT_THROW(leray_schauder_degree(single(SurfaceSpec::torus(), {}, -1.0)), NegativeRho);
  const ProblemInstance empty{SurfaceSpec::torus(), {}, kSwap, {0, 0}};
  EXPECT_THROW(leray_schauder_degree(empty), ZeroMass);
  EXPECT_THROW(leray_schauder_degree(single(SurfaceSpec::torus(), {}, 8 * kPi * 25.5)), OutOfRange);
}

TEST(LeraySchauderDegree, VanishingComponentsContributeNothing) {
  const InteractionMatrix a({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  const ProblemInstance p{SurfaceSpec::sphere(), {}, a, {1.5 * 8 * kPi, 1.5 * 8 * kPi, 0.0}};
  // q = 2 * 2.25 (8 pi)^2 / (8 pi * 3 * 8 pi) = 1.5
  const DegreeResult r = leray_schauder_degree(p);
  EXPECT_NEAR(r.q_normalized, 1.5, 1e-12);
  EXPECT_EQ(r.degree, -1);
}

TEST(TorusSpecialDegree, Examples) {
  EXPECT_EQ(torus_special_degree(SingularitySet({1, 2}), kSwap).degree, 3);
  EXPECT_EQ(torus_special_degree(SingularitySet({1, 2}), kScalar).degree, 3);
  EXPECT_EQ(torus_special_degree(SingularitySet({1}), kSwap).degree, 1);
  EXPECT_EQ(torus_special_degree(SingularitySet({1, 1, 1}), kSwap).degree, 4);

  const TorusDegree t = torus_special_degree(SingularitySet({1, 2}), kSwap);
  EXPECT_NEAR(t.q, 1.5, 1e-12);
  EXPECT_NEAR(t.rho[0], 12 * kPi, 1e-12);
  EXPECT_NEAR(t.rho[1], 12 * kPi, 1e-12);
}

TEST(TorusSpecialDegree, Preconditions) {
  EXPECT_THROW(torus_special_degree(SingularitySet({1, 1}), kSwap), PreconditionFailed);
  EXPECT_THROW(torus_special_degree(SingularitySet({1.5}), kSwap), PreconditionFailed);
  EXPECT_THROW(torus_special_degree(SingularitySet{}, kSwap), PreconditionFailed);
  EXPECT_THROW(torus_special_degree(SingularitySet({1}), InteractionMatrix({{2, 1}, {1, 2}})),
               HypothesisViolation);
}

TEST(TorusSpecialDegree, AgreesWithGeneratingFunctionRoute) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> count(1, 4), gamma(1, 4);
  int checked = 0;
  while (checked < 100) {
    std::vector<double> gammas(static_cast<std::size_t>(count(rng)));
    int total = 0;
    for (double& g : gammas) total += static_cast<int>(g = gamma(rng));
    if (total % 2 == 0) continue;
    const InteractionMatrix a = gen::valid_matrix(rng);
    const SingularitySet s(gammas);
    const TorusDegree t = torus_special_degree(s, a);
    const DegreeResult general = leray_schauder_degree({SurfaceSpec::torus(), s, a, t.rho});
    EXPECT_EQ(t.degree, general.degree);
    ++checked;
  }
}

TEST(LeraySchauderDegree, InvariantUnderEnergyPreservingScaling) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> q(0.05, 9.5), c(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const InteractionMatrix a = gen::valid_matrix(rng);
    const SingularitySet s({0.5, 1.25});
    const std::vector<double> rho = gen::rho_with_energy(a, gen::positive_vector(rng, a.n()), q(rng));
    const double scale = c(rng);
    std::vector<double> scaled = rho;
    for (double& r : scaled) r *= scale;
    try {
      const auto base = leray_schauder_degree({SurfaceSpec::closed(2), s, a, rho});
      const auto moved = leray_schauder_degree({SurfaceSpec::closed(2), s, a.scaled(1.0 / scale), scaled});
      EXPECT_EQ(base.degree, moved.degree);
      EXPECT_EQ(base.region_k, moved.region_k);
    } catch (const OnCriticalSurface&) {
    }
  }
}

TEST(LeraySchauderDegree, CrossingOneLevelAddsItsCoefficient) {
  const SingularitySet s({0.5, 2.0});
  const int chi = -2;
  const CriticalSpectrum spectrum = enumerate_spectrum(s, 10.0);
  const auto b = coefficients_aligned(build_generating_function(chi, s, 10.0), spectrum);
  for (std::size_t k = 0; k + 1 < spectrum.levels.size(); ++k) {
    const double below = spectrum.levels[k] - 1e-4;
    const double above = spectrum.levels[k] + 1e-4;
    const auto lo = leray_schauder_degree(single(SurfaceSpec::from_chi(chi), s, 8 * kPi * below));
    const auto hi = leray_schauder_degree(single(SurfaceSpec::from_chi(chi), s, 8 * kPi * above));
    EXPECT_EQ(hi.degree - lo.degree, b[k + 1].b);
  }
}

TEST(ExistenceCertificate, Examples) {
  const auto torus = existence_certificate(single(SurfaceSpec::torus(), SingularitySet({1, 2}), 12 * kPi));
  EXPECT_TRUE(torus.exists);
  EXPECT_TRUE(torus.structural_condition);
  EXPECT_EQ(torus.degree, 3);

  const auto sphere = existence_certificate(single(SurfaceSpec::sphere(), {}, 20 * kPi));
  EXPECT_FALSE(sphere.exists);
  EXPECT_FALSE(sphere.structural_condition);
  EXPECT_EQ(sphere.degree, 0);

  const auto low = existence_certificate(single(SurfaceSpec::sphere(), SingularitySet({0.5}), 4 * kPi));
  EXPECT_TRUE(low.exists);
  EXPECT_EQ(low.degree, 1);
}

TEST(ExistenceCertificate, MultiplyConnectedDomainWithIntegerSources) {
  const ProblemInstance p{SurfaceSpec::planar_domain(3), SingularitySet({2, 1}), kSwap,
                          gen::rho_with_energy(kSwap, {1, 1}, 6.5)};
  const auto cert = existence_certificate(p);
  EXPECT_TRUE(cert.structural_condition);
  EXPECT_GT(cert.degree, 0);
}

TEST(MassNormalization, Examples) {
  const ForcedMasses one = mass_normalization(SingularitySet({1, 2}), kScalar);
  ASSERT_EQ(one.rho.size(), 1u);
  EXPECT_NEAR(one.rho[0], 12 * kPi, 1e-12);
  EXPECT_FALSE(one.negative_mass_warning);

  const ForcedMasses two = mass_normalization(SingularitySet({1}), kSwap);
  EXPECT_NEAR(two.rho[0], 4 * kPi, 1e-12);
  EXPECT_NEAR(two.rho[1], 4 * kPi, 1e-12);

  const ForcedMasses none = mass_normalization(SingularitySet{}, kSwap);
  EXPECT_EQ(none.rho, (std::vector<double>{0, 0}));
  EXPECT_TRUE(none.negative_mass_warning);

  EXPECT_THROW(mass_normalization(SingularitySet({1}), InteractionMatrix({{1, 1}, {1, 1}})),
               SingularMatrix);
}

} // namespace
} // namespace liouville
