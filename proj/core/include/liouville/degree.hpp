#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liouville/critical_spectrum.hpp"
#include "liouville/generating_series.hpp"
#include "liouville/matrix_conditions.hpp"

namespace liouville {

inline constexpr double kDefaultCriticalTol = 1e-8;

// Topology of the underlying surface. Only the Euler characteristic enters the
// degree formula.
class SurfaceSpec {
public:
  enum class Kind { closed_surface, planar_domain, raw_chi };

  static SurfaceSpec closed(int genus);
  static SurfaceSpec planar_domain(int holes);
  static SurfaceSpec from_chi(int chi);
  static SurfaceSpec sphere() { return closed(0); }
  static SurfaceSpec torus() { return closed(1); }

  Kind kind() const noexcept { return kind_; }
  // Genus for closed surfaces, number of holes for planar domains.
  int genus_or_holes() const noexcept { return count_; }
  int chi() const noexcept { return chi_; }

private:
  SurfaceSpec(Kind kind, int count, int chi) : kind_(kind), count_(count), chi_(chi) {}

  Kind kind_;
  int count_;
  int chi_;
};

struct ProblemInstance {
  SurfaceSpec surface = SurfaceSpec::torus();
  SingularitySet singularities;
  InteractionMatrix matrix;
  std::vector<double> rho;

  // Throws InvalidArgument / NegativeRho on malformed data.
  void validate() const;
};

struct DegreeOptions {
  double cap = kDefaultCap;
  double critical_tol = kDefaultCriticalTol;
  double merge_tol = kDefaultMergeTol;
  double matrix_tol = kDefaultMatrixTol;
};

struct DegreeResult {
  std::int64_t degree = 0;
  std::size_t region_k = 0;
  double q_normalized = 0.0;
  std::pair<double, double> nearest_levels{0.0, 0.0};  // (n_k, n_{k+1})
  std::vector<std::int64_t> partial_coefficients;        // b_0 .. b_k
};

// q = sum_ij a_ij rho_i rho_j / (8 pi sum_i rho_i)
double normalized_energy(const std::vector<double>& rho, const InteractionMatrix& a);

// Both hypotheses on A. For n = 1 the system is the single mean-field equation
// and only the first hypothesis applies (a_11 > 0 can never have a^{11} <= 0).
ConditionReport check_hypotheses(const InteractionMatrix& a, double tol = kDefaultMatrixTol);

DegreeResult leray_schauder_degree(const ProblemInstance& p, const DegreeOptions& opts = {});

struct TorusDegree {
  std::int64_t degree = 0;
  std::vector<double> rho;
  double q = 0.0;
};

// Degree of the un-normalized torus system with integer strengths of odd total,
// (1/2) prod (1 + gamma_l), cross-checked against leray_schauder_degree.
TorusDegree torus_special_degree(const SingularitySet& s, const InteractionMatrix& a,
                                 const DegreeOptions& opts = {});

struct ExistenceCertificate {
  bool exists = false;
  std::int64_t degree = 0;
  // Integer strengths and chi <= 0: the degree is guaranteed positive.
  bool structural_condition = false;
  std::string explanation;
};

ExistenceCertificate existence_certificate(const ProblemInstance& p,
                                           const DegreeOptions& opts = {});

struct ForcedMasses {
  std::vector<double> rho;
  // Set when some component is <= 0.
  bool negative_mass_warning = false;
};

// Masses 4 pi (sum_j a^{ij}) (sum_l gamma_l) forced by integrating the
// un-normalized system over a unit-volume surface.
ForcedMasses mass_normalization(const SingularitySet& s, const InteractionMatrix& a);

} // namespace liouville
