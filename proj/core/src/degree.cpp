#include "liouville/degree.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "liouville/errors.hpp"

namespace liouville {

namespace {

std::string describe(const ConditionReport& report) {
  std::ostringstream msg;
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    const Violation& v = report.violations[i];
    if (i) msg << "; ";
    msg << v.condition;
    if (!v.indices.empty()) {
      msg << " at (";
      for (std::size_t k = 0; k < v.indices.size(); ++k) msg << (k ? "," : "") << v.indices[k] + 1;
      msg << ")";
    }
    msg << " value " << v.value;
  }
  return msg.str();
}

} // namespace

SurfaceSpec SurfaceSpec::closed(int genus) {
  if (genus < 0) throw InvalidArgument("genus must be nonnegative");
  return {Kind::closed_surface, genus, 2 - 2 * genus};
}

SurfaceSpec SurfaceSpec::planar_domain(int holes) {
  if (holes < 0) throw InvalidArgument("number of holes must be nonnegative");
  return {Kind::planar_domain, holes, 1 - holes};
}

SurfaceSpec SurfaceSpec::from_chi(int chi) { return {Kind::raw_chi, 0, chi}; }

void ProblemInstance::validate() const {
  if (rho.size() != matrix.n()) {
    std::ostringstream msg;
    msg << "rho has " << rho.size() << " entries but the matrix is " << matrix.n() << "x"
        << matrix.n();
    throw InvalidArgument(msg.str());
  }
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (!(rho[i] >= 0.0) || !std::isfinite(rho[i])) {
      std::ostringstream msg;
      msg << "rho_" << i + 1 << " = " << rho[i] << " is negative";
      throw NegativeRho(msg.str());
    }
}

double normalized_energy(const std::vector<double>& rho, const InteractionMatrix& a) {
  if (rho.size() != a.n()) throw InvalidArgument("rho length does not match matrix size");
  double total = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (rho[i] < 0.0) {
      std::ostringstream msg;
      msg << "rho_" << i + 1 << " = " << rho[i] << " is negative";
      throw NegativeRho(msg.str());
    }
    total += rho[i];
  }
  if (!(total > 0.0)) throw ZeroMass("sum of rho must be positive");
  return a.quadratic_form(rho) / (8.0 * std::numbers::pi * total);
}

ConditionReport check_hypotheses(const InteractionMatrix& a, double tol) {
  ConditionReport report = check_h1(a, tol);
  if (!report.holds() || a.n() == 1) return report;
  report.merge(check_h2(a, tol));
  return report;
}

DegreeResult leray_schauder_degree(const ProblemInstance& p, const DegreeOptions& opts) {
  p.validate();
  const ConditionReport hypotheses = check_hypotheses(p.matrix, opts.matrix_tol);
  if (!hypotheses.holds())
    throw HypothesisViolation("coupling matrix violates the hypotheses: " + describe(hypotheses));

  DegreeResult result;
  result.q_normalized = normalized_energy(p.rho, p.matrix);
  if (result.q_normalized > opts.cap) {
    std::ostringstream msg;
    msg << "q = " << result.q_normalized << " exceeds the exponent cap " << opts.cap;
    throw OutOfRange(msg.str());
  }

  const CriticalSpectrum spectrum =
      enumerate_spectrum(p.singularities, opts.cap, opts.merge_tol);
  result.region_k = locate_region(result.q_normalized, spectrum, opts.critical_tol);

  const GeneralizedSeries g =
      build_generating_function(p.surface.chi(), p.singularities, opts.cap, opts.merge_tol);
  const std::vector<AlignedCoefficient> b = coefficients_aligned(g, spectrum);

  for (std::size_t j = 0; j <= result.region_k; ++j) {
    result.partial_coefficients.push_back(b[j].b);
    result.degree += b[j].b;
  }
  result.nearest_levels = {b[result.region_k].level, b[result.region_k + 1].level};
  return result;
}

ForcedMasses mass_normalization(const SingularitySet& s, const InteractionMatrix& a) {
  const std::vector<double> sums = inverse_row_sums(a);
  const double scale = 4.0 * std::numbers::pi * s.gamma_sum();
  ForcedMasses out;
  for (double row : sums) {
    out.rho.push_back(row * scale);
    if (!(out.rho.back() > 0.0)) out.negative_mass_warning = true;
  }
  return out;
}

TorusDegree torus_special_degree(const SingularitySet& s, const InteractionMatrix& a,
                                 const DegreeOptions& opts) {
  if (s.empty() || !s.all_positive_integers())
    throw PreconditionFailed("torus formula needs positive integer strengths");
  long long total = 0;
  for (double g : s.gammas()) total += std::llround(g);
  if (total % 2 == 0) {
    std::ostringstream msg;
    msg << "torus formula needs an odd sum of strengths, got " << total;
    throw PreconditionFailed(msg.str());
  }
  const ConditionReport hypotheses = check_hypotheses(a, opts.matrix_tol);
  if (!hypotheses.holds())
    throw HypothesisViolation("coupling matrix violates the hypotheses: " + describe(hypotheses));

  TorusDegree out;
  out.rho = mass_normalization(s, a).rho;
  out.q = normalized_energy(out.rho, a);
  const double m = static_cast<double>(total);
  if (!(out.q > (m - 1) / 2 && out.q < (m + 1) / 2))
    throw PreconditionFailed("induced energy does not sit between (m-1)/2 and (m+1)/2");

  std::int64_t product = 1;
  for (double g : s.gammas()) product *= 1 + std::llround(g);
  out.degree = product / 2;

  DegreeOptions cross = opts;
  cross.cap = std::max(opts.cap, (m + 1) / 2 + 1);
  const ProblemInstance instance{SurfaceSpec::torus(), s, a, out.rho};
  const DegreeResult general = leray_schauder_degree(instance, cross);
  if (general.degree != out.degree) {
    std::ostringstream msg;
    msg << "torus formula gives " << out.degree << " but the generating function gives "
        << general.degree;
    throw std::logic_error(msg.str());
  }
  return out;
}

ExistenceCertificate existence_certificate(const ProblemInstance& p, const DegreeOptions& opts) {
  const DegreeResult r = leray_schauder_degree(p, opts);
  ExistenceCertificate cert;
  cert.degree = r.degree;
  cert.exists = r.degree != 0;
  cert.structural_condition = p.singularities.all_positive_integers() && p.surface.chi() <= 0;

  std::ostringstream msg;
  msg << "degree " << r.degree << " in region k=" << r.region_k;
  if (cert.structural_condition) {
    msg << "; integer strengths with chi = " << p.surface.chi()
        << " <= 0 force a positive degree";
    if (r.degree <= 0) throw std::logic_error("structural condition holds but degree <= 0");
  }
  msg << (cert.exists ? "; nonzero degree: a solution exists"
                      : "; zero degree: no existence certificate");
  cert.explanation = msg.str();
  return cert;
}

} // namespace liouville
