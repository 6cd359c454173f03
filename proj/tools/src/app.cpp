#include "app.hpp"

#include <cmath>
#include <vector>

#include "CLI11.hpp"
#include "field_io.hpp"
#include "liouville/critical_spectrum.hpp"
#include "liouville/degree.hpp"
#include "liouville/errors.hpp"
#include "liouville/generating_series.hpp"
#include "liouville/matrix_conditions.hpp"
#include "liouville/pohozaev.hpp"
#include "liouville/torus/solver.hpp"

namespace liouville::app {

namespace {

Report rows_of(const DenseMatrix& m) { return m.rows(); }

Report violations_of(const ConditionReport& r) {
  Report list = Report::array();
  for (const auto& v : r.violations)
    list.push_back({{"condition", v.condition}, {"indices", v.indices}, {"value", v.value}});
  return list;
}

CommandResult ok(Report r) { return {std::move(r), 0, {}}; }

double cap_of(const InstanceConfig& c, const Flags& f) { return f.cap.value_or(c.caps.exponent_cap); }
double merge_of(const Flags& f) { return f.tol_merge.value_or(kDefaultMergeTol); }
double critical_of(const InstanceConfig& c, const Flags& f) {
  return f.tol_critical.value_or(c.caps.tolerance);
}

CommandResult check_matrix(const InstanceConfig& c) {
  const InteractionMatrix a = c.interaction_matrix();
  const ConditionReport r = check_hypotheses(a);
  CommandResult out;
  out.report = {{"command", "check-matrix"}, {"n", a.n()}, {"matrix", rows_of(a.entries())}};
  const double cond = a.condition_number();
  out.report["condition_number"] = std::isfinite(cond) ? Report(cond) : Report(nullptr);
  if (!r.violates("invertible")) {
    out.report["inverse"] = rows_of(a.inverse());
    out.report["inverse_row_sums"] = inverse_row_sums(a);
  } else {
    out.report["inverse"] = nullptr;
    out.report["inverse_row_sums"] = nullptr;
  }
  out.report["hypotheses_hold"] = r.holds();
  out.report["violations"] = violations_of(r);
  if (!r.holds()) {
    out.status = exit_code_for("HypothesisViolation");
    out.message = "HypothesisViolation: coupling matrix violates the hypotheses";
  }
  return out;
}

CommandResult spectrum(const InstanceConfig& c, const Flags& f) {
  const SingularitySet s = c.singularities();
  const CriticalSpectrum spec = enumerate_spectrum(s, cap_of(c, f), merge_of(f));
  return ok({{"command", "spectrum"},
           {"gammas", s.gammas()},
           {"cap", spec.cap},
           {"levels", spec.levels}});
}

int chi_of(const InstanceConfig& c) {
  if (!c.surface) throw ConfigError(c.source + ": field 'surface': missing");
  return c.surface->chi();
}

CommandResult series(const InstanceConfig& c, const Flags& f) {
  const SingularitySet s = c.singularities();
  const int chi = chi_of(c);
  const GeneralizedSeries g = build_generating_function(chi, s, cap_of(c, f), merge_of(f));
  Report terms = Report::array();
  for (const auto& t : g.terms()) terms.push_back({{"exponent", t.exponent}, {"coefficient", t.coefficient}});
  Report aligned = Report::array();
  for (const auto& a : coefficients_aligned(g, enumerate_spectrum(s, g.cap(), merge_of(f))))
    aligned.push_back({{"level", a.level}, {"b", a.b}});
  return ok({{"command", "series"},
           {"chi", chi},
           {"gammas", s.gammas()},
           {"cap", g.cap()},
           {"terms", terms},
           {"aligned", aligned}});
}

CommandResult degree(const InstanceConfig& c, const Flags& f) {
  const ProblemInstance p = c.problem();
  DegreeOptions opts;
  opts.cap = cap_of(c, f);
  opts.critical_tol = critical_of(c, f);
  opts.merge_tol = merge_of(f);
  const DegreeResult r = leray_schauder_degree(p, opts);
  const ExistenceCertificate cert = existence_certificate(p, opts);
  return ok({{"command", "degree"},
           {"chi", p.surface.chi()},
           {"rho", p.rho},
           {"q", r.q_normalized},
           {"region", r.region_k},
           {"nearest_levels", {r.nearest_levels.first, r.nearest_levels.second}},
           {"partial_coefficients", r.partial_coefficients},
           {"degree", r.degree},
           {"exists", cert.exists},
           {"structural_condition", cert.structural_condition}});
}

CommandResult pohozaev(const InstanceConfig& c) {
  if (!c.pohozaev) throw ConfigError(c.source + ": field 'pohozaev': missing");
  const PohozaevSection& sec = *c.pohozaev;
  const InteractionMatrix a = c.interaction_matrix();
  CommandResult out;
  out.report = {{"command", "pohozaev"}, {"mu", sec.mu}};
  if (sec.sigma) {
    const MassVector m{*sec.sigma, sec.mu};
    if (m.sigma.size() != a.n()) throw ConfigError(c.source + ": field 'pohozaev.sigma': length does not match matrix");
    const ConditionReport mm = minimal_mass_check(a, m);
    out.report["sigma"] = m.sigma;
    out.report["residual"] = pohozaev_residual(a, m);
    out.report["minimal_mass_holds"] = mm.holds();
    out.report["minimal_mass_violations"] = violations_of(mm);
  }
  if (sec.direction) {
    if (sec.direction->size() != a.n())
      throw ConfigError(c.source + ": field 'pohozaev.direction': length does not match matrix");
    out.report["hypersurface_point"] = solve_mass_on_hypersurface(a, sec.mu, *sec.direction).sigma;
  }
  if (sec.mus) {
    const std::vector<double> rho = c.resolved_rho();
    out.report["mus"] = *sec.mus;
    out.report["critical_surface_value"] = critical_surface_from_blowup(a, rho, *sec.mus);
    Report split = Report::array();
    const auto s = local_mass_split(rho, *sec.mus);
    for (std::size_t i = 0; i < s.size(); ++i) split.push_back({{"component", i}, {"masses", s[i]}});
    out.report["local_masses"] = split;
  }
  Report admissible = Report::array();
  for (double g : c.gammas)
    admissible.push_back({{"gamma", g}, {"nonsimple_admissible", nonsimple_blowup_admissible(g)}});
  if (!admissible.empty()) out.report["singularities"] = admissible;
  return out;
}

struct TorusSetup {
  ProblemInstance problem;
  torus::WeightSpec weights;
  torus::SolverOptions options;
  std::size_t resolution;
};

TorusSetup torus_setup(const InstanceConfig& c, const Flags& f) {
  TorusSetup s{c.problem(), c.weight_spec(), {}, f.resolution.value_or(c.solver.resolution)};
  if (s.problem.surface.kind() != SurfaceSpec::Kind::closed_surface || s.problem.surface.chi() != 0)
    throw InvalidArgument("the solver works on the flat torus; surface must be closed with genus 1");
  s.options.tol = c.solver.tol;
  s.options.steps = c.solver.steps;
  return s;
}

Report step_rows(const std::vector<torus::StepLog>& log) {
  Report rows = Report::array();
  for (const auto& s : log)
    rows.push_back({{"t", s.t},
                    {"newton_iterations", s.newton_iterations},
                    {"linear_iterations", s.linear_iterations},
                    {"residual", s.residual_history.back()},
                    {"max_abs_u", s.max_abs_u}});
  return rows;
}

CommandResult solve(const InstanceConfig& c, const Flags& f) {
  const TorusSetup s = torus_setup(c, f);
  const torus::TorusGrid grid(s.resolution);
  const torus::SolveResult r = torus::solve_continuation(s.problem, s.weights, grid, s.options);
  CommandResult out;
  out.report = {{"command", "solve"},
                {"n", r.u.n()},
                {"resolution", s.resolution},
                {"q", normalized_energy(s.problem.rho, s.problem.matrix)},
                {"final_residual", r.final_residual},
                {"max_abs_u", r.u.max_abs()},
                {"steps", step_rows(r.log)}};
  if (f.out) {
    write_field_dump(*f.out, r.u);
    out.report["field_dump"] = *f.out;
  }
  if (f.csv) {
    write_field_csv(*f.csv, r.u);
    out.report["field_csv"] = *f.csv;
  }
  return out;
}

CommandResult verify(const InstanceConfig& c, const Flags& f) {
  const TorusSetup s = torus_setup(c, f);
  torus::FieldSet u;
  if (f.field) {
    u = read_field_dump(*f.field);
    if (u.n() != s.problem.matrix.n())
      throw ConfigError(*f.field + ": field has " + std::to_string(u.n()) +
                        " components but the matrix has " + std::to_string(s.problem.matrix.n()));
  } else {
    u = torus::solve_continuation(s.problem, s.weights, torus::TorusGrid(s.resolution), s.options).u;
  }
  const torus::TorusGrid grid(u.resolution);
  const torus::VerificationReport v = torus::verify_solution(u, s.problem, s.weights, grid);
  Report rows = Report::array();
  for (std::size_t i = 0; i < u.n(); ++i)
    rows.push_back({{"component", i},
                    {"residual_l2", v.residual_l2[i]},
                    {"residual_max", v.residual_max[i]},
                    {"residual_mean", v.residual_mean[i]},
                    {"mean_defect", v.mean_defect[i]},
                    {"normalized_mass", v.normalized_mass[i]}});
  return ok({{"command", "verify"},
           {"source", f.field ? *f.field : std::string("solve")},
           {"resolution", u.resolution},
           {"total_residual_l2", v.total_residual_l2},
           {"functional", v.functional ? Report(*v.functional) : Report(nullptr)},
           {"components", rows}});
}

} // namespace

int exit_code_for(const std::string& error_name) {
  if (error_name == "HypothesisViolation") return 2;
  if (error_name == "OnCriticalSurface") return 3;
  if (error_name == "NoConvergence" || error_name == "StepFailure") return 4;
  return 1;
}

CommandResult execute(const std::string& command, const InstanceConfig& config, const Flags& flags) {
  if (command == "check-matrix") return check_matrix(config);
  if (command == "spectrum") return spectrum(config, flags);
  if (command == "series") return series(config, flags);
  if (command == "degree") return degree(config, flags);
  if (command == "pohozaev") return pohozaev(config);
  if (command == "solve") return solve(config, flags);
  if (command == "verify") return verify(config, flags);
  throw InvalidArgument("unknown command '" + command + "'");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App cli{"Degree counting and torus numerics for singular Liouville systems", "liouville"};
  cli.require_subcommand(1);
  Flags flags;
  std::string config_path;

  cli.add_flag("--json", flags.json, "Emit the report as JSON");
  cli.add_option("--tol-critical", flags.tol_critical, "Distance below which q counts as critical");
  cli.add_option("--tol-merge", flags.tol_merge, "Tolerance for merging equal exponents");
  cli.add_option("--cap", flags.cap, "Largest exponent / critical level considered");
  cli.add_option("--resolution", flags.resolution, "Grid points per axis for the torus solver");
  cli.add_option("--out", flags.out, "Binary field dump written by solve");
  cli.add_option("--csv", flags.csv, "CSV field dump written by solve");
  cli.add_option("--field", flags.field, "Binary field dump checked by verify");

  const std::vector<std::pair<const char*, const char*>> commands{
      {"check-matrix", "Check the hypotheses on the coupling matrix"},
      {"spectrum", "List the critical levels"},
      {"series", "Expand the generating function"},
      {"degree", "Compute the degree for the instance"},
      {"pohozaev", "Evaluate the local mass identities"},
      {"solve", "Solve the system on the flat torus"},
      {"verify", "Check a torus solution"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = cli.add_subcommand(name, help);
    sub->add_option("config", config_path, "Instance config (JSON)")->required();
    sub->fallthrough();
  }

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return cli.exit(e, out, err) == 0 ? 0 : 1;
  }
  const std::string command = cli.get_subcommands().front()->get_name();

  auto fail = [&](const std::string& name, const std::string& message, Report extra) {
    err << "liouville: " << name << ": " << message << '\n';
    if (flags.json) {
      Report error{{"name", name}, {"message", message}};
      for (const auto& item : extra.items()) error[item.key()] = item.value();
      out << Report{{"command", command}, {"error", error}}.dump(2) << '\n';
    }
    return exit_code_for(name);
  };

  try {
    const InstanceConfig config = load_config(config_path);
    const CommandResult result = execute(command, config, flags);
    if (flags.json) out << result.report.dump(2) << '\n';
    else render_text(result.report, out);
    if (result.status != 0) err << "liouville: " << result.message << '\n';
    return result.status;
  } catch (const ConfigError& e) {
    return fail("ConfigError", e.what(), Report::object());
  } catch (const OnCriticalSurface& e) {
    return fail(e.name(), e.what(), {{"index", e.index()}, {"level", e.level()}});
  } catch (const Error& e) {
    return fail(e.name(), e.what(), Report::object());
  } catch (const std::exception& e) {
    return fail("Error", e.what(), Report::object());
  }
}

} // namespace liouville::app
