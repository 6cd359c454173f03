#include "config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace liouville::app {

namespace {

using nlohmann::json;

class Reader {
public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& what) const {
    throw ConfigError(source_ + ": field '" + path + "': " + what);
  }

  double number(const json& j, const std::string& path) const {
    if (!j.is_number()) fail(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(path, "expected a finite number");
    return v;
  }

  long long integer(const json& j, const std::string& path) const {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long long>();
  }

  std::size_t positive(const json& j, const std::string& path) const {
    const long long v = integer(j, path);
    if (v <= 0) fail(path, "expected a positive integer");
    return static_cast<std::size_t>(v);
  }

  const json& array(const json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
  }

  const json& object(const json& j, const std::string& path) const {
    if (!j.is_object()) fail(path, "expected an object");
    return j;
  }

  std::vector<double> numbers(const json& j, const std::string& path) const {
    std::vector<double> out;
    for (std::size_t i = 0; i < array(j, path).size(); ++i)
      out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
  }

  TorusPoint point(const json& j, const std::string& path) const {
    const std::vector<double> v = numbers(j, path);
    if (v.size() != 2) fail(path, "expected [x, y]");
    return {v[0], v[1]};
  }

  void only(const json& j, const std::string& path, std::initializer_list<const char*> keys) const {
    for (const auto& item : j.items()) {
      bool known = false;
      for (const char* k : keys) known = known || item.key() == k;
      if (!known) fail(path.empty() ? item.key() : path + "." + item.key(), "unknown field");
    }
  }

private:
  std::string source_;
};

SurfaceSpec parse_surface(const Reader& r, const json& j) {
  r.object(j, "surface");
  if (j.contains("chi")) {
    r.only(j, "surface", {"chi"});
    return SurfaceSpec::from_chi(static_cast<int>(r.integer(j["chi"], "surface.chi")));
  }
  if (!j.contains("type")) r.fail("surface", "expected 'type' or 'chi'");
  if (!j["type"].is_string()) r.fail("surface.type", "expected a string");
  const std::string type = j["type"].get<std::string>();
  if (type == "closed") {
    r.only(j, "surface", {"type", "genus"});
    if (!j.contains("genus")) r.fail("surface.genus", "missing");
    return SurfaceSpec::closed(static_cast<int>(r.integer(j["genus"], "surface.genus")));
  }
  if (type == "domain") {
    r.only(j, "surface", {"type", "holes"});
    if (!j.contains("holes")) r.fail("surface.holes", "missing");
    return SurfaceSpec::planar_domain(static_cast<int>(r.integer(j["holes"], "surface.holes")));
  }
  r.fail("surface.type", "expected \"closed\" or \"domain\"");
}

torus::SmoothFactor parse_factor(const Reader& r, const json& j, const std::string& path) {
  torus::SmoothFactor f;
  if (j.is_number()) {
    f.base = r.number(j, path);
    return f;
  }
  r.object(j, path);
  r.only(j, path, {"base", "modes"});
  if (j.contains("base")) f.base = r.number(j["base"], path + ".base");
  if (j.contains("modes")) {
    const json& modes = r.array(j["modes"], path + ".modes");
    for (std::size_t m = 0; m < modes.size(); ++m) {
      const std::string mp = path + ".modes[" + std::to_string(m) + "]";
      r.object(modes[m], mp);
      r.only(modes[m], mp, {"amplitude", "k", "phase"});
      torus::TrigMode mode;
      if (!modes[m].contains("amplitude")) r.fail(mp + ".amplitude", "missing");
      mode.amplitude = r.number(modes[m]["amplitude"], mp + ".amplitude");
      if (!modes[m].contains("k")) r.fail(mp + ".k", "missing");
      const json& k = r.array(modes[m]["k"], mp + ".k");
      if (k.size() != 2) r.fail(mp + ".k", "expected [k1, k2]");
      mode.kx = static_cast<int>(r.integer(k[0], mp + ".k[0]"));
      mode.ky = static_cast<int>(r.integer(k[1], mp + ".k[1]"));
      if (modes[m].contains("phase")) mode.phase = r.number(modes[m]["phase"], mp + ".phase");
      f.modes.push_back(mode);
    }
  }
  return f;
}

} // namespace

InstanceConfig parse_config(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "... parse error at line L, column C: ..."
    std::string what = e.what();
    const auto at = what.find("parse error");
    throw ConfigError(source + ": " + (at == std::string::npos ? what : what.substr(at)));
  }
  const Reader r(source);
  r.object(j, "<root>");
  r.only(j, "", {"matrix", "rho", "surface", "singularities", "solver", "caps", "weights",
                 "pohozaev"});

  InstanceConfig c;
  c.source = source;
  if (j.contains("matrix")) {
    const json& rows = r.array(j["matrix"], "matrix");
    std::vector<std::vector<double>> m;
    for (std::size_t i = 0; i < rows.size(); ++i)
      m.push_back(r.numbers(rows[i], "matrix[" + std::to_string(i) + "]"));
    if (m.empty()) r.fail("matrix", "expected at least one row");
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i].size() != m.size())
        r.fail("matrix[" + std::to_string(i) + "]", "expected " + std::to_string(m.size()) +
                                                        " entries (matrix must be square)");
    c.matrix = std::move(m);
  }
  if (j.contains("rho")) {
    if (j["rho"].is_string()) {
      if (j["rho"].get<std::string>() != "induced") r.fail("rho", "expected numbers or \"induced\"");
      c.rho_induced = true;
    } else {
      c.rho = r.numbers(j["rho"], "rho");
    }
  }
  if (j.contains("surface")) c.surface = parse_surface(r, j["surface"]);
  if (j.contains("singularities")) {
    const json& list = r.array(j["singularities"], "singularities");
    std::vector<TorusPoint> positions;
    for (std::size_t l = 0; l < list.size(); ++l) {
      const std::string path = "singularities[" + std::to_string(l) + "]";
      r.object(list[l], path);
      r.only(list[l], path, {"gamma", "position"});
      if (!list[l].contains("gamma")) r.fail(path + ".gamma", "missing");
      c.gammas.push_back(r.number(list[l]["gamma"], path + ".gamma"));
      if (list[l].contains("position")) positions.push_back(r.point(list[l]["position"], path + ".position"));
    }
    if (!positions.empty()) {
      if (positions.size() != c.gammas.size())
        r.fail("singularities", "positions must be given for all singularities or none");
      c.positions = std::move(positions);
    }
  }
  if (j.contains("solver")) {
    const json& s = r.object(j["solver"], "solver");
    r.only(s, "solver", {"resolution", "tol", "steps"});
    if (s.contains("resolution")) c.solver.resolution = r.positive(s["resolution"], "solver.resolution");
    if (s.contains("tol")) c.solver.tol = r.number(s["tol"], "solver.tol");
    if (s.contains("steps")) c.solver.steps = r.positive(s["steps"], "solver.steps");
  }
  if (j.contains("caps")) {
    const json& s = r.object(j["caps"], "caps");
    r.only(s, "caps", {"exponent_cap", "tolerance"});
    if (s.contains("exponent_cap")) c.caps.exponent_cap = r.number(s["exponent_cap"], "caps.exponent_cap");
    if (s.contains("tolerance")) c.caps.tolerance = r.number(s["tolerance"], "caps.tolerance");
  }
  if (j.contains("weights")) {
    const json& list = r.array(j["weights"], "weights");
    std::vector<torus::SmoothFactor> factors;
    for (std::size_t i = 0; i < list.size(); ++i)
      factors.push_back(parse_factor(r, list[i], "weights[" + std::to_string(i) + "]"));
    c.weights = std::move(factors);
  }
  if (j.contains("pohozaev")) {
    const json& s = r.object(j["pohozaev"], "pohozaev");
    r.only(s, "pohozaev", {"sigma", "mu", "direction", "mus"});
    PohozaevSection p;
    if (s.contains("sigma")) p.sigma = r.numbers(s["sigma"], "pohozaev.sigma");
    if (s.contains("mu")) p.mu = r.number(s["mu"], "pohozaev.mu");
    if (s.contains("direction")) p.direction = r.numbers(s["direction"], "pohozaev.direction");
    if (s.contains("mus")) p.mus = r.numbers(s["mus"], "pohozaev.mus");
    c.pohozaev = std::move(p);
  }
  return c;
}

InstanceConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path);
}

SingularitySet InstanceConfig::singularities() const { return SingularitySet(gammas, positions); }

InteractionMatrix InstanceConfig::interaction_matrix() const {
  if (!matrix) throw ConfigError(source + ": field 'matrix': missing");
  return InteractionMatrix(*matrix);
}

std::vector<double> InstanceConfig::resolved_rho() const {
  if (rho_induced) {
    const ForcedMasses forced = mass_normalization(singularities(), interaction_matrix());
    if (forced.negative_mass_warning)
      throw ConfigError(source + ": field 'rho': induced masses are not all positive");
    return forced.rho;
  }
  if (!rho) throw ConfigError(source + ": field 'rho': missing");
  return *rho;
}

ProblemInstance InstanceConfig::problem() const {
  if (!surface) throw ConfigError(source + ": field 'surface': missing");
  ProblemInstance p{*surface, singularities(), interaction_matrix(), resolved_rho()};
  p.validate();
  return p;
}

torus::WeightSpec InstanceConfig::weight_spec() const {
  const std::size_t n = interaction_matrix().n();
  std::vector<torus::SmoothFactor> factors = weights.value_or(std::vector<torus::SmoothFactor>(n));
  if (factors.size() != n)
    throw ConfigError(source + ": field 'weights': expected " + std::to_string(n) + " entries");
  return {std::move(factors), singularities()};
}

} // namespace liouville::app
