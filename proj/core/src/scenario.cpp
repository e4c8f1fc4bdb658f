#include "rcbf/scenario.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "rcbf/errors.hpp"

namespace rcbf {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double to_double(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("scenario: bad numeric value for '" + key + "': " + v);
  }
}

long to_long(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const long d = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("scenario: bad integer value for '" + key + "': " + v);
  }
}

bool to_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("scenario: bad boolean value for '" + key + "': " + v);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void Scenario::validate() const {
  auto fail = [](const std::string& m) { throw ConfigError("scenario: " + m); };
  if (!(bounds.x_min < bounds.x_max)) fail("bounds require x_min < x_max");
  if (!(bounds.y_min < bounds.y_max)) fail("bounds require y_min < y_max");
  for (const auto& o : obstacles)
    if (!(o.radius > 0.0)) fail("obstacle radius must be > 0");
  if (gains.k_v < 0.0 || gains.k_omega < 0.0) fail("gains must be >= 0");
  if (!(alpha_slope > 0.0)) fail("alpha must be > 0");
  if (!(mu > 0.0)) fail("mu must be > 0");
  if (!(alpha_q > 0.0)) fail("alpha_q must be > 0");
  if (error_box.minCoeff() < 0.0) fail("error box half-widths must be >= 0");
  if (!(adaptation.gamma_lo > 0.0)) fail("gamma_lo must be > 0");
  if (!(adaptation.gamma_hi >= adaptation.gamma_lo))
    fail("gamma_hi must be >= gamma_lo");
  if (adaptation.n1 < 2 || adaptation.n2 < 2) fail("gamma mesh needs n >= 2");
  if (adaptation.coarse_n1 < 2 || adaptation.coarse_n2 < 2)
    fail("coarse gamma mesh needs n >= 2");
  if (adaptation.n_samples < 1) fail("n_samples must be >= 1");
  if (adaptation.adapt_every < 1) fail("adapt_every must be >= 1");
  if (!(input_box.v_min <= input_box.v_max) ||
      !(input_box.omega_min <= input_box.omega_max))
    fail("input box is empty");
  if (!(dt > 0.0)) fail("dt must be > 0");
  if (!(duration > 0.0)) fail("duration must be > 0");
  if (!(solver.resolution > 0.0)) fail("resolution must be > 0");
  if (!(solver.interior_forcing < 0.0)) fail("interior forcing must be < 0");
  if (!(solver.exterior_forcing > 0.0)) fail("exterior forcing must be > 0");
  if (!(solver.tol > 0.0)) fail("solver tol must be > 0");
  if (solver.max_iters < 1) fail("max_iters must be >= 1");
}

Scenario Scenario::paper() {
  Scenario s;
  // The measured platform is 12.3 m x 4 m with both inflated obstacles fully
  // inside; the reference reaches x = 10 m at t = 40 s.
  s.bounds = {-1.5, 10.8, -2.0, 2.0};
  s.obstacles = {{{2.5, 0.0}, 1.0}, {{6.9, 0.0}, 1.0}};
  s.reference = {0.25, 1.5, 1.52, 0.0};
  s.gains = {1.0, 2.5};
  s.alpha_slope = 3.0;
  s.mu = 3.3;
  s.alpha_q = 1.0;
  s.error_box = {0.05, 0.1, 0.0};
  s.input_box = {-2.0, 2.0, -2.0, 2.0};
  s.dt = 0.02;
  s.duration = 40.0;
  s.x0 = {0.0, -0.35, 0.0};
  s.seed = 1;
  s.tunable_etas = {2.0, 2.0};
  return s;
}

Scenario Scenario::paper_nominal() {
  Scenario s = paper();
  s.error_box = {0.0, 0.0, 0.0};
  return s;
}

Scenario Scenario::hardware() {
  Scenario s = paper();
  s.alpha_slope = 1.0;
  return s;
}

Scenario parse_scenario(std::istream& in) {
  Scenario s;
  std::string line;
  std::string section;
  int lineno = 0;

  using Setter = std::function<void(Scenario&, const std::string&)>;
  static const std::map<std::string, Setter> setters = {
      {"bounds.x_min", [](Scenario& c, const std::string& v) { c.bounds.x_min = to_double(v, "x_min"); }},
      {"bounds.x_max", [](Scenario& c, const std::string& v) { c.bounds.x_max = to_double(v, "x_max"); }},
      {"bounds.y_min", [](Scenario& c, const std::string& v) { c.bounds.y_min = to_double(v, "y_min"); }},
      {"bounds.y_max", [](Scenario& c, const std::string& v) { c.bounds.y_max = to_double(v, "y_max"); }},
      {"obstacle.center_x", [](Scenario& c, const std::string& v) { c.obstacles.back().center.x() = to_double(v, "center_x"); }},
      {"obstacle.center_y", [](Scenario& c, const std::string& v) { c.obstacles.back().center.y() = to_double(v, "center_y"); }},
      {"obstacle.radius", [](Scenario& c, const std::string& v) { c.obstacles.back().radius = to_double(v, "radius"); }},
      {"reference.v_ref", [](Scenario& c, const std::string& v) { c.reference.v_ref = to_double(v, "v_ref"); }},
      {"reference.a_d", [](Scenario& c, const std::string& v) { c.reference.a_d = to_double(v, "a_d"); }},
      {"reference.c_d", [](Scenario& c, const std::string& v) { c.reference.c_d = to_double(v, "c_d"); }},
      {"reference.phi_d", [](Scenario& c, const std::string& v) { c.reference.phi_d = to_double(v, "phi_d"); }},
      {"gains.k_v", [](Scenario& c, const std::string& v) { c.gains.k_v = to_double(v, "k_v"); }},
      {"gains.k_omega", [](Scenario& c, const std::string& v) { c.gains.k_omega = to_double(v, "k_omega"); }},
      {"safety.alpha", [](Scenario& c, const std::string& v) { c.alpha_slope = to_double(v, "alpha"); }},
      {"safety.mu", [](Scenario& c, const std::string& v) { c.mu = to_double(v, "mu"); }},
      {"safety.alpha_q", [](Scenario& c, const std::string& v) { c.alpha_q = to_double(v, "alpha_q"); }},
      {"error_box.x", [](Scenario& c, const std::string& v) { c.error_box.x() = to_double(v, "error_box.x"); }},
      {"error_box.y", [](Scenario& c, const std::string& v) { c.error_box.y() = to_double(v, "error_box.y"); }},
      {"error_box.theta", [](Scenario& c, const std::string& v) { c.error_box.z() = to_double(v, "error_box.theta"); }},
      {"adaptation.n_samples", [](Scenario& c, const std::string& v) { c.adaptation.n_samples = static_cast<int>(to_long(v, "n_samples")); }},
      {"adaptation.gamma_lo", [](Scenario& c, const std::string& v) { c.adaptation.gamma_lo = to_double(v, "gamma_lo"); }},
      {"adaptation.gamma_hi", [](Scenario& c, const std::string& v) { c.adaptation.gamma_hi = to_double(v, "gamma_hi"); }},
      {"adaptation.n1", [](Scenario& c, const std::string& v) { c.adaptation.n1 = static_cast<int>(to_long(v, "n1")); }},
      {"adaptation.n2", [](Scenario& c, const std::string& v) { c.adaptation.n2 = static_cast<int>(to_long(v, "n2")); }},
      {"adaptation.spacing", [](Scenario& c, const std::string& v) {
         if (v == "log") c.adaptation.spacing = GridSpacing::Logarithmic;
         else if (v == "linear") c.adaptation.spacing = GridSpacing::Linear;
         else throw ConfigError("scenario: spacing must be 'log' or 'linear'");
       }},
      {"adaptation.coarse_first", [](Scenario& c, const std::string& v) { c.adaptation.coarse_first = to_bool(v, "coarse_first"); }},
      {"adaptation.coarse_n1", [](Scenario& c, const std::string& v) { c.adaptation.coarse_n1 = static_cast<int>(to_long(v, "coarse_n1")); }},
      {"adaptation.coarse_n2", [](Scenario& c, const std::string& v) { c.adaptation.coarse_n2 = static_cast<int>(to_long(v, "coarse_n2")); }},
      {"adaptation.adapt_every", [](Scenario& c, const std::string& v) { c.adaptation.adapt_every = static_cast<int>(to_long(v, "adapt_every")); }},
      {"input_box.v_min", [](Scenario& c, const std::string& v) { c.input_box.v_min = to_double(v, "v_min"); }},
      {"input_box.v_max", [](Scenario& c, const std::string& v) { c.input_box.v_max = to_double(v, "v_max"); }},
      {"input_box.omega_min", [](Scenario& c, const std::string& v) { c.input_box.omega_min = to_double(v, "omega_min"); }},
      {"input_box.omega_max", [](Scenario& c, const std::string& v) { c.input_box.omega_max = to_double(v, "omega_max"); }},
      {"sim.dt", [](Scenario& c, const std::string& v) { c.dt = to_double(v, "dt"); }},
      {"sim.duration", [](Scenario& c, const std::string& v) { c.duration = to_double(v, "duration"); }},
      {"sim.x0_x", [](Scenario& c, const std::string& v) { c.x0.x() = to_double(v, "x0_x"); }},
      {"sim.x0_y", [](Scenario& c, const std::string& v) { c.x0.y() = to_double(v, "x0_y"); }},
      {"sim.x0_theta", [](Scenario& c, const std::string& v) { c.x0.z() = to_double(v, "x0_theta"); }},
      {"sim.seed", [](Scenario& c, const std::string& v) { c.seed = static_cast<std::uint64_t>(to_long(v, "seed")); }},
      {"sim.frozen_noise", [](Scenario& c, const std::string& v) { c.frozen_noise = to_bool(v, "frozen_noise"); }},
      {"tunable.eta1", [](Scenario& c, const std::string& v) { c.tunable_etas[0] = to_double(v, "eta1"); }},
      {"tunable.eta2", [](Scenario& c, const std::string& v) { c.tunable_etas[1] = to_double(v, "eta2"); }},
      {"solver.resolution", [](Scenario& c, const std::string& v) { c.solver.resolution = to_double(v, "resolution"); }},
      {"solver.interior_forcing", [](Scenario& c, const std::string& v) { c.solver.interior_forcing = to_double(v, "interior_forcing"); }},
      {"solver.exterior_forcing", [](Scenario& c, const std::string& v) { c.solver.exterior_forcing = to_double(v, "exterior_forcing"); }},
      {"solver.tol", [](Scenario& c, const std::string& v) { c.solver.tol = to_double(v, "tol"); }},
      {"solver.max_iters", [](Scenario& c, const std::string& v) { c.solver.max_iters = static_cast<int>(to_long(v, "max_iters")); }},
      {"solver.sor_omega", [](Scenario& c, const std::string& v) { c.solver.sor_omega = to_double(v, "sor_omega"); }},
  };

  while (std::getline(in, line)) {
    ++lineno;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("scenario line " + std::to_string(lineno) +
                          ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section == "obstacle") s.obstacles.emplace_back();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("scenario line " + std::to_string(lineno) +
                        ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string full = section.empty() ? key : section + "." + key;
    const auto it = setters.find(full);
    if (it == setters.end())
      throw ConfigError("scenario line " + std::to_string(lineno) +
                        ": unknown key '" + full + "'");
    it->second(s, value);
  }
  s.validate();
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file: " + path);
  return parse_scenario(in);
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream out;
  out << "[bounds]\n"
      << "x_min = " << fmt(s.bounds.x_min) << "\n"
      << "x_max = " << fmt(s.bounds.x_max) << "\n"
      << "y_min = " << fmt(s.bounds.y_min) << "\n"
      << "y_max = " << fmt(s.bounds.y_max) << "\n";
  for (const auto& o : s.obstacles) {
    out << "\n[obstacle]\n"
        << "center_x = " << fmt(o.center.x()) << "\n"
        << "center_y = " << fmt(o.center.y()) << "\n"
        << "radius = " << fmt(o.radius) << "\n";
  }
  out << "\n[reference]\n"
      << "v_ref = " << fmt(s.reference.v_ref) << "\n"
      << "a_d = " << fmt(s.reference.a_d) << "\n"
      << "c_d = " << fmt(s.reference.c_d) << "\n"
      << "phi_d = " << fmt(s.reference.phi_d) << "\n";
  out << "\n[gains]\n"
      << "k_v = " << fmt(s.gains.k_v) << "\n"
      << "k_omega = " << fmt(s.gains.k_omega) << "\n";
  out << "\n[safety]\n"
      << "alpha = " << fmt(s.alpha_slope) << "\n"
      << "mu = " << fmt(s.mu) << "\n"
      << "alpha_q = " << fmt(s.alpha_q) << "\n";
  out << "\n[error_box]\n"
      << "x = " << fmt(s.error_box.x()) << "\n"
      << "y = " << fmt(s.error_box.y()) << "\n"
      << "theta = " << fmt(s.error_box.z()) << "\n";
  out << "\n[adaptation]\n"
      << "n_samples = " << s.adaptation.n_samples << "\n"
      << "gamma_lo = " << fmt(s.adaptation.gamma_lo) << "\n"
      << "gamma_hi = " << fmt(s.adaptation.gamma_hi) << "\n"
      << "n1 = " << s.adaptation.n1 << "\n"
      << "n2 = " << s.adaptation.n2 << "\n"
      << "spacing = "
      << (s.adaptation.spacing == GridSpacing::Logarithmic ? "log" : "linear")
      << "\n"
      << "coarse_first = " << (s.adaptation.coarse_first ? "true" : "false")
      << "\n"
      << "coarse_n1 = " << s.adaptation.coarse_n1 << "\n"
      << "coarse_n2 = " << s.adaptation.coarse_n2 << "\n"
      << "adapt_every = " << s.adaptation.adapt_every << "\n";
  out << "\n[input_box]\n"
      << "v_min = " << fmt(s.input_box.v_min) << "\n"
      << "v_max = " << fmt(s.input_box.v_max) << "\n"
      << "omega_min = " << fmt(s.input_box.omega_min) << "\n"
      << "omega_max = " << fmt(s.input_box.omega_max) << "\n";
  out << "\n[sim]\n"
      << "dt = " << fmt(s.dt) << "\n"
      << "duration = " << fmt(s.duration) << "\n"
      << "x0_x = " << fmt(s.x0.x()) << "\n"
      << "x0_y = " << fmt(s.x0.y()) << "\n"
      << "x0_theta = " << fmt(s.x0.z()) << "\n"
      << "seed = " << s.seed << "\n"
      << "frozen_noise = " << (s.frozen_noise ? "true" : "false") << "\n";
  out << "\n[tunable]\n"
      << "eta1 = " << fmt(s.tunable_etas[0]) << "\n"
      << "eta2 = " << fmt(s.tunable_etas[1]) << "\n";
  out << "\n[solver]\n"
      << "resolution = " << fmt(s.solver.resolution) << "\n"
      << "interior_forcing = " << fmt(s.solver.interior_forcing) << "\n"
      << "exterior_forcing = " << fmt(s.solver.exterior_forcing) << "\n"
      << "tol = " << fmt(s.solver.tol) << "\n"
      << "max_iters = " << s.solver.max_iters << "\n"
      << "sor_omega = " << fmt(s.solver.sor_omega) << "\n";
  return out.str();
}

bool operator==(const Scenario& a, const Scenario& b) {
  if (a.obstacles.size() != b.obstacles.size()) return false;
  for (std::size_t i = 0; i < a.obstacles.size(); ++i) {
    if (a.obstacles[i].center != b.obstacles[i].center ||
        a.obstacles[i].radius != b.obstacles[i].radius)
      return false;
  }
  return a.bounds.x_min == b.bounds.x_min && a.bounds.x_max == b.bounds.x_max &&
         a.bounds.y_min == b.bounds.y_min && a.bounds.y_max == b.bounds.y_max &&
         a.reference.v_ref == b.reference.v_ref &&
         a.reference.a_d == b.reference.a_d &&
         a.reference.c_d == b.reference.c_d &&
         a.reference.phi_d == b.reference.phi_d &&
         a.gains.k_v == b.gains.k_v && a.gains.k_omega == b.gains.k_omega &&
         a.alpha_slope == b.alpha_slope && a.mu == b.mu &&
         a.alpha_q == b.alpha_q && a.error_box == b.error_box &&
         a.adaptation.n_samples == b.adaptation.n_samples &&
         a.adaptation.gamma_lo == b.adaptation.gamma_lo &&
         a.adaptation.gamma_hi == b.adaptation.gamma_hi &&
         a.adaptation.n1 == b.adaptation.n1 &&
         a.adaptation.n2 == b.adaptation.n2 &&
         a.adaptation.spacing == b.adaptation.spacing &&
         a.adaptation.coarse_first == b.adaptation.coarse_first &&
         a.adaptation.coarse_n1 == b.adaptation.coarse_n1 &&
         a.adaptation.coarse_n2 == b.adaptation.coarse_n2 &&
         a.adaptation.adapt_every == b.adaptation.adapt_every &&
         a.input_box.v_min == b.input_box.v_min &&
         a.input_box.v_max == b.input_box.v_max &&
         a.input_box.omega_min == b.input_box.omega_min &&
         a.input_box.omega_max == b.input_box.omega_max && a.dt == b.dt &&
         a.duration == b.duration && a.x0 == b.x0 && a.seed == b.seed &&
         a.tunable_etas == b.tunable_etas &&
         a.solver.resolution == b.solver.resolution &&
         a.solver.interior_forcing == b.solver.interior_forcing &&
         a.solver.exterior_forcing == b.solver.exterior_forcing &&
         a.solver.tol == b.solver.tol &&
         a.solver.max_iters == b.solver.max_iters &&
         a.solver.sor_omega == b.solver.sor_omega &&
         a.frozen_noise == b.frozen_noise;
}

}  // namespace rcbf
