#include "gpfield/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gpfield/errors.hpp"
#include "gpfield/norms.hpp"

namespace gpf {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"run", {"seed"}},
      {"grid", {"dim", "N", "L"}},
      {"background", {"type", "rho0", "amplitude", "width", "separation"}},
      {"nonlinearity", {"kind", "rho0", "a", "coefficients", "alpha1", "alpha2"}},
      {"perturbation", {"type", "h1_norm", "width", "spectrum"}},
      {"solver", {"scheme", "dt", "T", "picard_max_iter", "picard_tol", "snapshot_stride"}},
      {"strichartz", {"p", "q", "T", "steps", "num_fields", "spectrum"}},
      {"decompose", {"cases", "cutoff_scale", "epsilon"}},
      {"convergence", {"dt_list"}},
      {"output", {"directory", "formats"}},
  };
  return keys;
}

class Reader {
 public:
  explicit Reader(const pt::ptree& tree) : tree_(tree) {}

  std::optional<std::string> raw(const std::string& key) const {
    auto v = tree_.get_optional<std::string>(pt::ptree::path_type(key, '.'));
    if (!v) return std::nullopt;
    std::string s = *v;
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  }

  std::string required_string(const std::string& key) const {
    auto v = raw(key);
    if (!v || v->empty()) throw ConfigError(key, "missing required key");
    return *v;
  }

  double to_double(const std::string& key, const std::string& s) const {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw ConfigError(key, "expected a number, got '" + s + "'");
    }
  }

  double real(const std::string& key, double fallback) const {
    auto v = raw(key);
    return v ? to_double(key, *v) : fallback;
  }
  double required_real(const std::string& key) const { return to_double(key, required_string(key)); }

  std::uint64_t count(const std::string& key, std::uint64_t fallback) const {
    auto v = raw(key);
    if (!v) return fallback;
    try {
      std::size_t used = 0;
      if (!v->empty() && (*v)[0] == '-') throw std::invalid_argument("negative");
      const auto n = std::stoull(*v, &used);
      if (used != v->size()) throw std::invalid_argument("trailing characters");
      return n;
    } catch (const std::exception&) {
      throw ConfigError(key, "expected a nonnegative integer, got '" + *v + "'");
    }
  }
  std::uint64_t required_count(const std::string& key) const {
    required_string(key);
    return count(key, 0);
  }

  std::vector<double> real_list(const std::string& key) const {
    std::vector<double> out;
    auto v = raw(key);
    if (!v) return out;
    std::stringstream ss(*v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto b = item.find_first_not_of(" \t");
      const auto e = item.find_last_not_of(" \t");
      if (b == std::string::npos) throw ConfigError(key, "empty list entry");
      out.push_back(to_double(key, item.substr(b, e - b + 1)));
    }
    return out;
  }

 private:
  const pt::ptree& tree_;
};

void check_unknown(const pt::ptree& tree) {
  const auto& keys = known_keys();
  for (const auto& [section, body] : tree) {
    auto it = keys.find(section);
    if (it == keys.end()) {
      if (body.empty()) throw ConfigError(section, "keys must live inside a [section]");
      throw ConfigError(section, "unknown section");
    }
    for (const auto& [key, value] : body)
      if (!it->second.count(key)) throw ConfigError(section + "." + key, "unknown key");
  }
}

BackgroundKind background_from(const std::string& s) {
  if (s == "constant") return BackgroundKind::Constant;
  if (s == "bump") return BackgroundKind::BumpModulated;
  if (s == "kink-pair") return BackgroundKind::KinkPair;
  throw ConfigError("background.type", "expected constant, bump or kink-pair, got '" + s + "'");
}

NonlinearityKind nonlinearity_from(const std::string& s) {
  if (s == "gross-pitaevskii") return NonlinearityKind::GrossPitaevskii;
  if (s == "cubic-quintic") return NonlinearityKind::CubicQuintic;
  if (s == "polynomial" || s == "user-polynomial") return NonlinearityKind::UserPolynomial;
  throw ConfigError("nonlinearity.kind", "expected gross-pitaevskii, cubic-quintic or polynomial, got '" + s + "'");
}

PerturbationKind perturbation_from(const std::string& s) {
  if (s == "zero") return PerturbationKind::Zero;
  if (s == "gaussian") return PerturbationKind::Gaussian;
  if (s == "bump") return PerturbationKind::Bump;
  if (s == "random") return PerturbationKind::Random;
  throw ConfigError("perturbation.type", "expected zero, gaussian, bump or random, got '" + s + "'");
}

Spectrum spectrum_from(const std::string& key, const std::string& s) {
  try {
    return spectrum_from_string(s);
  } catch (const DomainError& e) {
    throw ConfigError(key, e.what());
  }
}

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + fmt(v[i]);
  return out;
}

void validate(const RunConfig& c) {
  if (c.grid.dim < 1 || c.grid.dim > 3)
    throw ConfigError("grid.dim", "simulation dimensions are {1,2,3}");
  if (c.grid.N < 2 || c.grid.N % 2 != 0) throw ConfigError("grid.N", "must be an even count >= 2");
  if (!(c.grid.L > 0.0)) throw ConfigError("grid.L", "must be positive");

  const auto& b = c.background;
  if (!(b.rho0 > 0.0)) throw ConfigError("background.rho0", "must be positive");
  if (b.type == BackgroundKind::KinkPair) {
    if (c.grid.dim != 1) throw ConfigError("background.type", "kink-pair requires grid.dim = 1");
    if (!(b.separation > 0.0) || b.separation > c.grid.L)
      throw ConfigError("background.separation", "must lie in (0, L]");
  }
  if (b.type == BackgroundKind::BumpModulated) {
    if (!(b.width > 0.0) || !(b.width < c.grid.L / 4.0)) throw ConfigError("background.width", "must lie in (0, L/4)");
    if (!(std::abs(b.amplitude) < std::sqrt(b.rho0)))
      throw ConfigError("background.amplitude", "|amplitude| must be below sqrt(rho0)");
  }

  const auto& n = c.nonlinearity;
  if (n.rho0 != b.rho0) throw ConfigError("nonlinearity.rho0", "must equal background.rho0");
  if (n.kind == NonlinearityKind::CubicQuintic && !(n.a > 0.0 && n.a < n.rho0))
    throw ConfigError("nonlinearity.a", "requires 0 < a < rho0");
  if (n.kind == NonlinearityKind::UserPolynomial && n.coefficients.empty())
    throw ConfigError("nonlinearity.coefficients", "missing required key");
  if (!(n.alpha1 >= 1.0)) throw ConfigError("nonlinearity.alpha1", "must be >= 1");
  if (!(n.alpha1 - n.alpha2 <= 0.5)) throw ConfigError("nonlinearity.alpha2", "requires alpha1 - alpha2 <= 1/2");

  const auto& p = c.perturbation;
  if (!(p.h1_norm >= 0.0)) throw ConfigError("perturbation.h1_norm", "must be nonnegative");
  if (!(p.width > 0.0)) throw ConfigError("perturbation.width", "must be positive");

  const auto& s = c.solver;
  if (!(s.dt > 0.0)) throw ConfigError("solver.dt", "must be positive");
  if (!(s.T > 0.0)) throw ConfigError("solver.T", "must be positive");
  try {
    step_count(s.T, s.dt);
  } catch (const DomainError&) {
    throw ConfigError("solver.dt", "T/dt not integral");
  }
  if (s.picard_max_iter == 0) throw ConfigError("solver.picard_max_iter", "must be positive");
  if (!(s.picard_tol > 0.0)) throw ConfigError("solver.picard_tol", "must be positive");
  if (s.snapshot_stride == 0) throw ConfigError("solver.snapshot_stride", "must be positive");

  const auto& st = c.strichartz;
  if (!is_admissible(st.p, st.q, c.grid.dim))
    throw ConfigError("strichartz.p", "(p, q) is not an admissible pair for grid.dim");
  if (!(st.T > 0.0)) throw ConfigError("strichartz.T", "must be positive");
  if (st.steps == 0) throw ConfigError("strichartz.steps", "must be positive");
  if (st.num_fields == 0) throw ConfigError("strichartz.num_fields", "must be positive");

  if (c.decompose.cases == 0) throw ConfigError("decompose.cases", "must be positive");
  if (!(c.decompose.cutoff_scale > 0.0)) throw ConfigError("decompose.cutoff_scale", "must be positive");
  if (!(c.decompose.epsilon > 0.0)) throw ConfigError("decompose.epsilon", "must be positive");

  const auto& dts = c.convergence.dt_list;
  if (dts.size() < 3) throw ConfigError("convergence.dt_list", "needs at least three entries");
  for (std::size_t i = 0; i < dts.size(); ++i) {
    if (i > 0 && !(dts[i] < dts[i - 1])) throw ConfigError("convergence.dt_list", "must be strictly decreasing");
    try {
      step_count(s.T, dts[i]);
    } catch (const DomainError&) {
      throw ConfigError("convergence.dt_list", "entry " + fmt(dts[i]) + " does not divide T");
    }
  }
  if (c.output.directory.empty()) throw ConfigError("output.directory", "must not be empty");
}

}  // namespace

std::string to_string(PerturbationKind kind) {
  switch (kind) {
    case PerturbationKind::Zero: return "zero";
    case PerturbationKind::Gaussian: return "gaussian";
    case PerturbationKind::Bump: return "bump";
    case PerturbationKind::Random: return "random";
  }
  return "unknown";
}

RunConfig parse_config_string(const std::string& text) {
  pt::ptree tree;
  std::istringstream is(text);
  try {
    pt::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("line " + std::to_string(e.line()), e.message());
  }
  check_unknown(tree);
  const Reader r(tree);
  RunConfig c;

  c.seed = r.count("run.seed", 0);

  c.grid.dim = static_cast<int>(r.required_count("grid.dim"));
  c.grid.N = r.required_count("grid.N");
  c.grid.L = r.required_real("grid.L");

  c.background.type = background_from(r.required_string("background.type"));
  c.background.rho0 = r.real("background.rho0", 1.0);
  c.background.amplitude = r.real("background.amplitude", 0.0);
  c.background.width = r.real("background.width", 1.0);
  c.background.separation = r.real("background.separation", c.grid.L);

  c.nonlinearity.kind = nonlinearity_from(r.required_string("nonlinearity.kind"));
  c.nonlinearity.rho0 = r.real("nonlinearity.rho0", c.background.rho0);
  c.nonlinearity.a = r.real("nonlinearity.a", 0.5 * c.nonlinearity.rho0);
  c.nonlinearity.coefficients = r.real_list("nonlinearity.coefficients");
  double default_alpha1 = 2.0;
  if (c.nonlinearity.kind == NonlinearityKind::CubicQuintic) default_alpha1 = 3.0;
  if (c.nonlinearity.kind == NonlinearityKind::UserPolynomial) {
    std::size_t degree = c.nonlinearity.coefficients.size();
    while (degree > 1 && c.nonlinearity.coefficients[degree - 1] == 0.0) --degree;
    default_alpha1 = std::max(1.0, static_cast<double>(degree));
  }
  c.nonlinearity.alpha1 = r.real("nonlinearity.alpha1", default_alpha1);
  c.nonlinearity.alpha2 = r.real("nonlinearity.alpha2", c.nonlinearity.alpha1 - 0.5);

  c.perturbation.type = perturbation_from(r.raw("perturbation.type").value_or("zero"));
  c.perturbation.h1_norm = r.real("perturbation.h1_norm", 0.1);
  c.perturbation.width = r.real("perturbation.width", 1.0);
  c.perturbation.spectrum = spectrum_from("perturbation.spectrum", r.raw("perturbation.spectrum").value_or("sobolev-decay"));

  const auto scheme = r.raw("solver.scheme").value_or("strang");
  if (scheme == "strang") c.solver.scheme = Scheme::Strang;
  else if (scheme == "picard") c.solver.scheme = Scheme::Picard;
  else throw ConfigError("solver.scheme", "expected strang or picard, got '" + scheme + "'");
  c.solver.dt = r.required_real("solver.dt");
  c.solver.T = r.required_real("solver.T");
  c.solver.picard_max_iter = r.count("solver.picard_max_iter", 50);
  c.solver.picard_tol = r.real("solver.picard_tol", 1e-10);
  c.solver.snapshot_stride = r.count("solver.snapshot_stride", 100);

  if (c.grid.dim >= 1 && c.grid.dim <= 4) {
    const auto pair = admissible_pair_for(c.grid.dim);
    c.strichartz.p = pair.p;
    c.strichartz.q = pair.q;
  }
  c.strichartz.p = r.real("strichartz.p", c.strichartz.p);
  c.strichartz.q = r.real("strichartz.q", c.strichartz.q);
  c.strichartz.T = r.real("strichartz.T", 1.0);
  c.strichartz.steps = r.count("strichartz.steps", 50);
  c.strichartz.num_fields = r.count("strichartz.num_fields", 100);
  c.strichartz.spectrum = spectrum_from("strichartz.spectrum", r.raw("strichartz.spectrum").value_or("flat"));

  c.decompose.cases = r.count("decompose.cases", 100);
  c.decompose.cutoff_scale = r.real("decompose.cutoff_scale", 1.0);
  c.decompose.epsilon = r.real("decompose.epsilon", 0.01);

  c.convergence.dt_list = r.real_list("convergence.dt_list");
  if (c.convergence.dt_list.empty())
    c.convergence.dt_list = {c.solver.dt, c.solver.dt / 2.0, c.solver.dt / 4.0};

  c.output.directory = r.raw("output.directory").value_or("out");
  if (auto formats = r.raw("output.formats")) {
    c.output.csv = c.output.snapshots = c.output.json = false;
    std::stringstream ss(*formats);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto b = item.find_first_not_of(" \t");
      const auto e = item.find_last_not_of(" \t");
      const std::string f = b == std::string::npos ? "" : item.substr(b, e - b + 1);
      if (f == "csv") c.output.csv = true;
      else if (f == "snapshots") c.output.snapshots = true;
      else if (f == "json") c.output.json = true;
      else if (!f.empty()) throw ConfigError("output.formats", "unknown format '" + f + "'");
    }
  }

  validate(c);
  return c;
}

RunConfig parse_config(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("file", "cannot read " + path.string());
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config_string(ss.str());
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream os;
  os << "[run]\nseed = " << c.seed << "\n\n";
  os << "[grid]\ndim = " << c.grid.dim << "\nN = " << c.grid.N << "\nL = " << fmt(c.grid.L) << "\n\n";
  os << "[background]\ntype = " << to_string(c.background.type) << "\nrho0 = " << fmt(c.background.rho0)
     << "\namplitude = " << fmt(c.background.amplitude) << "\nwidth = " << fmt(c.background.width)
     << "\nseparation = " << fmt(c.background.separation) << "\n\n";
  os << "[nonlinearity]\nkind = "
     << (c.nonlinearity.kind == NonlinearityKind::UserPolynomial ? "polynomial" : to_string(c.nonlinearity.kind))
     << "\nrho0 = " << fmt(c.nonlinearity.rho0) << "\na = " << fmt(c.nonlinearity.a) << "\n";
  if (!c.nonlinearity.coefficients.empty()) os << "coefficients = " << join(c.nonlinearity.coefficients) << "\n";
  os << "alpha1 = " << fmt(c.nonlinearity.alpha1) << "\nalpha2 = " << fmt(c.nonlinearity.alpha2) << "\n\n";
  os << "[perturbation]\ntype = " << to_string(c.perturbation.type) << "\nh1_norm = " << fmt(c.perturbation.h1_norm)
     << "\nwidth = " << fmt(c.perturbation.width) << "\nspectrum = " << to_string(c.perturbation.spectrum) << "\n\n";
  os << "[solver]\nscheme = " << to_string(c.solver.scheme) << "\ndt = " << fmt(c.solver.dt) << "\nT = " << fmt(c.solver.T)
     << "\npicard_max_iter = " << c.solver.picard_max_iter << "\npicard_tol = " << fmt(c.solver.picard_tol)
     << "\nsnapshot_stride = " << c.solver.snapshot_stride << "\n\n";
  os << "[strichartz]\np = " << fmt(c.strichartz.p) << "\nq = " << fmt(c.strichartz.q) << "\nT = " << fmt(c.strichartz.T)
     << "\nsteps = " << c.strichartz.steps << "\nnum_fields = " << c.strichartz.num_fields
     << "\nspectrum = " << to_string(c.strichartz.spectrum) << "\n\n";
  os << "[decompose]\ncases = " << c.decompose.cases << "\ncutoff_scale = " << fmt(c.decompose.cutoff_scale)
     << "\nepsilon = " << fmt(c.decompose.epsilon) << "\n\n";
  os << "[convergence]\ndt_list = " << join(c.convergence.dt_list) << "\n\n";
  std::string formats;
  if (c.output.csv) formats += "csv";
  if (c.output.snapshots) formats += std::string(formats.empty() ? "" : ", ") + "snapshots";
  if (c.output.json) formats += std::string(formats.empty() ? "" : ", ") + "json";
  os << "[output]\ndirectory = " << c.output.directory << "\nformats = " << formats << "\n";
  return os.str();
}

Grid RunConfig::make_grid() const { return Grid(grid.dim, grid.N, grid.L); }

Background RunConfig::make_background(const Grid& g) const {
  switch (background.type) {
    case BackgroundKind::Constant: return constant_background(g, background.rho0);
    case BackgroundKind::BumpModulated:
      return bump_modulated_background(g, background.rho0, background.amplitude, background.width);
    case BackgroundKind::KinkPair: return kink_pair_background(g, background.rho0, background.separation);
  }
  throw DomainError("unknown background type");
}

Nonlinearity RunConfig::make_nonlinearity() const {
  switch (nonlinearity.kind) {
    case NonlinearityKind::GrossPitaevskii: return make_gross_pitaevskii(nonlinearity.rho0);
    case NonlinearityKind::CubicQuintic: return make_cubic_quintic(nonlinearity.rho0, nonlinearity.a);
    case NonlinearityKind::UserPolynomial:
      return Nonlinearity::user_polynomial(nonlinearity.rho0, nonlinearity.coefficients);
  }
  throw DomainError("unknown nonlinearity kind");
}

Field RunConfig::make_perturbation(const Background& bg) const {
  const Grid& g = bg.phi.grid();
  const double w = perturbation.width;
  Field out(g);
  switch (perturbation.type) {
    case PerturbationKind::Zero: return out;
    case PerturbationKind::Gaussian:
      out = Field::from_function(g, [w](const std::array<double, 3>& x) {
        const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
        return Complex(std::exp(-r2 / (2.0 * w * w)), 0.0);
      });
      break;
    case PerturbationKind::Bump:
      out = Field::from_function(g, [w](const std::array<double, 3>& x) {
        const double r2 = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) / (w * w);
        return Complex(r2 < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - r2)) : 0.0, 0.0);
      });
      break;
    case PerturbationKind::Random: out = seeded_random_field(g, seed, perturbation.spectrum); break;
  }
  const double norm = h1_norm(out);
  if (!(norm > 0.0)) throw DomainError("perturbation profile vanishes on this grid");
  out *= Complex(perturbation.h1_norm / norm, 0.0);
  return out;
}

SolverConfig RunConfig::solver_config() const {
  SolverConfig s;
  s.dt = solver.dt;
  s.T = solver.T;
  s.scheme = solver.scheme;
  s.picard_max_iter = solver.picard_max_iter;
  s.picard_tol = solver.picard_tol;
  s.snapshot_stride = solver.snapshot_stride;
  return s;
}

AdmissiblePair RunConfig::strichartz_pair() const { return {strichartz.p, strichartz.q, grid.dim}; }

}  // namespace gpf
