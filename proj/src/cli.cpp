#include "gpfield/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>

#include "gpfield/config.hpp"
#include "gpfield/conservation.hpp"
#include "gpfield/decomposition.hpp"
#include "gpfield/errors.hpp"
#include "gpfield/propagator.hpp"
#include "gpfield/random_field.hpp"
#include "gpfield/report_json.hpp"
#include "gpfield/snapshot.hpp"
#include "gpfield/solver.hpp"

namespace gpf {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string command;
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::string snapshot_path;
};

struct Outcome {
  bool passed = true;
  Json body = Json::object();
  std::vector<std::string> artifacts;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

RunConfig load(const Options& opt) {
  RunConfig cfg = parse_config(opt.config_path);
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.out_dir) cfg.output.directory = *opt.out_dir;
  return cfg;
}

fs::path prepare_dir(const RunConfig& cfg) {
  fs::path dir(cfg.output.directory);
  fs::create_directories(dir);
  return dir;
}

void emit(Outcome& o, const fs::path& path, const std::string& contents) {
  write_file_atomic(path, contents);
  o.artifacts.push_back(path.string());
}

Outcome cmd_check_hypotheses(const RunConfig& cfg) {
  const Nonlinearity nl = cfg.make_nonlinearity();
  const double a1 = cfg.nonlinearity.alpha1;
  Outcome o;
  Json reports = Json::array();
  const std::vector<HypothesisReport> all{
      check_Hf(nl),
      check_Halpha1prime(nl, a1),
      check_Halpha1(nl, a1, cfg.grid.dim),
      check_Halpha2(nl, a1, cfg.nonlinearity.alpha2),
      check_ff01(nl, a1),
  };
  for (const auto& r : all) {
    reports.push_back(to_json(r));
    o.passed = o.passed && r.passed;
  }
  const Grid grid = cfg.make_grid();
  const HphiReport hphi = check_Hphi(cfg.make_background(grid));
  o.passed = o.passed && hphi.passed;
  Json dims = Json::array();
  for (int d : max_admissible_dimension(a1)) dims.push_back(d);
  o.body["nonlinearity"] = to_string(nl.kind());
  o.body["alpha1"] = a1;
  o.body["reports"] = std::move(reports);
  o.body["Hphi"] = to_json(hphi);
  o.body["admissible_dimensions"] = std::move(dims);
  return o;
}

// Per-step CSV of the solver bookkeeping.
std::string timeseries_csv(const Trajectory& traj) {
  std::ostringstream os;
  os << "t,energy,rel_drift,mass,h1\n";
  const double e0 = traj.energy_series.front();
  const double denom = std::max(std::abs(e0), kDriftFloor);
  for (std::size_t k = 0; k < traj.energy_series.size(); ++k) {
    os << num(traj.dt * static_cast<double>(k)) << ',' << num(traj.energy_series[k]) << ','
       << num(std::abs(traj.energy_series[k] - e0) / denom) << ',' << num(traj.mass_series[k]) << ','
       << num(traj.h1_series[k]) << '\n';
  }
  return os.str();
}

std::string drift_csv(const EnergyReport& rep) {
  std::ostringstream os;
  os << "t,energy,rel_drift,mass\n";
  const double denom = std::max(std::abs(rep.e0), rep.floor);
  for (std::size_t k = 0; k < rep.series.size(); ++k) {
    os << num(rep.times[k]) << ',' << num(rep.series[k]) << ',' << num(std::abs(rep.series[k] - rep.e0) / denom)
       << ',' << num(rep.mass_series[k]) << '\n';
  }
  return os.str();
}

// Shared tail of evolve and picard: artifacts plus the drift diagnostics.
// Mass is conserved to rounding only by the splitting scheme; the Duhamel
// quadrature conserves it to truncation order, so Picard runs just report it.
Outcome finish_run(const RunConfig& cfg, const Trajectory& traj, const Background& bg, const Nonlinearity& nl,
                   bool gate_mass) {
  Outcome o;
  const EnergyReport drift = drift_report(traj, bg, nl);
  const fs::path dir = prepare_dir(cfg);
  if (cfg.output.csv) {
    emit(o, dir / "timeseries.csv", timeseries_csv(traj));
    emit(o, dir / "drift.csv", drift_csv(drift));
  }
  if (cfg.output.snapshots) {
    fs::create_directories(dir / "snapshots");
    for (std::size_t k = 0; k < traj.w_fields.size(); ++k) {
      char name[32];
      std::snprintf(name, sizeof name, "w_%08zu.gpf", traj.snapshot_steps[k]);
      const fs::path p = dir / "snapshots" / name;
      write_snapshot(p, traj.w_fields[k], bg.rho0, traj.times[k]);
      o.artifacts.push_back(p.string());
    }
  }
  if (cfg.output.json) emit(o, dir / "drift.json", to_json(drift).dump(2) + "\n");

  const double tol = 1e-12 * std::max(1.0, std::abs(drift.e0));
  const bool bookkeeping_ok = drift.bookkeeping_mismatch <= tol;
  const bool mass_ok = drift.max_mass_drift <= 1e-10;
  o.passed = bookkeeping_ok && (mass_ok || !gate_mass);
  o.body["run"] = trajectory_summary(traj);
  o.body["drift"] = to_json(drift, false);
  o.body["checks"] = {{"bookkeeping_agreement", bookkeeping_ok}};
  if (gate_mass) o.body["checks"]["mass_conservation"] = mass_ok;
  return o;
}

Outcome cmd_evolve(const RunConfig& cfg) {
  const Grid grid = cfg.make_grid();
  const Background bg = cfg.make_background(grid);
  const Nonlinearity nl = cfg.make_nonlinearity();
  const Field w0 = cfg.make_perturbation(bg);
  SolverConfig sc = cfg.solver_config();
  sc.scheme = Scheme::Strang;
  return finish_run(cfg, evolve(w0, bg, nl, sc), bg, nl, true);
}

Outcome cmd_picard(const RunConfig& cfg) {
  const Grid grid = cfg.make_grid();
  const Background bg = cfg.make_background(grid);
  const Nonlinearity nl = cfg.make_nonlinearity();
  const Field w0 = cfg.make_perturbation(bg);
  SolverConfig sc = cfg.solver_config();
  sc.scheme = Scheme::Picard;
  const Trajectory traj = picard_solve(w0, bg, nl, sc);
  Outcome o = finish_run(cfg, traj, bg, nl, false);

  sc.scheme = Scheme::Strang;
  sc.snapshot_stride = traj.steps;
  const Trajectory strang = evolve(w0, bg, nl, sc);
  const double diff = lp_norm(traj.w_fields.back() - strang.w_fields.back(), 2.0);
  bool contracting = true;
  for (double f : traj.picard_history) contracting = contracting && f < 1.0;
  o.body["strang_l2_difference"] = json_number(diff);
  o.body["checks"]["contraction"] = contracting;
  o.passed = o.passed && contracting;
  return o;
}

Outcome cmd_strichartz(const RunConfig& cfg) {
  const Grid grid = cfg.make_grid();
  const auto& s = cfg.strichartz;
  const StrichartzReport rep =
      strichartz_ratio(grid, cfg.seed, cfg.strichartz_pair(), s.T, s.steps, s.num_fields, s.spectrum);
  Outcome o;
  for (double r : rep.ratios) o.passed = o.passed && std::isfinite(r) && r > 0.0;
  o.body["report"] = to_json(rep);
  const fs::path dir = prepare_dir(cfg);
  if (cfg.output.json) emit(o, dir / "strichartz.json", o.body["report"].dump(2) + "\n");
  return o;
}

Outcome cmd_decompose_test(const RunConfig& cfg) {
  const Grid grid = cfg.make_grid();
  const Background bg = cfg.make_background(grid);
  const Nonlinearity nl = cfg.make_nonlinearity();
  const auto& d = cfg.decompose;
  const double lipschitz = f1_lipschitz_bound(bg, nl);
  const double q_bound = std::sqrt(1.0 + 4.0 * d.cutoff_scale * d.cutoff_scale);

  double forcing_err = 0.0;
  double oracle_err = 0.0;
  double freq_err = 0.0;
  double lip_max = 0.0;
  double q_max = 0.0;
  double ratio_min = kInf;
  double ratio_max = 0.0;
  const std::size_t ratio_cases = std::min<std::size_t>(d.cases, 20);
  auto unit = [&](std::uint64_t s) {
    Field f = seeded_random_field(grid, s, Spectrum::SobolevDecay);
    f *= Complex(1.0 / h1_norm(f), 0.0);
    return f;
  };
  for (std::size_t k = 0; k < d.cases; ++k) {
    const std::uint64_t s = cfg.seed + k;
    Field w = unit(s);
    w *= Complex(cfg.perturbation.h1_norm, 0.0);

    const ForcingSplit split = split_forcing(w, bg, nl);
    const Field oracle = remainder_explicit(w, bg, nl);
    const double scale = std::max(1.0, lp_norm(split.whole, kInf));
    forcing_err = std::max(forcing_err, lp_norm(split.f1 + split.f2 - split.whole, kInf) / scale);
    oracle_err = std::max(oracle_err, lp_norm(split.f2 - oracle, kInf) / scale);

    const FrequencySplit fsplit = frequency_split(w, d.cutoff_scale);
    freq_err = std::max(freq_err, lp_norm(fsplit.low + fsplit.high - w, kInf) / std::max(1.0, lp_norm(w, kInf)));

    Field v = unit(s + d.cases);
    v *= Complex(cfg.perturbation.h1_norm, 0.0);
    const Field dv = w - v;
    lip_max = std::max(lip_max, lp_norm(split.f1 - split_forcing(v, bg, nl).f1, 2.0) / lp_norm(dv, 2.0));
    q_max = std::max(q_max, q_smoothing_ratio(w, d.cutoff_scale));

    if (k < ratio_cases) {
      Field big = unit(s);
      big *= Complex(d.epsilon, 0.0);
      Field small = unit(s);
      small *= Complex(d.epsilon / 2.0, 0.0);
      const double r = lp_norm(split_forcing(big, bg, nl).f2, kInf) / lp_norm(split_forcing(small, bg, nl).f2, kInf);
      ratio_min = std::min(ratio_min, r);
      ratio_max = std::max(ratio_max, r);
    }
  }

  Outcome o;
  const Json checks = {
      {"forcing_reconstruction", forcing_err <= 1e-12},
      {"remainder_oracle", oracle_err <= 1e-12},
      {"frequency_reconstruction", freq_err <= 1e-12},
      {"lipschitz", lip_max <= lipschitz * (1.0 + 1e-12)},
      {"q_smoothing", q_max <= q_bound * (1.0 + 1e-12)},
      {"quadratic_remainder", ratio_min >= 3.5 && ratio_max <= 4.5},
  };
  for (const auto& [k, v] : checks.items()) o.passed = o.passed && v.get<bool>();
  o.body["cases"] = d.cases;
  o.body["forcing_reconstruction_error"] = json_number(forcing_err);
  o.body["remainder_oracle_error"] = json_number(oracle_err);
  o.body["frequency_reconstruction_error"] = json_number(freq_err);
  o.body["lipschitz_bound"] = json_number(lipschitz);
  o.body["lipschitz_max_ratio"] = json_number(lip_max);
  o.body["q_smoothing_bound"] = json_number(q_bound);
  o.body["q_smoothing_max_ratio"] = json_number(q_max);
  o.body["remainder_ratio_cases"] = ratio_cases;
  o.body["remainder_ratio_min"] = json_number(ratio_min);
  o.body["remainder_ratio_max"] = json_number(ratio_max);
  o.body["checks"] = checks;
  const fs::path dir = prepare_dir(cfg);
  if (cfg.output.json) emit(o, dir / "decompose.json", o.body.dump(2) + "\n");
  return o;
}

Outcome cmd_energy(const Options& opt) {
  const Snapshot snap = read_snapshot(opt.snapshot_path);
  const Grid& grid = snap.field.grid();
  Outcome o;
  Background bg = constant_background(grid, snap.rho0);
  Nonlinearity nl = make_gross_pitaevskii(snap.rho0);
  std::string source = "default";
  if (!opt.config_path.empty()) {
    const RunConfig cfg = load(opt);
    if (!(cfg.make_grid() == grid)) throw ConfigError("grid", "does not match the snapshot grid");
    bg = cfg.make_background(grid);
    nl = cfg.make_nonlinearity();
    source = "config";
  }
  o.body["snapshot"] = opt.snapshot_path;
  o.body["model"] = source;
  o.body["time"] = snap.time;
  o.body["rho0"] = snap.rho0;
  o.body["grid"] = describe(grid);
  o.body["energy"] = json_number(energy(snap.field, bg, nl));
  o.body["mass"] = json_number(renormalized_mass(bg.phi + snap.field, bg.rho0));
  o.body["h1_norm"] = json_number(h1_norm(snap.field));
  o.passed = snap.field.all_finite();
  return o;
}

Outcome cmd_convergence(const RunConfig& cfg) {
  const Grid grid = cfg.make_grid();
  const Background bg = cfg.make_background(grid);
  const Nonlinearity nl = cfg.make_nonlinearity();
  const Field w0 = cfg.make_perturbation(bg);
  const ConvergenceResult res = convergence_order(w0, bg, nl, cfg.solver.T, cfg.convergence.dt_list);
  Outcome o;
  o.passed = res.exact || (res.order >= 1.8 && res.order <= 2.2);
  o.body["result"] = to_json(res);
  o.body["expected_order"] = Json::array({1.8, 2.2});
  const fs::path dir = prepare_dir(cfg);
  if (cfg.output.json) emit(o, dir / "convergence.json", o.body["result"].dump(2) + "\n");
  return o;
}

Json error_body(const std::string& kind, const std::string& message) {
  return {{"type", kind}, {"message", message}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Defocusing NLS perturbations of non-vanishing backgrounds", "gpfield"};
  app.require_subcommand(1);
  Options opt;
  std::uint64_t seed = 0;
  std::string out_dir;

  auto add = [&](const std::string& name, const std::string& help, bool needs_config) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto* c = sub->add_option("--config", opt.config_path, "INI run configuration");
    if (needs_config) c->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "override [run] seed");
    sub->add_option("--out", out_dir, "override [output] directory");
    return sub;
  };
  add("check-hypotheses", "certify the nonlinearity and background hypotheses", true);
  add("evolve", "Strang time integration with drift diagnostics", true);
  add("picard", "Duhamel fixed-point iteration cross-checked against Strang", true);
  add("strichartz", "empirical Strichartz ratios of seeded random fields", true);
  add("decompose-test", "forcing and frequency split identities and bounds", true);
  CLI::App* energy_cmd = add("energy", "energy and mass of a GPF1 snapshot", false);
  energy_cmd->add_option("snapshot", opt.snapshot_path, "GPF1 snapshot file")->required();
  add("convergence", "Strang time-step convergence order", true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, err, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    out << Json{{"status", "error"}, {"exit_code", kExitUsage}, {"error", error_body("usage", e.what())}}.dump(2)
        << "\n";
    return kExitUsage;
  }
  opt.command = app.get_subcommands().front()->get_name();
  const CLI::App* sub = app.get_subcommands().front();
  if (sub->count("--seed")) opt.seed = seed;
  if (sub->count("--out")) opt.out_dir = out_dir;

  Json summary;
  summary["command"] = opt.command;
  int code = kExitPass;
  try {
    Outcome o;
    if (opt.command == "energy") {
      o = cmd_energy(opt);
    } else {
      const RunConfig cfg = load(opt);
      summary["config"] = to_json(cfg);
      if (opt.command == "check-hypotheses") o = cmd_check_hypotheses(cfg);
      else if (opt.command == "evolve") o = cmd_evolve(cfg);
      else if (opt.command == "picard") o = cmd_picard(cfg);
      else if (opt.command == "strichartz") o = cmd_strichartz(cfg);
      else if (opt.command == "decompose-test") o = cmd_decompose_test(cfg);
      else o = cmd_convergence(cfg);
    }
    code = o.passed ? kExitPass : kExitCheckFailed;
    summary["status"] = o.passed ? "pass" : "fail";
    summary["exit_code"] = code;
    summary.update(o.body);
    summary["artifacts"] = o.artifacts;
  } catch (const ConfigError& e) {
    code = kExitUsage;
    summary["status"] = "error";
    summary["exit_code"] = code;
    summary["error"] = error_body("config", e.what());
    summary["error"]["key"] = e.key();
  } catch (const FormatError& e) {
    code = kExitUsage;
    summary["status"] = "error";
    summary["exit_code"] = code;
    summary["error"] = error_body("format", e.what());
    summary["error"]["offset"] = e.offset();
  } catch (const DomainError& e) {
    code = kExitUsage;
    summary["status"] = "error";
    summary["exit_code"] = code;
    summary["error"] = error_body("domain", e.what());
  } catch (const NonContractionError& e) {
    code = kExitCheckFailed;
    summary["status"] = "fail";
    summary["exit_code"] = code;
    summary["error"] = error_body("non-contraction", e.what());
  } catch (const DiagnosticsError& e) {
    code = kExitCheckFailed;
    summary["status"] = "fail";
    summary["exit_code"] = code;
    summary["error"] = error_body("diagnostics", e.what());
  } catch (const NumericError& e) {
    code = kExitCheckFailed;
    summary["status"] = "fail";
    summary["exit_code"] = code;
    summary["error"] = error_body("numeric", e.what());
  } catch (const std::exception& e) {
    code = kExitUsage;
    summary["status"] = "error";
    summary["exit_code"] = code;
    summary["error"] = error_body("io", e.what());
  }
  if (summary.contains("error")) err << "gpfield " << opt.command << ": " << summary["error"]["message"].get<std::string>() << "\n";
  out << summary.dump(2) << "\n";
  return code;
}

}  // namespace gpf
