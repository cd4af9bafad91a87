#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gpfield/background.hpp"
#include "gpfield/grid.hpp"
#include "gpfield/nonlinearity.hpp"
#include "gpfield/random_field.hpp"
#include "gpfield/solver.hpp"

namespace gpf {

// INI-style run configuration. Sections and keys (defaults in brackets):
//
//   [run]           seed [0]
//   [grid]          dim, N, L                                   (required)
//   [background]    type = constant | bump | kink-pair          (required)
//                   rho0 [1], amplitude [0], width [1], separation [L]
//   [nonlinearity]  kind = gross-pitaevskii | cubic-quintic | polynomial (required)
//                   rho0 [background rho0], a [0.5 rho0],
//                   coefficients (polynomial: c0, c1, ... in powers of r),
//                   alpha1 [degree + 1], alpha2 [alpha1 - 1/2]
//   [perturbation]  type = zero | gaussian | bump | random [zero],
//                   h1_norm [0.1], width [1], spectrum [sobolev-decay]
//   [solver]        scheme = strang | picard [strang], dt, T (required),
//                   picard_max_iter [50], picard_tol [1e-10], snapshot_stride [100]
//   [strichartz]    p, q [admissible pair for dim], T [1], steps [50],
//                   num_fields [100], spectrum [flat]
//   [decompose]     cases [100], cutoff_scale [1], epsilon [0.01]
//   [convergence]   dt_list [dt, dt/2, dt/4]
//   [output]        directory [out], formats [csv, snapshots, json]

struct GridSection {
  int dim = 1;
  std::size_t N = 256;
  double L = 20.0;
  bool operator==(const GridSection&) const = default;
};

struct BackgroundSection {
  BackgroundKind type = BackgroundKind::Constant;
  double rho0 = 1.0;
  double amplitude = 0.0;
  double width = 1.0;
  double separation = 0.0;
  bool operator==(const BackgroundSection&) const = default;
};

struct NonlinearitySection {
  NonlinearityKind kind = NonlinearityKind::GrossPitaevskii;
  double rho0 = 1.0;
  double a = 0.5;
  std::vector<double> coefficients;
  double alpha1 = 2.0;
  double alpha2 = 1.5;
  bool operator==(const NonlinearitySection&) const = default;
};

enum class PerturbationKind { Zero, Gaussian, Bump, Random };

struct PerturbationSection {
  PerturbationKind type = PerturbationKind::Zero;
  double h1_norm = 0.1;
  double width = 1.0;
  Spectrum spectrum = Spectrum::SobolevDecay;
  bool operator==(const PerturbationSection&) const = default;
};

struct SolverSection {
  Scheme scheme = Scheme::Strang;
  double dt = 1e-3;
  double T = 1.0;
  std::size_t picard_max_iter = 50;
  double picard_tol = 1e-10;
  std::size_t snapshot_stride = 100;
  bool operator==(const SolverSection&) const = default;
};

struct StrichartzSection {
  double p = kInf;
  double q = 2.0;
  double T = 1.0;
  std::size_t steps = 50;
  std::size_t num_fields = 100;
  Spectrum spectrum = Spectrum::Flat;
  bool operator==(const StrichartzSection&) const = default;
};

struct DecomposeSection {
  std::size_t cases = 100;
  double cutoff_scale = 1.0;
  double epsilon = 0.01;
  bool operator==(const DecomposeSection&) const = default;
};

struct ConvergenceSection {
  std::vector<double> dt_list;
  bool operator==(const ConvergenceSection&) const = default;
};

struct OutputSection {
  std::string directory = "out";
  bool csv = true;
  bool snapshots = true;
  bool json = true;
  bool operator==(const OutputSection&) const = default;
};

struct RunConfig {
  std::uint64_t seed = 0;
  GridSection grid;
  BackgroundSection background;
  NonlinearitySection nonlinearity;
  PerturbationSection perturbation;
  SolverSection solver;
  StrichartzSection strichartz;
  DecomposeSection decompose;
  ConvergenceSection convergence;
  OutputSection output;
  bool operator==(const RunConfig&) const = default;

  Grid make_grid() const;
  Background make_background(const Grid& grid) const;
  Nonlinearity make_nonlinearity() const;
  Field make_perturbation(const Background& bg) const;
  SolverConfig solver_config() const;
  AdmissiblePair strichartz_pair() const;
};

/// Throws ConfigError naming "section.key" on missing keys, malformed values
/// or violated cross-field constraints.
RunConfig parse_config_string(const std::string& text);
RunConfig parse_config(const std::filesystem::path& path);
/// Full INI text with every field written out; parses back to an equal config.
std::string serialize_config(const RunConfig& cfg);

std::string to_string(PerturbationKind kind);

}  // namespace gpf
