#pragma once

#include <string>

#include "gpfield/grid.hpp"

namespace gpf {

enum class BackgroundKind { Constant, BumpModulated, KinkPair };

std::string to_string(BackgroundKind kind);

/// Time-independent profile phi with |phi|^2 -> rho0 away from its core.
struct Background {
  Field phi;
  double rho0 = 1.0;
  BackgroundKind descriptor = BackgroundKind::Constant;
  Field laplacian_phi;
  /// |phi(L) - phi(-L)| of the analytic profile (0 for profiles that are
  /// constant near the seams).
  double periodicity_residual = 0.0;
};

/// phi = sqrt(rho0); laplacian_phi = 0.
Background constant_background(const Grid& grid, double rho0);

/// 1D kink-antikink pair
///   phi(x) = sqrt(rho0) tanh(a (x + s/2)) * (-tanh(a (x - s/2))),  a = sqrt(rho0/2),
/// the periodic arrangement of two GP black solitons at x = -s/2 and x = +s/2
/// (phi = +sqrt(rho0) between them, -sqrt(rho0) at the seam).
/// Requires 0 < s <= L and tails saturated below 1e-10 midway between the
/// kinks and across the seam.
Background kink_pair_background(const Grid& grid, double rho0, double separation);

/// sqrt(rho0) plus the smooth compactly supported bump
///   amplitude * exp(1 - 1/(1 - (|x|/width)^2)) for |x| < width.
Background bump_modulated_background(const Grid& grid, double rho0, double amplitude, double width);

struct HphiReport {
  /// Lattice || grad phi ||_{H^2}.
  double grad_h2_norm = 0.0;
  /// Lattice || |phi|^2 - rho0 ||_{L^2}.
  double density_defect_l2 = 0.0;
  /// Share of spectral energy with |xi| >= xi_max / 2 (smoothness proxy).
  double tail_fraction = 0.0;
  bool passed = false;
};

inline constexpr double kHphiTailThreshold = 1e-6;

HphiReport check_Hphi(const Background& bg);
/// Same checks on a bare profile (used for arbitrary test inputs).
HphiReport check_Hphi(const Field& phi, double rho0);

}  // namespace gpf
