#pragma once

#include <vector>

#include "gpfield/background.hpp"
#include "gpfield/nonlinearity.hpp"
#include "gpfield/trajectory.hpp"

namespace gpf {

/// Ginzburg-Landau energy  \int |grad(phi + w)|^2 + \int V(|phi + w|^2).
double energy(const Field& w, const Background& bg, const Nonlinearity& nl);
/// The same functional on the full state u = phi + w.
double energy_of_state(const Field& u, const Nonlinearity& nl);

/// sum (|u|^2 - rho0) * cell_volume.
double renormalized_mass(const Field& u, double rho0);

struct EnergyReport {
  double e0 = 0.0;
  std::vector<double> times;
  std::vector<double> series;
  std::vector<double> mass_series;
  double max_rel_drift = 0.0;
  double max_abs_drift = 0.0;
  double max_mass_drift = 0.0;
  double floor = 1e-10;
  /// Largest |recomputed - solver bookkeeping| over the snapshots (0 when the
  /// report was built from a series directly).
  double bookkeeping_mismatch = 0.0;
};

inline constexpr double kDriftFloor = 1e-10;

/// Drift statistics of an energy series: max_t |E(t) - E(0)| / max(|E(0)|, floor).
EnergyReport energy_report_from_series(std::vector<double> times, std::vector<double> series,
                                       std::vector<double> mass_series, double floor = kDriftFloor);

/// Recomputes energy and mass from the trajectory's snapshots and compares
/// them with the per-step bookkeeping of the solver.
EnergyReport drift_report(const Trajectory& traj, const Background& bg, const Nonlinearity& nl,
                          double floor = kDriftFloor);

/// ||w||_{L^inf_T H^1} + ||w||_{L^p_T W^{1,q}} over the snapshots (left
/// rectangle rule in time).
double xt_norm(const Trajectory& traj, const AdmissiblePair& pair);

}  // namespace gpf
