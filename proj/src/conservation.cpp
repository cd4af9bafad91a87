#include "gpfield/conservation.hpp"

#include <cmath>

#include "gpfield/errors.hpp"
#include "gpfield/spectral.hpp"

namespace gpf {

double energy_of_state(const Field& u, const Nonlinearity& nl) {
  const Grid& grid = u.grid();
  const auto c = forward_transform(u);
  double kinetic = 0.0;
  for (int d = 0; d < grid.dim(); ++d) {
    const Field du = partial_from_coefficients(grid, c, d);
    for (const auto& v : du.values()) kinetic += std::norm(v);
  }
  double potential = 0.0;
  for (const auto& v : u.values()) potential += nl.V(std::norm(v));
  return (kinetic + potential) * grid.cell_volume();
}

double energy(const Field& w, const Background& bg, const Nonlinearity& nl) {
  require_same_grid(w.grid(), bg.phi.grid(), "energy");
  return energy_of_state(bg.phi + w, nl);
}

double renormalized_mass(const Field& u, double rho0) {
  double acc = 0.0;
  for (const auto& v : u.values()) acc += std::norm(v) - rho0;
  return acc * u.grid().cell_volume();
}

EnergyReport energy_report_from_series(std::vector<double> times, std::vector<double> series,
                                       std::vector<double> mass_series, double floor) {
  if (series.empty()) throw DomainError("energy report of an empty series");
  EnergyReport rep;
  rep.floor = floor;
  rep.e0 = series.front();
  const double denom = std::max(std::abs(rep.e0), floor);
  for (double e : series) {
    rep.max_abs_drift = std::max(rep.max_abs_drift, std::abs(e - rep.e0));
  }
  rep.max_rel_drift = rep.max_abs_drift / denom;
  if (!mass_series.empty())
    for (double m : mass_series) rep.max_mass_drift = std::max(rep.max_mass_drift, std::abs(m - mass_series.front()));
  rep.times = std::move(times);
  rep.series = std::move(series);
  rep.mass_series = std::move(mass_series);
  return rep;
}

EnergyReport drift_report(const Trajectory& traj, const Background& bg, const Nonlinearity& nl,
                          double floor) {
  if (traj.w_fields.empty()) throw DomainError("drift_report: empty trajectory");
  std::vector<double> energies;
  std::vector<double> masses;
  double mismatch = 0.0;
  for (std::size_t k = 0; k < traj.w_fields.size(); ++k) {
    const Field u = bg.phi + traj.w_fields[k];
    energies.push_back(energy_of_state(u, nl));
    masses.push_back(renormalized_mass(u, bg.rho0));
    if (k < traj.snapshot_steps.size() && traj.snapshot_steps[k] < traj.energy_series.size())
      mismatch = std::max(mismatch, std::abs(energies.back() - traj.energy_series[traj.snapshot_steps[k]]));
  }
  auto rep = energy_report_from_series(traj.times, std::move(energies), std::move(masses), floor);
  rep.bookkeeping_mismatch = mismatch;
  return rep;
}

double xt_norm(const Trajectory& traj, const AdmissiblePair& pair) {
  if (traj.w_fields.empty()) throw DomainError("xt_norm: empty trajectory");
  if (!is_admissible(pair)) throw DomainError("xt_norm: pair is not admissible");
  if (pair.n != traj.w_fields.front().grid().dim())
    throw DomainError("xt_norm: pair dimension does not match the run");
  double sup_h1 = 0.0;
  std::vector<double> w1q;
  for (const auto& w : traj.w_fields) {
    sup_h1 = std::max(sup_h1, h1_norm(w));
    w1q.push_back(w1q_norm(w, pair.q));
  }
  double lp = 0.0;
  if (std::isinf(pair.p)) {
    for (double v : w1q) lp = std::max(lp, v);
  } else {
    for (std::size_t k = 0; k + 1 < w1q.size(); ++k)
      lp += (traj.times[k + 1] - traj.times[k]) * std::pow(w1q[k], pair.p);
    lp = std::pow(lp, 1.0 / pair.p);
  }
  return sup_h1 + lp;
}

}  // namespace gpf
