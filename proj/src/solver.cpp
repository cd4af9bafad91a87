#include "gpfield/solver.hpp"

#include <cmath>

#include "gpfield/conservation.hpp"
#include "gpfield/decomposition.hpp"
#include "gpfield/errors.hpp"
#include "gpfield/propagator.hpp"
#include "gpfield/spectral.hpp"

namespace gpf {

namespace {

// Per-step bookkeeping shared by both schemes.
class Recorder {
 public:
  Recorder(Trajectory& traj, const Background& bg, const Nonlinearity& nl, std::size_t stride)
      : traj_(traj), bg_(bg), nl_(nl), stride_(std::max<std::size_t>(stride, 1)) {}

  void record(std::size_t step, const Field& u, const Field& w) {
    traj_.energy_series.push_back(energy_of_state(u, nl_));
    traj_.mass_series.push_back(renormalized_mass(u, bg_.rho0));
    traj_.h1_series.push_back(h1_norm(w));
    traj_.w1q_series.push_back(w1q_norm(w, traj_.pair.q));
    if (step % stride_ == 0 || step == traj_.steps) {
      traj_.times.push_back(traj_.dt * static_cast<double>(step));
      traj_.snapshot_steps.push_back(step);
      traj_.w_fields.push_back(w);
    }
  }

  void finish() {
    double sup_h1 = 0.0;
    for (double v : traj_.h1_series) sup_h1 = std::max(sup_h1, v);
    double lp = 0.0;
    if (std::isinf(traj_.pair.p)) {
      for (double v : traj_.w1q_series) lp = std::max(lp, v);
    } else if (traj_.steps > 0) {
      lp = mixed_norm_of_values(std::span<const double>(traj_.w1q_series.data(), traj_.steps),
                                traj_.pair.p, traj_.dt);
    }
    traj_.xt_norm = sup_h1 + lp;
  }

 private:
  Trajectory& traj_;
  const Background& bg_;
  const Nonlinearity& nl_;
  std::size_t stride_;
};

Trajectory start_trajectory(const Field& w0, const SolverConfig& cfg) {
  Trajectory traj;
  traj.dt = cfg.dt;
  traj.steps = step_count(cfg.T, cfg.dt);
  traj.pair = admissible_pair_for(w0.grid().dim());
  return traj;
}

void check_inputs(const Field& w0, const Background& bg, const Nonlinearity& nl, const SolverConfig& cfg) {
  require_same_grid(w0.grid(), bg.phi.grid(), "solver");
  if (!w0.all_finite()) throw DomainError("solver: initial perturbation is not finite");
  if (cfg.require_hf && !check_Hf(nl).passed)
    throw DomainError("solver: nonlinearity fails H_f (f(rho0) = 0, f'(rho0) < 0)");
}

}  // namespace

std::string to_string(Scheme s) { return s == Scheme::Strang ? "strang" : "picard"; }

std::size_t step_count(double T, double dt) {
  if (!(dt > 0.0) || !(T > 0.0)) throw DomainError("T and dt must be positive");
  const double ratio = T / dt;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio))
    throw DomainError("T/dt not integral");
  return static_cast<std::size_t>(rounded);
}

void nonlinear_substep(Field& u, const Nonlinearity& nl, double tau) {
  for (auto& v : u.values()) v *= std::polar(1.0, tau * nl.f(std::norm(v)));
}

StrangStepper::StrangStepper(const Grid& grid, const Nonlinearity& nl, double dt)
    : grid_(grid), nl_(nl), dt_(dt), linear_(grid.size()) {
  const auto k2 = grid.k_squared();
  for (std::size_t i = 0; i < linear_.size(); ++i) linear_[i] = std::polar(1.0, -k2[i] * dt);
}

void StrangStepper::step(Field& u) const {
  nonlinear_substep(u, nl_, 0.5 * dt_);
  auto values = u.values();
  grid_.forward(values);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] *= linear_[i];
  grid_.inverse(values);
  nonlinear_substep(u, nl_, 0.5 * dt_);
}

Field strang_step(const Field& u, const Background& bg, const Nonlinearity& nl, double dt) {
  require_same_grid(u.grid(), bg.phi.grid(), "strang_step");
  Field out(u);
  StrangStepper(u.grid(), nl, dt).step(out);
  if (!out.all_finite()) throw BlowUpError("strang_step produced non-finite values at step 1", 1);
  return out;
}

Trajectory evolve(const Field& w0, const Background& bg, const Nonlinearity& nl, const SolverConfig& cfg) {
  if (cfg.scheme != Scheme::Strang) throw DomainError("evolve: scheme must be strang");
  check_inputs(w0, bg, nl, cfg);
  Trajectory traj = start_trajectory(w0, cfg);
  Recorder rec(traj, bg, nl, cfg.snapshot_stride);

  const StrangStepper stepper(w0.grid(), nl, cfg.dt);
  Field u = bg.phi + w0;
  rec.record(0, u, w0);
  for (std::size_t n = 1; n <= traj.steps; ++n) {
    stepper.step(u);
    if (!u.all_finite())
      throw BlowUpError("evolve: non-finite values at step " + std::to_string(n), n);
    rec.record(n, u, u - bg.phi);
  }
  rec.finish();
  return traj;
}

std::vector<Field> picard_map(const std::vector<Field>& w, const Field& w0, const Background& bg,
                              const Nonlinearity& nl, double dt) {
  if (w.empty()) throw DomainError("picard_map: empty trajectory");
  std::vector<Field> sources;
  sources.reserve(w.size());
  for (const auto& wj : w) sources.push_back(forcing(wj, bg, nl));
  auto out = duhamel_cumulative(sources, dt);
  const Grid& grid = w0.grid();
  const auto c0 = forward_transform(w0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    std::vector<Complex> c(c0);
    free_evolve_coefficients(grid, c, dt * static_cast<double>(j));
    out[j] += inverse_transform(grid, std::move(c));
  }
  return out;
}

Trajectory picard_solve(const Field& w0, const Background& bg, const Nonlinearity& nl, const SolverConfig& cfg) {
  if (cfg.scheme != Scheme::Picard) throw DomainError("picard_solve: scheme must be picard");
  if (cfg.picard_max_iter == 0) throw DomainError("picard_solve: picard_max_iter must be positive");
  if (!(cfg.picard_tol > 0.0)) throw DomainError("picard_solve: picard_tol must be positive");
  check_inputs(w0, bg, nl, cfg);
  Trajectory traj = start_trajectory(w0, cfg);
  const std::size_t m = traj.steps + 1;

  std::vector<Field> w;
  w.reserve(m);
  const auto c0 = forward_transform(w0);
  w.push_back(w0);
  for (std::size_t j = 1; j < m; ++j) {
    std::vector<Complex> c(c0);
    free_evolve_coefficients(w0.grid(), c, cfg.dt * static_cast<double>(j));
    w.push_back(inverse_transform(w0.grid(), std::move(c)));
  }

  bool converged = false;
  std::size_t rising = 0;
  for (std::size_t k = 1; k <= cfg.picard_max_iter; ++k) {
    auto next = picard_map(w, w0, bg, nl, cfg.dt);
    // The initial slice is w0 by construction; keep it bitwise.
    next[0] = w0;
    double diff = 0.0;
    for (std::size_t j = 1; j < m; ++j) {
      if (!next[j].all_finite())
        throw BlowUpError("picard_solve: non-finite iterate at time index " + std::to_string(j), j);
      diff = std::max(diff, h1_norm(next[j] - w[j]));
    }
    w = std::move(next);
    traj.picard_iterations = k;
    if (!traj.picard_differences.empty()) {
      const double prev = traj.picard_differences.back();
      const double factor = prev > 0.0 ? diff / prev : 0.0;
      traj.picard_history.push_back(factor);
      rising = factor >= 1.0 ? rising + 1 : 0;
    }
    traj.picard_differences.push_back(diff);
    if (diff <= cfg.picard_tol) {
      converged = true;
      break;
    }
    if (rising >= 3)
      throw NonContractionError("picard_solve: no contraction over 3 consecutive iterations; reduce T");
  }
  if (!converged)
    throw NonContractionError("picard_solve: not converged after " + std::to_string(cfg.picard_max_iter) +
                              " iterations; reduce T");

  Recorder rec(traj, bg, nl, cfg.snapshot_stride);
  for (std::size_t j = 0; j < m; ++j) rec.record(j, bg.phi + w[j], w[j]);
  rec.finish();
  return traj;
}

ConvergenceResult convergence_order(const Field& w0, const Background& bg, const Nonlinearity& nl,
                                    double T, const std::vector<double>& dt_list, bool require_hf) {
  if (dt_list.size() < 3) throw DomainError("convergence_order: need at least three time steps");
  for (std::size_t i = 1; i < dt_list.size(); ++i)
    if (!(dt_list[i] < dt_list[i - 1]))
      throw DomainError("convergence_order: dt_list must be strictly decreasing");

  SolverConfig probe;
  probe.require_hf = require_hf;
  check_inputs(w0, bg, nl, probe);
  // Only final states matter here, so skip the per-step diagnostics of evolve.
  std::vector<Field> finals;
  for (double dt : dt_list) {
    const std::size_t steps = step_count(T, dt);
    const StrangStepper stepper(w0.grid(), nl, dt);
    Field u = bg.phi + w0;
    for (std::size_t n = 1; n <= steps; ++n) {
      stepper.step(u);
      if (!u.all_finite())
        throw BlowUpError("convergence_order: non-finite values at step " + std::to_string(n), n);
    }
    finals.push_back(u - bg.phi);
  }

  ConvergenceResult res;
  res.dts = dt_list;
  const Field& ref = finals.back();
  for (std::size_t i = 0; i + 1 < finals.size(); ++i) res.errors.push_back(lp_norm(finals[i] - ref, 2.0));

  bool all_tiny = true;
  for (double e : res.errors) all_tiny = all_tiny && e < 1e-12;
  if (all_tiny) {
    res.exact = true;
    res.order = kInf;
    return res;
  }
  for (std::size_t i = 1; i < res.errors.size(); ++i)
    if (!(res.errors[i] < res.errors[i - 1]))
      throw DiagnosticsError("convergence_order: errors are not monotone in dt (under-resolved?)");

  // Errors against the reference behave like C (dt^p - h^p); solve for p
  // on each consecutive pair by bisection and average.
  const double h = dt_list.back();
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < res.errors.size(); ++i) {
    const double target = res.errors[i] / res.errors[i + 1];
    auto model = [&](double p) {
      return (std::pow(dt_list[i], p) - std::pow(h, p)) / (std::pow(dt_list[i + 1], p) - std::pow(h, p));
    };
    double lo = 1e-3;
    double hi = 12.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (model(mid) < target ? lo : hi) = mid;
    }
    sum += 0.5 * (lo + hi);
  }
  res.order = sum / static_cast<double>(res.errors.size() - 1);
  return res;
}

}  // namespace gpf
