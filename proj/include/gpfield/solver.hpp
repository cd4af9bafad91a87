#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gpfield/background.hpp"
#include "gpfield/nonlinearity.hpp"
#include "gpfield/trajectory.hpp"

namespace gpf {

enum class Scheme { Strang, Picard };

std::string to_string(Scheme s);

struct SolverConfig {
  double dt = 1e-3;
  double T = 1.0;
  Scheme scheme = Scheme::Strang;
  std::size_t picard_max_iter = 50;
  double picard_tol = 1e-10;
  std::size_t snapshot_stride = 100;
  /// Refuse nonlinearities that fail the H_f check. Linear test problems
  /// (f = 0) switch this off.
  bool require_hf = true;
};

/// Number of steps T / dt; throws DomainError unless it is a positive integer.
std::size_t step_count(double T, double dt);

/// u <- u exp(i tau f(|u|^2)): the exact flow of i u_t + f(|u|^2) u = 0 over tau.
void nonlinear_substep(Field& u, const Nonlinearity& nl, double tau);

/// One Strang step for i u_t + Delta u + f(|u|^2) u = 0: half nonlinear phase
/// rotation, exact free propagation over dt, half nonlinear rotation.
/// Negative dt steps backwards.
class StrangStepper {
 public:
  StrangStepper(const Grid& grid, const Nonlinearity& nl, double dt);
  void step(Field& u) const;
  double dt() const noexcept { return dt_; }

 private:
  Grid grid_;
  Nonlinearity nl_;
  double dt_;
  std::vector<Complex> linear_;
};

/// Single Strang step on the full state u = phi + w; throws BlowUpError on
/// non-finite output.
Field strang_step(const Field& u, const Background& bg, const Nonlinearity& nl, double dt);

/// Integrates i w_t + Delta w = F(w) by Strang splitting on u = phi + w.
Trajectory evolve(const Field& w0, const Background& bg, const Nonlinearity& nl, const SolverConfig& cfg);

/// One application of the Duhamel map on the uniform time grid:
/// Phi(w)(t_j) = e^{i t_j Delta} w0 - i \int_0^{t_j} e^{i(t_j - s) Delta} F(w(s)) ds.
std::vector<Field> picard_map(const std::vector<Field>& w, const Field& w0, const Background& bg,
                              const Nonlinearity& nl, double dt);

/// Fixed-point iteration of the Duhamel map over the whole time grid,
/// starting from the free evolution of w0.
Trajectory picard_solve(const Field& w0, const Background& bg, const Nonlinearity& nl, const SolverConfig& cfg);

struct ConvergenceResult {
  std::vector<double> dts;
  /// L^2 distance at T from the finest-dt run, one per coarser dt.
  std::vector<double> errors;
  double order = 0.0;
  /// All errors below 1e-12: the scheme is exact up to rounding.
  bool exact = false;
};

/// Richardson order estimate of the Strang scheme from runs at each dt.
ConvergenceResult convergence_order(const Field& w0, const Background& bg, const Nonlinearity& nl,
                                    double T, const std::vector<double>& dt_list,
                                    bool require_hf = true);

}  // namespace gpf
