#pragma once

#include <cstddef>
#include <vector>

#include "gpfield/grid.hpp"
#include "gpfield/norms.hpp"

namespace gpf {

/// Solution w(t) = u(t) - phi on a uniform time grid t_k = k dt, k = 0..steps.
struct Trajectory {
  double dt = 0.0;
  std::size_t steps = 0;

  /// Snapshot times (start at 0, end at T) and their step indices.
  std::vector<double> times;
  std::vector<std::size_t> snapshot_steps;
  std::vector<Field> w_fields;

  /// Per-step diagnostics, steps + 1 entries each.
  std::vector<double> energy_series;
  std::vector<double> mass_series;
  std::vector<double> h1_series;   // ||w||_{H^1}
  std::vector<double> w1q_series;  // ||w||_{W^{1,q}} for the run's pair

  AdmissiblePair pair;
  /// ||w||_{L^inf_T H^1} + ||w||_{L^p_T W^{1,q}} from the per-step series.
  double xt_norm = 0.0;

  /// Picard only: max_j ||w^(k+1)(t_j) - w^(k)(t_j)||_{H^1} per iteration and
  /// ratios of consecutive entries.
  std::vector<double> picard_differences;
  std::vector<double> picard_history;
  std::size_t picard_iterations = 0;

  double final_time() const { return dt * static_cast<double>(steps); }
};

}  // namespace gpf
