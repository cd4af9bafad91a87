#pragma once

#include <utility>
#include <vector>

#include "gpfield/background.hpp"
#include "gpfield/grid.hpp"
#include "gpfield/nonlinearity.hpp"

namespace gpf {

/// F(w) = -Delta phi - f(|phi + w|^2)(phi + w).
Field forcing(const Field& w, const Background& bg, const Nonlinearity& nl);

/// -f(|phi + w|^2)(phi + w) split into a part affine in w and a remainder.
struct ForcingSplit {
  /// -f(|phi|^2)(phi + w) - 2 Re[conj(phi) w] f'(|phi|^2) phi
  Field f1;
  /// whole - f1 (quadratic in w near w = 0)
  Field f2;
  /// -f(|phi + w|^2)(phi + w)
  Field whole;
};

ForcingSplit split_forcing(const Field& w, const Background& bg, const Nonlinearity& nl);

/// The remainder written out term by term,
///   -{f(|phi+w|^2) - f(|phi|^2)}(phi + w) + 2 Re[conj(phi) w] f'(|phi|^2) phi,
/// evaluated independently of split_forcing (validation path).
Field remainder_explicit(const Field& w, const Background& bg, const Nonlinearity& nl);

struct GradientSplit {
  std::vector<Field> g1;  // grad f1
  std::vector<Field> g2;  // grad f2
};

GradientSplit split_forcing_gradient(const Field& w, const Background& bg, const Nonlinearity& nl);

/// Smooth radial cutoff: 1 for s <= 1, 0 for s >= 2, and
/// 1 - (35 t^4 - 84 t^5 + 70 t^6 - 20 t^7) with t = s - 1 in between.
double cutoff_chi(double s);

struct FrequencySplit {
  /// chi(D / c) eta
  Field low;
  /// sum_j (1 - chi(D / c)) P_j(D) d_j eta, P_j(xi) = -i xi_j / |xi|^2
  Field high;
  double cutoff_scale = 1.0;
};

FrequencySplit frequency_split(const Field& eta, double cutoff_scale);

/// || chi(D / c) eta ||_{H^1} / || eta ||_2.
double q_smoothing_ratio(const Field& eta, double cutoff_scale = 1.0);

/// Lipschitz constant of w -> f1(w) from L^2 (hence H^1) to L^2:
/// sup |f(|phi|^2)| + 2 sup |phi|^2 |f'(|phi|^2)| over the lattice.
double f1_lipschitz_bound(const Background& bg, const Nonlinearity& nl);

}  // namespace gpf
