#pragma once

#include <limits>
#include <span>
#include <string>

#include "gpfield/grid.hpp"

namespace gpf {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// (sum |v|^p * cell_volume)^(1/p); p = infinity gives max |v|.
double lp_norm(const Field& field, double p);
/// (||f||_2^2 + ||grad f||_2^2)^(1/2), evaluated on the Fourier side.
double h1_norm(const Field& field);
/// ||f||_q + || |grad f| ||_q.
double w1q_norm(const Field& field, double q);

struct SpatialNorm {
  enum class Kind { Lp, H1, W1q };
  Kind kind = Kind::Lp;
  double exponent = 2.0;

  static SpatialNorm lp(double p) { return {Kind::Lp, p}; }
  static SpatialNorm h1() { return {Kind::H1, 2.0}; }
  static SpatialNorm w1q(double q) { return {Kind::W1q, q}; }
};

std::string to_string(const SpatialNorm& norm);

double spatial_norm(const Field& field, const SpatialNorm& norm);

/// Rectangle-rule L^{p_t}_T of per-step spatial norms: (sum dt * v_k^p_t)^(1/p_t),
/// or max_k v_k for p_t = infinity.
double mixed_norm_of_values(std::span<const double> spatial_norms, double p_t, double dt);
double mixed_norm(std::span<const Field> series, double p_t, const SpatialNorm& spatial, double dt);

/// Strichartz exponents: 2/p + n/q = n/2, p >= 2, (p, q) != (2, inf).
struct AdmissiblePair {
  double p = kInf;
  double q = 2.0;
  int n = 1;
};

bool is_admissible(double p, double q, int n);
inline bool is_admissible(const AdmissiblePair& pair) { return is_admissible(pair.p, pair.q, pair.n); }

/// (6/n, 6) for n = 2, 3 and (2, 4) for n = 4. For n = 1 the energy pair
/// (inf, 2) is returned; the X_T norm then reduces to L^inf_T H^1.
AdmissiblePair admissible_pair_for(int n);

}  // namespace gpf
