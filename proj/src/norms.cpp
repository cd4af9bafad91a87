#include "gpfield/norms.hpp"

#include <cmath>
#include <vector>

#include "gpfield/errors.hpp"
#include "gpfield/spectral.hpp"

namespace gpf {

namespace {

// Lp from squared magnitudes; even integer exponents avoid pow.
double lp_of_squares(std::span<const double> sq, double p, double cell_volume) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : sq) m = std::max(m, v);
    return std::sqrt(m);
  }
  double acc = 0.0;
  if (p == 2.0) {
    for (double v : sq) acc += v;
    return std::sqrt(acc * cell_volume);
  }
  const double half = p / 2.0;
  if (half == std::floor(half) && half <= 8.0) {
    const int k = static_cast<int>(half);
    for (double v : sq) {
      double t = v;
      for (int j = 1; j < k; ++j) t *= v;
      acc += t;
    }
  } else {
    for (double v : sq) acc += std::pow(v, half);
  }
  return std::pow(acc * cell_volume, 1.0 / p);
}

void require_exponent(double p) {
  if (!(p >= 1.0)) throw DomainError("norm exponent must be >= 1");
}

}  // namespace

double lp_norm(const Field& field, double p) {
  require_exponent(p);
  std::vector<double> sq(field.size());
  for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = std::norm(field[i]);
  return lp_of_squares(sq, p, field.grid().cell_volume());
}

double h1_norm(const Field& field) {
  const Grid& grid = field.grid();
  const auto c = forward_transform(field);
  const auto n = grid.points_per_axis();
  const auto nyq = grid.nyquist_index();
  const auto xi = grid.wavenumbers();
  const int dim = grid.dim();
  double acc = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    // Gradient weights exclude the Nyquist row of each axis, as in partial().
    double weight = 1.0;
    std::size_t rest = i;
    for (int d = 0; d < dim; ++d) {
      const std::size_t idx = rest % n;
      rest /= n;
      if (idx != nyq) weight += xi[idx] * xi[idx];
    }
    acc += weight * std::norm(c[i]);
  }
  return std::sqrt(acc * grid.cell_volume() / static_cast<double>(grid.size()));
}

double w1q_norm(const Field& field, double q) {
  require_exponent(q);
  const auto grad = gradient(field);
  std::vector<double> mag(field.size(), 0.0);
  for (const auto& g : grad)
    for (std::size_t i = 0; i < mag.size(); ++i) mag[i] += std::norm(g[i]);
  return lp_norm(field, q) + lp_of_squares(mag, q, field.grid().cell_volume());
}

std::string to_string(const SpatialNorm& norm) {
  auto e = [](double x) { return std::isinf(x) ? std::string("inf") : std::to_string(x); };
  switch (norm.kind) {
    case SpatialNorm::Kind::Lp: return "L" + e(norm.exponent);
    case SpatialNorm::Kind::H1: return "H1";
    case SpatialNorm::Kind::W1q: return "W1," + e(norm.exponent);
  }
  return "?";
}

double spatial_norm(const Field& field, const SpatialNorm& norm) {
  switch (norm.kind) {
    case SpatialNorm::Kind::Lp: return lp_norm(field, norm.exponent);
    case SpatialNorm::Kind::H1: return h1_norm(field);
    case SpatialNorm::Kind::W1q: return w1q_norm(field, norm.exponent);
  }
  throw DomainError("unknown spatial norm");
}

double mixed_norm_of_values(std::span<const double> spatial_norms, double p_t, double dt) {
  if (spatial_norms.empty()) throw DomainError("mixed norm of an empty series");
  if (!(dt > 0.0)) throw DomainError("mixed norm: dt must be positive");
  require_exponent(p_t);
  if (std::isinf(p_t)) {
    double m = 0.0;
    for (double v : spatial_norms) m = std::max(m, v);
    return m;
  }
  double acc = 0.0;
  for (double v : spatial_norms) acc += dt * std::pow(v, p_t);
  return std::pow(acc, 1.0 / p_t);
}

double mixed_norm(std::span<const Field> series, double p_t, const SpatialNorm& spatial, double dt) {
  if (series.empty()) throw DomainError("mixed norm of an empty series");
  std::vector<double> values;
  values.reserve(series.size());
  for (const auto& f : series) values.push_back(spatial_norm(f, spatial));
  return mixed_norm_of_values(values, p_t, dt);
}

bool is_admissible(double p, double q, int n) {
  if (n < 1) return false;
  if (!(p >= 2.0) || !(q >= 2.0)) return false;
  if (p == 2.0 && std::isinf(q)) return false;
  const double lhs = 2.0 / p + static_cast<double>(n) / q;
  return std::abs(lhs - static_cast<double>(n) / 2.0) <= 1e-12;
}

AdmissiblePair admissible_pair_for(int n) {
  switch (n) {
    case 1: return {kInf, 2.0, 1};
    case 2:
    case 3: return {6.0 / n, 6.0, n};
    case 4: return {2.0, 4.0, 4};
    default: throw DomainError("admissible_pair_for: dimension must be in 1..4");
  }
}

}  // namespace gpf
