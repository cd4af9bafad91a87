#include "gpfield/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gpfield/errors.hpp"
#include "gpfield/spectral.hpp"

namespace gpf {

void free_evolve_coefficients(const Grid& grid, std::span<Complex> coefficients, double t) {
  const auto k2 = grid.k_squared();
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const double phase = -k2[i] * t;
    coefficients[i] *= Complex(std::cos(phase), std::sin(phase));
  }
}

Field free_evolve(const Field& field, double t) {
  if (t == 0.0) return field;
  auto c = forward_transform(field);
  free_evolve_coefficients(field.grid(), c, t);
  return inverse_transform(field.grid(), std::move(c));
}

Field duhamel_integral(std::span<const double> times, std::span<const Field> sources) {
  if (sources.size() < 2) throw DomainError("duhamel_integral: need at least two source samples");
  if (times.size() != sources.size()) throw DomainError("duhamel_integral: times/sources size mismatch");
  if (times.front() != 0.0) throw DomainError("duhamel_integral: samples must start at s = 0");
  const double dt = times[1] - times[0];
  if (!(dt > 0.0)) throw DomainError("duhamel_integral: sample times must increase");
  for (std::size_t k = 1; k < times.size(); ++k) {
    const double step = times[k] - times[k - 1];
    if (std::abs(step - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
      throw DomainError("duhamel_integral: non-uniform sample spacing at index " + std::to_string(k));
  }
  const Grid& grid = sources.front().grid();
  const double t = times.back();
  std::vector<Complex> acc(grid.size(), Complex{});
  for (std::size_t k = 0; k < sources.size(); ++k) {
    require_same_grid(grid, sources[k].grid(), "duhamel_integral");
    const double w = (k == 0 || k + 1 == sources.size()) ? 0.5 * dt : dt;
    auto c = forward_transform(sources[k]);
    free_evolve_coefficients(grid, c, t - times[k]);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * c[i];
  }
  for (auto& v : acc) v *= Complex(0.0, -1.0);
  return inverse_transform(grid, std::move(acc));
}

std::vector<Field> duhamel_cumulative(std::span<const Field> sources, double dt) {
  if (sources.empty()) throw DomainError("duhamel_cumulative: empty source trajectory");
  if (!(dt > 0.0)) throw DomainError("duhamel_cumulative: dt must be positive");
  const Grid& grid = sources.front().grid();
  const auto k2 = grid.k_squared();
  std::vector<Complex> step(grid.size());
  for (std::size_t i = 0; i < step.size(); ++i) step[i] = std::polar(1.0, -k2[i] * dt);

  std::vector<Field> out;
  out.reserve(sources.size());
  out.emplace_back(grid);
  std::vector<Complex> integral(grid.size(), Complex{});
  auto previous = forward_transform(sources[0]);
  for (std::size_t j = 1; j < sources.size(); ++j) {
    require_same_grid(grid, sources[j].grid(), "duhamel_cumulative");
    auto current = forward_transform(sources[j]);
    for (std::size_t i = 0; i < integral.size(); ++i)
      integral[i] = step[i] * (integral[i] + 0.5 * dt * previous[i]) + 0.5 * dt * current[i];
    std::vector<Complex> c(integral);
    for (auto& v : c) v *= Complex(0.0, -1.0);
    out.push_back(inverse_transform(grid, std::move(c)));
    previous = std::move(current);
  }
  return out;
}

double strichartz_ratio_of(const Field& f, const AdmissiblePair& pair, double T, std::size_t steps) {
  if (!is_admissible(pair)) throw DomainError("strichartz: pair is not admissible");
  if (pair.n != f.grid().dim())
    throw DomainError("strichartz: pair dimension does not match the grid");
  if (!(T > 0.0) || steps == 0) throw DomainError("strichartz: need T > 0 and steps >= 1");
  const double denom = lp_norm(f, 2.0);
  if (!(denom > 0.0)) throw DomainError("strichartz: zero field");
  const double dt = T / static_cast<double>(steps);
  const Grid& grid = f.grid();
  auto c = forward_transform(f);
  const auto k2 = grid.k_squared();
  std::vector<Complex> advance(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) advance[i] = std::polar(1.0, -k2[i] * dt);
  std::vector<double> norms;
  norms.reserve(steps);
  Field slice(grid);
  for (std::size_t k = 0; k < steps; ++k) {
    if (k > 0)
      for (std::size_t i = 0; i < c.size(); ++i) c[i] *= advance[i];
    auto v = slice.values();
    std::copy(c.begin(), c.end(), v.begin());
    grid.inverse(v);
    norms.push_back(lp_norm(slice, pair.q));
  }
  return mixed_norm_of_values(norms, pair.p, dt) / denom;
}

StrichartzReport strichartz_ratio(const Grid& grid, std::uint64_t seed, const AdmissiblePair& pair,
                                  double T, std::size_t steps, std::size_t num_fields,
                                  Spectrum spectrum) {
  if (!is_admissible(pair)) throw DomainError("strichartz: pair is not admissible");
  if (num_fields == 0) throw DomainError("strichartz: need at least one field");
  StrichartzReport rep;
  rep.pair = pair;
  rep.T = T;
  rep.steps = steps;
  rep.num_fields = num_fields;
  rep.spectrum = spectrum;
  rep.seed = seed;
  rep.grid_desc = describe(grid);
  rep.ratios.reserve(num_fields);
  for (std::size_t k = 0; k < num_fields; ++k) {
    const Field f = seeded_random_field(grid, seed + k, spectrum);
    rep.ratios.push_back(strichartz_ratio_of(f, pair, T, steps));
  }
  rep.ratio = rep.ratios.front();
  rep.max_ratio = *std::max_element(rep.ratios.begin(), rep.ratios.end());
  return rep;
}

std::string describe(const Grid& grid) {
  std::ostringstream os;
  os << "dim=" << grid.dim() << " N=" << grid.points_per_axis() << " L=" << grid.half_length();
  return os.str();
}

}  // namespace gpf
