#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gpfield/grid.hpp"
#include "gpfield/norms.hpp"
#include "gpfield/random_field.hpp"

namespace gpf {

/// e^{it Delta}: multiplier e^{-i |xi|^2 t}.
Field free_evolve(const Field& field, double t);
/// In-place variant on Fourier coefficients.
void free_evolve_coefficients(const Grid& grid, std::span<Complex> coefficients, double t);

/// -i \int_0^t e^{i(t-s) Delta} F(s) ds by the trapezoid rule over uniformly
/// spaced samples `times` (times.front() = 0, t = times.back()).
Field duhamel_integral(std::span<const double> times, std::span<const Field> sources);

/// The same integral for every upper limit t_j = j dt at once:
/// out[j] = -i \int_0^{t_j} e^{i(t_j-s) Delta} F(s) ds (trapezoid, out[0] = 0).
/// Uses the recursion I_j = U (I_{j-1} + dt/2 F_{j-1}) + dt/2 F_j with
/// U = e^{i dt Delta}, all on the Fourier side.
std::vector<Field> duhamel_cumulative(std::span<const Field> sources, double dt);

struct StrichartzReport {
  AdmissiblePair pair;
  double T = 0.0;
  std::size_t steps = 0;
  /// Ratio for the first sampled field.
  double ratio = 0.0;
  std::size_t num_fields = 0;
  double max_ratio = 0.0;
  std::vector<double> ratios;
  Spectrum spectrum = Spectrum::Flat;
  std::uint64_t seed = 0;
  std::string grid_desc;
};

/// || e^{it Delta} f ||_{L^p_T L^q} / || f ||_2 with a left rectangle rule on
/// t_k = k T / steps, k = 0..steps-1.
double strichartz_ratio_of(const Field& f, const AdmissiblePair& pair, double T, std::size_t steps);

/// Maximum ratio over `num_fields` seeded random fields (seeds seed, seed+1, ...).
StrichartzReport strichartz_ratio(const Grid& grid, std::uint64_t seed, const AdmissiblePair& pair,
                                  double T, std::size_t steps, std::size_t num_fields,
                                  Spectrum spectrum);

std::string describe(const Grid& grid);

}  // namespace gpf
