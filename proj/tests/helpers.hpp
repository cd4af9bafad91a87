#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "gpfield/grid.hpp"

namespace testing {

// Smooth random field: a few low Fourier modes with random amplitudes, built
// in physical space so it does not depend on the transform code under test.
inline gpf::Field smooth_random_field(const gpf::Grid& grid, unsigned seed, int modes = 4) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  const double L = grid.half_length();
  const double pi = 3.14159265358979323846;
  gpf::Field f(grid);
  const int dim = grid.dim();
  for (int m = 0; m < modes; ++m) {
    std::array<int, 3> k{0, 0, 0};
    std::uniform_int_distribution<int> kd(-3, 3);
    for (int d = 0; d < dim; ++d) k[static_cast<std::size_t>(d)] = kd(gen);
    const std::complex<double> amp(nd(gen), nd(gen));
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto x = grid.position(i);
      double phase = 0.0;
      for (int d = 0; d < dim; ++d) phase += pi * k[static_cast<std::size_t>(d)] * x[static_cast<std::size_t>(d)] / L;
      f[i] += amp * std::polar(1.0, phase);
    }
  }
  return f;
}

// White-noise lattice field (all modes populated).
inline gpf::Field noise_field(const gpf::Grid& grid, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  gpf::Field f(grid);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = {nd(gen), nd(gen)};
  return f;
}

inline double max_abs_diff(const gpf::Field& a, const gpf::Field& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(const gpf::Field& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

}  // namespace testing
