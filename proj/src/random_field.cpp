#include "gpfield/random_field.hpp"

#include <cmath>
#include <numbers>

#include "gpfield/errors.hpp"
#include "gpfield/spectral.hpp"

namespace gpf {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::string to_string(Spectrum s) { return s == Spectrum::Flat ? "flat" : "sobolev-decay"; }

Spectrum spectrum_from_string(const std::string& s) {
  if (s == "flat") return Spectrum::Flat;
  if (s == "sobolev-decay") return Spectrum::SobolevDecay;
  throw DomainError("unknown spectrum '" + s + "' (expected flat or sobolev-decay)");
}

double counter_uniform(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
  const std::uint64_t bits = splitmix(splitmix(seed) ^ (index * 4 + stream));
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

Field seeded_random_field(const Grid& grid, std::uint64_t seed, Spectrum spectrum) {
  std::vector<Complex> c(grid.size());
  const auto k2 = grid.k_squared();
  const double scale = std::sqrt(static_cast<double>(grid.size()) / 2.0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double u1 = counter_uniform(seed, i, 0);
    const double u2 = counter_uniform(seed, i, 1);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    double damp = scale;
    if (spectrum == Spectrum::SobolevDecay) damp /= 1.0 + k2[i];
    c[i] = Complex(radius * std::cos(angle), radius * std::sin(angle)) * damp;
  }
  return inverse_transform(grid, std::move(c));
}

}  // namespace gpf
