#pragma once

#include <cstdint>
#include <string>

#include "gpfield/grid.hpp"

namespace gpf {

enum class Spectrum { Flat, SobolevDecay };

std::string to_string(Spectrum s);
Spectrum spectrum_from_string(const std::string& s);

/// Counter-based uniform deviate in (0, 1] keyed by (seed, index, stream).
double counter_uniform(std::uint64_t seed, std::uint64_t index, std::uint64_t stream);

/// Deterministic random field. Fourier coefficients are i.i.d. standard
/// complex Gaussians keyed by (seed, spectral index) (flat), optionally damped
/// by (1 + |xi|^2)^-1 (sobolev-decay). Coefficients are scaled by sqrt(N^n) so
/// a flat field has unit-variance lattice values.
Field seeded_random_field(const Grid& grid, std::uint64_t seed, Spectrum spectrum);

}  // namespace gpf
