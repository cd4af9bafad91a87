#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gpfield/grid.hpp"

namespace gpf {

/// Fourier coefficients of a field (unnormalized forward DFT).
std::vector<Complex> forward_transform(const Field& field);
/// Field from Fourier coefficients (inverse carries 1/N^n).
Field inverse_transform(const Grid& grid, std::vector<Complex> coefficients);

/// Fourier multiplier m(D): acts as multiplication by m(xi) on coefficients.
/// The symbol receives the wavevector (length = grid dimension).
struct MultiplierSpec {
  std::function<Complex(std::span<const double>)> symbol;
  std::string name;
};

/// Inverse transform of m(xi) * (forward transform of field). Throws
/// NumericError naming the wavevector if the symbol is not finite there.
Field apply_multiplier(const Field& field, const MultiplierSpec& m);

/// Multiplies coefficients in place by `symbol(flat spectral index)`.
/// Lower-level form used by the hot paths.
void multiply_coefficients(const Grid& grid, std::span<Complex> coefficients,
                           const std::function<Complex(std::size_t)>& symbol);

/// d/dx_axis via i xi_axis; the Nyquist mode of that axis is zeroed.
Field partial(const Field& field, int axis);
/// Same, from precomputed coefficients (saves a forward transform).
Field partial_from_coefficients(const Grid& grid, std::span<const Complex> coefficients, int axis);
std::vector<Field> gradient(const Field& field);
/// Multiplier -|xi|^2 (all modes kept; the symbol is even).
Field laplacian(const Field& field);

namespace multipliers {
MultiplierSpec identity();
MultiplierSpec derivative(int axis);
MultiplierSpec laplacian();
}  // namespace multipliers

}  // namespace gpf
