#include "gpfield/spectral.hpp"

#include <cmath>
#include <sstream>

#include "gpfield/errors.hpp"

namespace gpf {

std::vector<Complex> forward_transform(const Field& field) {
  std::vector<Complex> c(field.values().begin(), field.values().end());
  field.grid().forward(c);
  return c;
}

Field inverse_transform(const Grid& grid, std::vector<Complex> coefficients) {
  grid.inverse(coefficients);
  return Field(grid, std::move(coefficients));
}

void multiply_coefficients(const Grid& grid, std::span<Complex> coefficients,
                           const std::function<Complex(std::size_t)>& symbol) {
  for (std::size_t i = 0; i < grid.size(); ++i) coefficients[i] *= symbol(i);
}

Field apply_multiplier(const Field& field, const MultiplierSpec& m) {
  const Grid& grid = field.grid();
  const auto dim = static_cast<std::size_t>(grid.dim());
  std::vector<Complex> symbol(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto k = grid.wavevector(i);
    const Complex s = m.symbol(std::span<const double>(k.data(), dim));
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
      std::ostringstream os;
      os << "multiplier '" << m.name << "' is not finite at xi = (";
      for (std::size_t d = 0; d < dim; ++d) os << (d ? ", " : "") << k[d];
      os << ")";
      throw NumericError(os.str());
    }
    symbol[i] = s;
  }
  auto c = forward_transform(field);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= symbol[i];
  return inverse_transform(grid, std::move(c));
}

Field partial_from_coefficients(const Grid& grid, std::span<const Complex> coefficients, int axis) {
  if (axis < 0 || axis >= grid.dim()) throw DomainError("partial: axis out of range");
  std::vector<Complex> c(coefficients.begin(), coefficients.end());
  const auto ax = static_cast<std::size_t>(axis);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto idx = grid.unravel(i);
    if (idx[ax] == grid.nyquist_index()) {
      c[i] = 0.0;
    } else {
      c[i] *= Complex(0.0, grid.wavenumbers()[idx[ax]]);
    }
  }
  return inverse_transform(grid, std::move(c));
}

Field partial(const Field& field, int axis) {
  const auto c = forward_transform(field);
  return partial_from_coefficients(field.grid(), c, axis);
}

std::vector<Field> gradient(const Field& field) {
  const auto c = forward_transform(field);
  std::vector<Field> out;
  out.reserve(static_cast<std::size_t>(field.grid().dim()));
  for (int d = 0; d < field.grid().dim(); ++d)
    out.push_back(partial_from_coefficients(field.grid(), c, d));
  return out;
}

Field laplacian(const Field& field) {
  auto c = forward_transform(field);
  const auto k2 = field.grid().k_squared();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= -k2[i];
  return inverse_transform(field.grid(), std::move(c));
}

namespace multipliers {

MultiplierSpec identity() {
  return {[](std::span<const double>) { return Complex(1.0, 0.0); }, "identity"};
}

MultiplierSpec derivative(int axis) {
  return {[axis](std::span<const double> xi) {
            return Complex(0.0, xi[static_cast<std::size_t>(axis)]);
          },
          "d/dx" + std::to_string(axis)};
}

MultiplierSpec laplacian() {
  return {[](std::span<const double> xi) {
            double s = 0.0;
            for (double k : xi) s += k * k;
            return Complex(-s, 0.0);
          },
          "laplacian"};
}

}  // namespace multipliers

}  // namespace gpf
