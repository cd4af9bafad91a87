#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace gpf {

using Complex = std::complex<double>;

/// Periodic lattice on [-L, L)^n, n in {1, 2, 3}, with N points per axis.
///
/// Lattice storage is row-major (last axis fastest). Wavenumber tables are in
/// transform order: index i < N/2 holds m = i, index i >= N/2 holds m = i - N,
/// and xi = pi m / L. The Nyquist mode m = -N/2 sits at index N/2.
///
/// Grids are cheap to copy; copies share wavenumber tables and FFT plans.
class Grid {
 public:
  Grid(int dim, std::size_t points_per_axis, double half_length);

  int dim() const noexcept;
  std::size_t points_per_axis() const noexcept;
  double half_length() const noexcept;
  /// N^n.
  std::size_t size() const noexcept;
  double spacing() const noexcept;
  double cell_volume() const noexcept;
  double volume() const noexcept;

  /// Per-axis wavenumber table, transform order.
  std::span<const double> wavenumbers() const noexcept;
  /// |xi|^2 for every lattice index (transform order).
  std::span<const double> k_squared() const noexcept;
  std::size_t nyquist_index() const noexcept { return points_per_axis() / 2; }

  double coordinate(std::size_t axis_index) const noexcept;
  /// Per-axis indices of a flat lattice index (unused axes are 0).
  std::array<std::size_t, 3> unravel(std::size_t flat) const noexcept;
  /// Physical position of a flat lattice index (unused axes are 0).
  std::array<double, 3> position(std::size_t flat) const noexcept;
  /// Wavevector of a flat spectral index (unused axes are 0).
  std::array<double, 3> wavevector(std::size_t flat) const noexcept;
  /// True if any axis of the flat spectral index is the Nyquist mode.
  bool touches_nyquist(std::size_t flat) const noexcept;

  /// Unnormalized forward DFT, in place.
  void forward(std::span<Complex> data) const;
  /// Inverse DFT including the 1/N^n factor, in place.
  void inverse(std::span<Complex> data) const;

  bool operator==(const Grid& other) const noexcept;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Complex lattice function on a Grid.
class Field {
 public:
  explicit Field(Grid grid);
  Field(Grid grid, std::vector<Complex> values);

  static Field constant(const Grid& grid, Complex value);
  /// Samples fn at every lattice position (x, y, z; unused coordinates are 0).
  static Field from_function(const Grid& grid,
                             const std::function<Complex(const std::array<double, 3>&)>& fn);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<Complex> values() noexcept { return values_; }
  std::span<const Complex> values() const noexcept { return values_; }
  Complex& operator[](std::size_t i) noexcept { return values_[i]; }
  const Complex& operator[](std::size_t i) const noexcept { return values_[i]; }

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(Complex s) noexcept;

  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(Complex s, Field a) { return a *= s; }
  friend Field operator*(Field a, Complex s) { return a *= s; }

  bool all_finite() const noexcept;

 private:
  Grid grid_;
  std::vector<Complex> values_;
};

/// Throws DomainError if the two grids differ.
void require_same_grid(const Grid& a, const Grid& b, const char* what);

}  // namespace gpf
