#include "gpfield/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "gpfield/errors.hpp"

namespace gpf {

namespace {
// The FFTW planner is not thread-safe; execution with new arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

struct Grid::Impl {
  int dim = 1;
  std::size_t n = 0;
  double half_length = 0.0;
  std::size_t size = 0;
  std::vector<double> xi;
  std::vector<double> k2;
  fftw_plan forward_plan = nullptr;
  fftw_plan inverse_plan = nullptr;

  Impl() = default;
  Impl(const Impl&) = delete;
  Impl& operator=(const Impl&) = delete;
  ~Impl() {
    std::lock_guard lock(planner_mutex());
    if (forward_plan) fftw_destroy_plan(forward_plan);
    if (inverse_plan) fftw_destroy_plan(inverse_plan);
  }
};

Grid::Grid(int dim, std::size_t points_per_axis, double half_length) {
  if (dim < 1 || dim > 3) throw DomainError("grid dimension must be 1, 2 or 3");
  if (points_per_axis < 2 || points_per_axis % 2 != 0)
    throw DomainError("points per axis must be a positive even count");
  if (!(half_length > 0.0) || !std::isfinite(half_length))
    throw DomainError("half length must be positive");

  auto impl = std::make_shared<Impl>();
  impl->dim = dim;
  impl->n = points_per_axis;
  impl->half_length = half_length;
  impl->size = 1;
  for (int d = 0; d < dim; ++d) impl->size *= points_per_axis;

  const auto n = static_cast<long>(points_per_axis);
  impl->xi.resize(points_per_axis);
  for (long i = 0; i < n; ++i) {
    const long m = i < n / 2 ? i : i - n;
    impl->xi[static_cast<std::size_t>(i)] = std::numbers::pi * static_cast<double>(m) / half_length;
  }

  impl->k2.assign(impl->size, 0.0);
  for (std::size_t flat = 0; flat < impl->size; ++flat) {
    std::size_t rest = flat;
    double acc = 0.0;
    for (int d = 0; d < dim; ++d) {
      const double k = impl->xi[rest % points_per_axis];
      acc += k * k;
      rest /= points_per_axis;
    }
    impl->k2[flat] = acc;
  }

  std::array<int, 3> dims{};
  for (int d = 0; d < dim; ++d) dims[static_cast<std::size_t>(d)] = static_cast<int>(points_per_axis);
  {
    std::lock_guard lock(planner_mutex());
    auto* scratch = fftw_alloc_complex(impl->size);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    impl->forward_plan = fftw_plan_dft(dim, dims.data(), scratch, scratch, FFTW_FORWARD, flags);
    impl->inverse_plan = fftw_plan_dft(dim, dims.data(), scratch, scratch, FFTW_BACKWARD, flags);
    fftw_free(scratch);
  }
  if (!impl->forward_plan || !impl->inverse_plan) throw NumericError("FFTW planning failed");
  impl_ = std::move(impl);
}

int Grid::dim() const noexcept { return impl_->dim; }
std::size_t Grid::points_per_axis() const noexcept { return impl_->n; }
double Grid::half_length() const noexcept { return impl_->half_length; }
std::size_t Grid::size() const noexcept { return impl_->size; }
double Grid::spacing() const noexcept { return 2.0 * impl_->half_length / static_cast<double>(impl_->n); }
double Grid::cell_volume() const noexcept { return std::pow(spacing(), impl_->dim); }
double Grid::volume() const noexcept { return std::pow(2.0 * impl_->half_length, impl_->dim); }
std::span<const double> Grid::wavenumbers() const noexcept { return impl_->xi; }
std::span<const double> Grid::k_squared() const noexcept { return impl_->k2; }

double Grid::coordinate(std::size_t axis_index) const noexcept {
  return -impl_->half_length + spacing() * static_cast<double>(axis_index);
}

std::array<std::size_t, 3> Grid::unravel(std::size_t flat) const noexcept {
  std::array<std::size_t, 3> idx{};
  for (int d = impl_->dim - 1; d >= 0; --d) {
    idx[static_cast<std::size_t>(d)] = flat % impl_->n;
    flat /= impl_->n;
  }
  return idx;
}

std::array<double, 3> Grid::position(std::size_t flat) const noexcept {
  const auto idx = unravel(flat);
  std::array<double, 3> x{};
  for (int d = 0; d < impl_->dim; ++d)
    x[static_cast<std::size_t>(d)] = coordinate(idx[static_cast<std::size_t>(d)]);
  return x;
}

std::array<double, 3> Grid::wavevector(std::size_t flat) const noexcept {
  const auto idx = unravel(flat);
  std::array<double, 3> k{};
  for (int d = 0; d < impl_->dim; ++d)
    k[static_cast<std::size_t>(d)] = impl_->xi[idx[static_cast<std::size_t>(d)]];
  return k;
}

bool Grid::touches_nyquist(std::size_t flat) const noexcept {
  const auto idx = unravel(flat);
  for (int d = 0; d < impl_->dim; ++d)
    if (idx[static_cast<std::size_t>(d)] == nyquist_index()) return true;
  return false;
}

void Grid::forward(std::span<Complex> data) const {
  if (data.size() != impl_->size) throw DomainError("forward transform: size mismatch");
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(impl_->forward_plan, p, p);
}

void Grid::inverse(std::span<Complex> data) const {
  if (data.size() != impl_->size) throw DomainError("inverse transform: size mismatch");
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(impl_->inverse_plan, p, p);
  const double scale = 1.0 / static_cast<double>(impl_->size);
  for (auto& v : data) v *= scale;
}

bool Grid::operator==(const Grid& other) const noexcept {
  if (impl_ == other.impl_) return true;
  return impl_->dim == other.impl_->dim && impl_->n == other.impl_->n &&
         impl_->half_length == other.impl_->half_length;
}

void require_same_grid(const Grid& a, const Grid& b, const char* what) {
  if (!(a == b)) throw DomainError(std::string(what) + ": fields live on different grids");
}

Field::Field(Grid grid) : grid_(std::move(grid)), values_(grid_.size(), Complex{0.0, 0.0}) {}

Field::Field(Grid grid, std::vector<Complex> values) : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw DomainError("field size does not match grid");
}

Field Field::constant(const Grid& grid, Complex value) {
  Field out(grid);
  for (auto& v : out.values_) v = value;
  return out;
}

Field Field::from_function(const Grid& grid,
                           const std::function<Complex(const std::array<double, 3>&)>& fn) {
  Field out(grid);
  for (std::size_t i = 0; i < out.size(); ++i) out.values_[i] = fn(grid.position(i));
  return out;
}

Field& Field::operator+=(const Field& other) {
  require_same_grid(grid_, other.grid_, "field addition");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

Field& Field::operator-=(const Field& other) {
  require_same_grid(grid_, other.grid_, "field subtraction");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

Field& Field::operator*=(Complex s) noexcept {
  for (auto& v : values_) v *= s;
  return *this;
}

bool Field::all_finite() const noexcept {
  for (const auto& v : values_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

}  // namespace gpf
