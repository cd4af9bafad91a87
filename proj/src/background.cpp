#include "gpfield/background.hpp"

#include <cmath>
#include <numbers>

#include "gpfield/errors.hpp"
#include "gpfield/norms.hpp"
#include "gpfield/spectral.hpp"

namespace gpf {

std::string to_string(BackgroundKind kind) {
  switch (kind) {
    case BackgroundKind::Constant: return "constant";
    case BackgroundKind::BumpModulated: return "bump";
    case BackgroundKind::KinkPair: return "kink-pair";
  }
  return "unknown";
}

Background constant_background(const Grid& grid, double rho0) {
  if (!(rho0 > 0.0)) throw DomainError("constant background: rho0 must be positive");
  return Background{Field::constant(grid, std::sqrt(rho0)), rho0, BackgroundKind::Constant,
                    Field(grid), 0.0};
}

Background kink_pair_background(const Grid& grid, double rho0, double separation) {
  if (grid.dim() != 1) throw DomainError("kink pair background requires a 1D grid");
  if (!(rho0 > 0.0)) throw DomainError("kink pair background: rho0 must be positive");
  const double L = grid.half_length();
  if (!(separation > 0.0)) throw DomainError("kink pair background: separation must be positive");
  if (separation > L) throw DomainError("kink pair background: separation must not exceed L");

  const double a = std::sqrt(rho0 / 2.0);
  const double amp = std::sqrt(rho0);
  const double half = separation / 2.0;
  // Tail deviation from +-1 halfway between the kinks and halfway across the seam.
  const double gap = std::min(separation, 2.0 * L - separation) / 2.0;
  const double saturation = 1.0 - std::tanh(a * gap);
  if (saturation > 1e-10)
    throw DomainError("kink pair background: tanh tails not saturated (deviation " +
                      std::to_string(saturation) + "); increase L or the separation");

  auto profile = [=](double x) { return amp * std::tanh(a * (x + half)) * -std::tanh(a * (x - half)); };
  Field phi = Field::from_function(grid, [&](const std::array<double, 3>& x) { return Complex(profile(x[0]), 0.0); });
  Field lap = laplacian(phi);
  return Background{std::move(phi), rho0, BackgroundKind::KinkPair, std::move(lap),
                    std::abs(profile(L) - profile(-L))};
}

Background bump_modulated_background(const Grid& grid, double rho0, double amplitude, double width) {
  if (!(rho0 > 0.0)) throw DomainError("bump background: rho0 must be positive");
  if (!(width > 0.0) || !(width < grid.half_length() / 4.0))
    throw DomainError("bump background: width must lie in (0, L/4)");
  if (!(std::abs(amplitude) < std::sqrt(rho0)))
    throw DomainError("bump background: |amplitude| must be below sqrt(rho0)");
  const double base = std::sqrt(rho0);
  Field phi = Field::from_function(grid, [&](const std::array<double, 3>& x) {
    const double r2 = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) / (width * width);
    if (r2 >= 1.0 || amplitude == 0.0) return Complex(base, 0.0);
    return Complex(base + amplitude * std::exp(1.0 - 1.0 / (1.0 - r2)), 0.0);
  });
  Field lap = amplitude == 0.0 ? Field(grid) : laplacian(phi);
  return Background{std::move(phi), rho0, BackgroundKind::BumpModulated, std::move(lap), 0.0};
}

HphiReport check_Hphi(const Field& phi, double rho0) {
  const Grid& grid = phi.grid();
  const auto c = forward_transform(phi);
  const auto n = grid.points_per_axis();
  const auto nyq = grid.nyquist_index();
  const auto xi = grid.wavenumbers();
  const auto k2 = grid.k_squared();
  const double xi_max = std::numbers::pi * static_cast<double>(n / 2) / grid.half_length();

  double h2 = 0.0;
  double total = 0.0;
  double tail = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double e = std::norm(c[i]);
    total += e;
    if (std::sqrt(k2[i]) >= 0.5 * xi_max) tail += e;
    // sum_j xi_j^2 (1 + |xi|^2 + |xi|^4), Nyquist rows dropped as for odd derivatives.
    double grad2 = 0.0;
    std::size_t rest = i;
    for (int d = 0; d < grid.dim(); ++d) {
      const std::size_t idx = rest % n;
      rest /= n;
      if (idx != nyq) grad2 += xi[idx] * xi[idx];
    }
    h2 += grad2 * (1.0 + k2[i] + k2[i] * k2[i]) * e;
  }

  HphiReport rep;
  rep.grad_h2_norm = std::sqrt(h2 * grid.cell_volume() / static_cast<double>(grid.size()));
  Field defect(grid);
  for (std::size_t i = 0; i < defect.size(); ++i) defect[i] = std::norm(phi[i]) - rho0;
  rep.density_defect_l2 = lp_norm(defect, 2.0);
  rep.tail_fraction = total > 0.0 ? tail / total : 0.0;
  rep.passed = std::isfinite(rep.grad_h2_norm) && std::isfinite(rep.density_defect_l2) &&
               std::isfinite(rep.tail_fraction) && rep.tail_fraction < kHphiTailThreshold;
  return rep;
}

HphiReport check_Hphi(const Background& bg) { return check_Hphi(bg.phi, bg.rho0); }

}  // namespace gpf
