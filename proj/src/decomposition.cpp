#include "gpfield/decomposition.hpp"

#include <cmath>

#include "gpfield/errors.hpp"
#include "gpfield/norms.hpp"
#include "gpfield/spectral.hpp"

namespace gpf {

namespace {

void require_compatible(const Field& w, const Background& bg, const char* what) {
  require_same_grid(w.grid(), bg.phi.grid(), what);
}

}  // namespace

Field forcing(const Field& w, const Background& bg, const Nonlinearity& nl) {
  require_compatible(w, bg, "forcing");
  Field out(w.grid());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Complex u = bg.phi[i] + w[i];
    out[i] = -bg.laplacian_phi[i] - nl.f(std::norm(u)) * u;
  }
  return out;
}

ForcingSplit split_forcing(const Field& w, const Background& bg, const Nonlinearity& nl) {
  require_compatible(w, bg, "split_forcing");
  const Grid& grid = w.grid();
  ForcingSplit s{Field(grid), Field(grid), Field(grid)};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Complex phi = bg.phi[i];
    const Complex u = phi + w[i];
    const double rho = std::norm(phi);
    const double re = (std::conj(phi) * w[i]).real();
    s.whole[i] = -nl.f(std::norm(u)) * u;
    s.f1[i] = -nl.f(rho) * u - 2.0 * re * nl.fprime(rho) * phi;
    s.f2[i] = s.whole[i] - s.f1[i];
  }
  return s;
}

Field remainder_explicit(const Field& w, const Background& bg, const Nonlinearity& nl) {
  require_compatible(w, bg, "remainder_explicit");
  Field out(w.grid());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Complex phi = bg.phi[i];
    const Complex u = phi + w[i];
    const double rho = std::norm(phi);
    const double re = (std::conj(phi) * w[i]).real();
    out[i] = -(nl.f(std::norm(u)) - nl.f(rho)) * u + 2.0 * re * nl.fprime(rho) * phi;
  }
  return out;
}

GradientSplit split_forcing_gradient(const Field& w, const Background& bg, const Nonlinearity& nl) {
  const auto s = split_forcing(w, bg, nl);
  return GradientSplit{gradient(s.f1), gradient(s.f2)};
}

double cutoff_chi(double s) {
  if (s <= 1.0) return 1.0;
  if (s >= 2.0) return 0.0;
  const double t = s - 1.0;
  const double t4 = t * t * t * t;
  return 1.0 - t4 * (35.0 + t * (-84.0 + t * (70.0 - 20.0 * t)));
}

FrequencySplit frequency_split(const Field& eta, double cutoff_scale) {
  if (!(cutoff_scale > 0.0)) throw DomainError("frequency_split: cutoff scale must be positive");
  const Grid& grid = eta.grid();
  const auto c = forward_transform(eta);
  const auto k2 = grid.k_squared();
  std::vector<Complex> low(c.size());
  std::vector<Complex> high(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double chi = cutoff_chi(std::sqrt(k2[i]) / cutoff_scale);
    low[i] = chi * c[i];
    if (k2[i] == 0.0) {
      high[i] = 0.0;
      continue;
    }
    const auto xi = grid.wavevector(i);
    Complex sum{};
    for (int j = 0; j < grid.dim(); ++j) {
      const double xj = xi[static_cast<std::size_t>(j)];
      sum += Complex(0.0, -xj / k2[i]) * Complex(0.0, xj);
    }
    high[i] = (1.0 - chi) * sum * c[i];
  }
  return FrequencySplit{inverse_transform(grid, std::move(low)), inverse_transform(grid, std::move(high)),
                        cutoff_scale};
}

double q_smoothing_ratio(const Field& eta, double cutoff_scale) {
  if (!(cutoff_scale > 0.0)) throw DomainError("q_smoothing_ratio: cutoff scale must be positive");
  const double denom = lp_norm(eta, 2.0);
  if (!(denom > 0.0)) throw DomainError("q_smoothing_ratio: zero field");
  const Grid& grid = eta.grid();
  auto c = forward_transform(eta);
  const auto k2 = grid.k_squared();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= cutoff_chi(std::sqrt(k2[i]) / cutoff_scale);
  return h1_norm(inverse_transform(grid, std::move(c))) / denom;
}

double f1_lipschitz_bound(const Background& bg, const Nonlinearity& nl) {
  double k = 0.0;
  for (const auto& phi : bg.phi.values()) {
    const double rho = std::norm(phi);
    k = std::max(k, std::abs(nl.f(rho)) + 2.0 * rho * std::abs(nl.fprime(rho)));
  }
  return k;
}

}  // namespace gpf
