#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gpfield/conservation.hpp"
#include "gpfield/errors.hpp"
#include "gpfield/solver.hpp"
#include "helpers.hpp"

using namespace gpf;

namespace {
constexpr double pi = std::numbers::pi;

Field gaussian(const Grid& g, double width, double h1) {
  Field f = Field::from_function(g, [&](const std::array<double, 3>& x) {
    const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    return Complex(std::exp(-r2 / (2 * width * width)), 0.0);
  });
  f *= Complex(h1 / h1_norm(f), 0.0);
  return f;
}

SolverConfig strang(double dt, double T, std::size_t stride) {
  SolverConfig c;
  c.dt = dt;
  c.T = T;
  c.snapshot_stride = stride;
  return c;
}
}  // namespace

TEST_CASE("energy examples") {
  const Grid g(2, 32, 5.0);
  const auto bg = constant_background(g, 1.0);
  const auto gp = make_gross_pitaevskii(1.0);
  CHECK(energy(Field(g), bg, gp) == 0.0);
  CHECK_THROWS_AS(energy(Field(Grid(2, 16, 5.0)), bg, gp), DomainError);
}

TEST_CASE("single mode energy against direct quadrature") {
  const double L = 4.0;
  const Grid g(1, 64, L);
  const auto bg = constant_background(g, 1.0);
  const auto gp = make_gross_pitaevskii(1.0);
  const double eps = 0.05;
  const int m = 3;
  const double k = pi * m / L;
  const Field w = Field::from_function(g, [&](const std::array<double, 3>& x) { return eps * std::polar(1.0, k * x[0]); });
  // Midpoint rule on a fine mesh with the analytic integrand.
  const int M = 20000;
  double oracle = 0.0;
  for (int i = 0; i < M; ++i) {
    const double x = -L + (i + 0.5) * 2 * L / M;
    const double rho = std::norm(1.0 + eps * std::polar(1.0, k * x));
    oracle += (eps * eps * k * k + 0.5 * (1.0 - rho) * (1.0 - rho)) * 2 * L / M;
  }
  const double e = energy(w, bg, gp);
  CHECK(e == doctest::Approx(oracle).epsilon(1e-10));
  CHECK(e >= eps * eps * k * k * 2 * L);
}

TEST_CASE("kink pair energy equals two black solitons") {
  const Grid g(1, 1024, 40.0);
  const auto bg = kink_pair_background(g, 1.0, 40.0);
  const double e = energy(Field(g), bg, make_gross_pitaevskii(1.0));
  // \int sech^4(x / sqrt 2) dx = 4 sqrt(2) / 3 per kink.
  const double per_kink = 4.0 * std::sqrt(2.0) / 3.0;
  CHECK(std::abs(e / 2.0 - per_kink) <= 1e-6 * per_kink);
}

TEST_CASE("energy invariances") {
  const Grid g(2, 32, 5.0);
  const auto gp = make_gross_pitaevskii(1.0);
  const auto cq = make_cubic_quintic(1.0, 0.5);
  const Field u = Field::constant(g, 1.0) + testing::smooth_random_field(g, 3);
  for (double theta : {0.4, 2.0, -1.3}) {
    const Field rotated = std::polar(1.0, theta) * u;
    CHECK(energy_of_state(rotated, gp) == doctest::Approx(energy_of_state(u, gp)).epsilon(1e-12));
    CHECK(energy_of_state(rotated, cq) == doctest::Approx(energy_of_state(u, cq)).epsilon(1e-12));
  }
  for (unsigned s = 0; s < 10; ++s) CHECK(energy_of_state(Field::constant(g, 1.0) + testing::noise_field(g, s), gp) >= 0.0);
}

TEST_CASE("renormalized mass") {
  const Grid g(1, 32, 3.0);
  CHECK(std::abs(renormalized_mass(Field::constant(g, std::sqrt(2.0)), 2.0)) <= 1e-13);
  CHECK(renormalized_mass(Field(g), 2.0) == doctest::Approx(-2 * 3.0 * 2.0));
}

TEST_CASE("energy report from a series") {
  const auto rep = energy_report_from_series({0, 1, 2}, {2.0, 2.1, 1.8}, {1.0, 1.0, 1.5});
  CHECK(rep.e0 == 2.0);
  CHECK(rep.series.front() == rep.e0);
  CHECK(rep.max_abs_drift == doctest::Approx(0.2));
  CHECK(rep.max_rel_drift == doctest::Approx(0.1));
  CHECK(rep.max_mass_drift == doctest::Approx(0.5));
  const auto zero = energy_report_from_series({0, 1}, {0.0, 1e-12}, {});
  CHECK(zero.max_rel_drift == doctest::Approx(1e-2));
  CHECK_THROWS_AS(energy_report_from_series({}, {}, {}), DomainError);
}

TEST_CASE("drift report on runs") {
  const Grid g(2, 48, 8.0);
  const auto bg = constant_background(g, 1.0);
  const auto gp = make_gross_pitaevskii(1.0);

  const auto still = drift_report(evolve(Field(g), bg, gp, strang(0.01, 1.0, 10)), bg, gp);
  CHECK(still.max_rel_drift <= 1e-12);

  const Field w0 = gaussian(g, 1.0, 0.1);
  const auto coarse_run = evolve(w0, bg, gp, strang(0.02, 1.0, 5));
  const auto coarse = drift_report(coarse_run, bg, gp);
  CHECK(coarse.bookkeeping_mismatch <= 1e-12 * std::max(1.0, coarse.e0));
  CHECK(coarse.max_mass_drift <= 1e-10);
  CHECK(coarse.times.size() == coarse.series.size());
  const auto fine = drift_report(evolve(w0, bg, gp, strang(0.01, 1.0, 10)), bg, gp);
  const double ratio = fine.max_rel_drift / coarse.max_rel_drift;
  CHECK(ratio >= 1.0 / 8.0);
  CHECK(ratio <= 1.0 / 1.5);
}

TEST_CASE("X_T norm") {
  const Grid g(2, 16, 4.0);
  const AdmissiblePair pair = admissible_pair_for(2);
  Trajectory traj;
  traj.dt = 0.1;
  traj.steps = 10;
  const Field w = testing::smooth_random_field(g, 6);
  for (int k = 0; k <= 10; ++k) {
    traj.times.push_back(0.1 * k);
    traj.snapshot_steps.push_back(static_cast<std::size_t>(k));
    traj.w_fields.push_back(w);
  }
  const double T = 1.0;
  const double expected = h1_norm(w) + std::pow(T, 1.0 / pair.p) * w1q_norm(w, pair.q);
  CHECK(xt_norm(traj, pair) == doctest::Approx(expected).epsilon(1e-12));

  Trajectory scaled = traj;
  for (auto& f : scaled.w_fields) f *= Complex(3.0, 0.0);
  CHECK(xt_norm(scaled, pair) == doctest::Approx(3.0 * xt_norm(traj, pair)).epsilon(1e-13));

  Trajectory zero = traj;
  for (auto& f : zero.w_fields) f = Field(g);
  CHECK(xt_norm(zero, pair) == 0.0);
  CHECK_THROWS_AS(xt_norm(traj, AdmissiblePair{2.0, kInf, 2}), DomainError);
  CHECK_THROWS_AS(xt_norm(traj, admissible_pair_for(3)), DomainError);
}
