#include <doctest.h>

#include <cmath>
#include <limits>

#include "gpfield/errors.hpp"
#include "gpfield/norms.hpp"
#include "gpfield/propagator.hpp"
#include "gpfield/solver.hpp"
#include "helpers.hpp"

using namespace gpf;
using testing::max_abs;
using testing::max_abs_diff;

namespace {
Field gaussian(const Grid& g, double width, double h1) {
  Field f = Field::from_function(g, [&](const std::array<double, 3>& x) {
    const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    return Complex(std::exp(-r2 / (2 * width * width)), 0.0);
  });
  f *= Complex(h1 / h1_norm(f), 0.0);
  return f;
}

SolverConfig strang(double dt, double T, std::size_t stride = 10) {
  SolverConfig c;
  c.dt = dt;
  c.T = T;
  c.snapshot_stride = stride;
  return c;
}
}  // namespace

TEST_CASE("step count") {
  CHECK(step_count(1.0, 1e-3) == 1000);
  CHECK(step_count(0.05, 1e-3) == 50);
  CHECK_THROWS_WITH_AS(step_count(1.0, 0.3), "T/dt not integral", DomainError);
  CHECK_THROWS_AS(step_count(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(step_count(0.0, 0.1), DomainError);
}

TEST_CASE("nonlinear sub-step is a pure phase rotation") {
  const Grid g(2, 16, 3.0);
  Field u = testing::noise_field(g, 1);
  const Field before = u;
  nonlinear_substep(u, make_cubic_quintic(1.0, 0.5), 0.37);
  for (std::size_t i = 0; i < u.size(); ++i) CHECK(std::abs(std::abs(u[i]) - std::abs(before[i])) <= 1e-15 * std::abs(before[i]) + 1e-300);
}

TEST_CASE("trajectory layout") {
  const Grid g(1, 64, 10.0);
  const auto bg = constant_background(g, 1.0);
  const auto traj = evolve(gaussian(g, 1.0, 0.1), bg, make_gross_pitaevskii(1.0), strang(0.01, 0.25, 10));
  CHECK(traj.steps == 25);
  CHECK(traj.energy_series.size() == 26);
  CHECK(traj.mass_series.size() == 26);
  CHECK(traj.snapshot_steps == std::vector<std::size_t>{0, 10, 20, 25});
  CHECK(traj.times.back() == doctest::Approx(0.25));
  CHECK(traj.w_fields.size() == 4);
  CHECK(traj.final_time() == doctest::Approx(0.25));
  CHECK(std::isinf(traj.pair.p));
}

TEST_CASE("constant background is a fixed point") {
  const Grid g(2, 32, 5.0);
  const auto bg = constant_background(g, 1.0);
  const auto traj = evolve(Field(g), bg, make_gross_pitaevskii(1.0), strang(1e-3, 1.0, 100));
  for (double v : traj.h1_series) CHECK(v <= 1e-12);
  for (double e : traj.energy_series) CHECK(std::abs(e) <= 1e-12);
}

TEST_CASE("linear problem reduces to free evolution") {
  const Grid g(2, 32, 5.0);
  const auto bg = constant_background(g, 1.0);
  const auto zero_f = Nonlinearity::user_polynomial(1.0, {0.0});
  auto cfg = strang(0.01, 0.5);
  cfg.require_hf = false;
  const Field w0 = gaussian(g, 0.8, 0.5);
  const auto traj = evolve(w0, bg, zero_f, cfg);
  CHECK(max_abs_diff(traj.w_fields.back(), free_evolve(w0, 0.5)) <= 1e-12);
  cfg.require_hf = true;
  CHECK_THROWS_AS(evolve(w0, bg, zero_f, cfg), DomainError);

  const auto res = convergence_order(w0, bg, zero_f, 0.5, {0.05, 0.025, 0.0125}, false);
  CHECK(res.exact);
  CHECK(std::isinf(res.order));
}

TEST_CASE("determinism and time reversal") {
  const Grid g(2, 32, 6.0);
  const auto bg = constant_background(g, 1.0);
  const auto nl = make_gross_pitaevskii(1.0);
  const Field w0 = gaussian(g, 1.0, 0.3);
  const auto a = evolve(w0, bg, nl, strang(0.01, 0.5));
  const auto b = evolve(w0, bg, nl, strang(0.01, 0.5));
  REQUIRE(a.w_fields.size() == b.w_fields.size());
  for (std::size_t k = 0; k < a.w_fields.size(); ++k)
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(a.w_fields[k][i] == b.w_fields[k][i]);
  CHECK(a.energy_series == b.energy_series);

  // Truncation error estimated against a half-step run.
  const auto fine = evolve(w0, bg, nl, strang(0.005, 0.5));
  const double truncation = lp_norm(a.w_fields.back() - fine.w_fields.back(), 2.0);
  const StrangStepper back(g, nl, -0.01);
  Field u = bg.phi + a.w_fields.back();
  for (std::size_t n = 0; n < a.steps; ++n) back.step(u);
  CHECK(lp_norm(u - bg.phi - w0, 2.0) <= 10.0 * truncation);
}

TEST_CASE("input validation") {
  const Grid g(1, 32, 5.0);
  const auto bg = constant_background(g, 1.0);
  const auto nl = make_gross_pitaevskii(1.0);
  Field bad(g);
  bad[3] = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(evolve(bad, bg, nl, strang(0.1, 1.0)), DomainError);
  CHECK_THROWS_AS(evolve(Field(Grid(1, 64, 5.0)), bg, nl, strang(0.1, 1.0)), DomainError);
  auto picard_cfg = strang(0.1, 1.0);
  CHECK_THROWS_AS(picard_solve(Field(g), bg, nl, picard_cfg), DomainError);
  picard_cfg.scheme = Scheme::Picard;
  CHECK_THROWS_AS(evolve(Field(g), bg, nl, picard_cfg), DomainError);
}

TEST_CASE("picard iteration") {
  const Grid g(2, 32, 6.0);
  const auto bg = constant_background(g, 1.0);
  const auto nl = make_gross_pitaevskii(1.0);
  const Field w0 = gaussian(g, 1.0, 0.1);
  SolverConfig cfg = strang(1e-3, 0.05, 10);
  cfg.scheme = Scheme::Picard;
  cfg.picard_tol = 1e-11;
  const auto traj = picard_solve(w0, bg, nl, cfg);
  CHECK(traj.picard_iterations >= 2);
  CHECK(traj.picard_differences.back() <= 1e-11);
  for (double f : traj.picard_history) CHECK(f < 1.0);

  // The converged trajectory is (nearly) a fixed point of the Duhamel map.
  std::vector<Field> full;
  {
    SolverConfig dense = cfg;
    dense.snapshot_stride = 1;
    full = picard_solve(w0, bg, nl, dense).w_fields;
  }
  const auto again = picard_map(full, w0, bg, nl, cfg.dt);
  double change = 0.0;
  for (std::size_t j = 0; j < full.size(); ++j) change = std::max(change, h1_norm(again[j] - full[j]));
  CHECK(change <= cfg.picard_tol);

  const auto ref = evolve(w0, bg, nl, strang(1e-3, 0.05, 50));
  CHECK(lp_norm(traj.w_fields.back() - ref.w_fields.back(), 2.0) <= 1e-8);
}

TEST_CASE("picard reports non-contraction") {
  const Grid g(1, 64, 8.0);
  const auto bg = constant_background(g, 1.0);
  const auto nl = make_cubic_quintic(1.0, 0.5);
  SolverConfig cfg = strang(0.05, 20.0, 100);
  cfg.scheme = Scheme::Picard;
  cfg.picard_max_iter = 40;
  CHECK_THROWS_AS(picard_solve(gaussian(g, 0.5, 3.0), bg, nl, cfg), NonContractionError);
}

TEST_CASE("Strang order on smooth data") {
  const Grid g(2, 32, 6.0);
  const auto bg = constant_background(g, 1.0);
  const auto nl = make_gross_pitaevskii(1.0);
  const auto res = convergence_order(gaussian(g, 1.0, 0.3), bg, nl, 0.2, {0.02, 0.01, 0.005, 0.0025});
  CHECK_FALSE(res.exact);
  CHECK(res.errors.size() == 3);
  CHECK(res.order >= 1.8);
  CHECK(res.order <= 2.2);
  CHECK_THROWS_AS(convergence_order(gaussian(g, 1.0, 0.3), bg, nl, 0.2, {0.01, 0.01, 0.01}), DomainError);
  CHECK_THROWS_AS(convergence_order(gaussian(g, 1.0, 0.3), bg, nl, 0.2, {0.01, 0.005}), DomainError);
}
