#include <doctest.h>

#include <cmath>

#include "gpfield/background.hpp"
#include "gpfield/errors.hpp"
#include "gpfield/norms.hpp"
#include "gpfield/spectral.hpp"
#include "helpers.hpp"

using namespace gpf;

TEST_CASE("constant background") {
  const Grid g(2, 32, 5.0);
  const auto bg = constant_background(g, 2.0);
  CHECK(bg.phi[0] == Complex(std::sqrt(2.0), 0.0));
  CHECK(testing::max_abs(bg.laplacian_phi) == 0.0);
  const auto rep = check_Hphi(bg);
  CHECK(rep.passed);
  CHECK(rep.grad_h2_norm == 0.0);
  CHECK(rep.density_defect_l2 <= 1e-13);
  CHECK_THROWS_AS(constant_background(g, 0.0), DomainError);
}

TEST_CASE("kink pair profile") {
  const Grid g(1, 1024, 40.0);
  const auto bg = kink_pair_background(g, 1.0, 40.0);
  // Black soliton tanh(x / sqrt 2) solves phi'' + (1 - phi^2) phi = 0.
  const double a = std::sqrt(0.5);
  double residual = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.position(i)[0];
    const double expected = std::tanh(a * (x + 20.0)) * -std::tanh(a * (x - 20.0));
    CHECK(std::abs(bg.phi[i].real() - expected) <= 1e-15);
    const double phi = bg.phi[i].real();
    residual = std::max(residual, std::abs(bg.laplacian_phi[i].real() + (1.0 - phi * phi) * phi));
  }
  CHECK(residual <= 1e-9);
  CHECK(bg.periodicity_residual <= 1e-12);
  CHECK(check_Hphi(bg).passed);
  // Zeros of phi sit at the kink centres.
  CHECK(std::abs(bg.phi[g.size() / 4].real()) <= 1e-12);
  CHECK(std::abs(bg.phi[3 * g.size() / 4].real()) <= 1e-12);
}

TEST_CASE("kink pair preconditions") {
  CHECK_THROWS_AS(kink_pair_background(Grid(2, 32, 40.0), 1.0, 40.0), DomainError);
  const Grid g(1, 1024, 40.0);
  CHECK_THROWS_AS(kink_pair_background(g, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(kink_pair_background(g, 1.0, 41.0), DomainError);
  CHECK_THROWS_AS(kink_pair_background(g, 1.0, 10.0), DomainError);  // tails overlap
  CHECK_THROWS_AS(kink_pair_background(g, -1.0, 40.0), DomainError);
}

TEST_CASE("bump modulated background") {
  const Grid g(2, 96, 12.0);
  const auto bg = bump_modulated_background(g, 1.0, 0.4, 2.9);
  CHECK(bg.phi[0] == Complex(1.0, 0.0));
  CHECK(bg.phi[g.size() / 2 + g.points_per_axis() / 2].real() == doctest::Approx(1.4));
  const auto rep = check_Hphi(bg);
  CHECK(rep.passed);
  CHECK(rep.density_defect_l2 > 0.0);
  CHECK_THROWS_AS(bump_modulated_background(g, 1.0, 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(bump_modulated_background(g, 1.0, 0.3, 3.0), DomainError);
  CHECK_THROWS_AS(bump_modulated_background(g, 1.0, 0.3, 0.0), DomainError);
}

TEST_CASE("H_phi rejects rough profiles") {
  const Grid g(1, 128, 10.0);
  const Field rough = Complex(1.0, 0.0) * Field::constant(g, 1.0) + Complex(0.1, 0.0) * testing::noise_field(g, 8);
  const auto rep = check_Hphi(rough, 1.0);
  CHECK_FALSE(rep.passed);
  CHECK(rep.tail_fraction > kHphiTailThreshold);
  // A step profile is not smooth either.
  const Field step = Field::from_function(g, [](const std::array<double, 3>& x) { return Complex(x[0] < 0 ? 1.0 : -1.0, 0); });
  CHECK_FALSE(check_Hphi(step, 1.0).passed);
}
