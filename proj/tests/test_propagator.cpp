#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gpfield/errors.hpp"
#include "gpfield/norms.hpp"
#include "gpfield/propagator.hpp"
#include "helpers.hpp"

using namespace gpf;
using testing::max_abs;
using testing::max_abs_diff;

namespace {
constexpr double pi = std::numbers::pi;

// Plane wave e^{i k x} in 1D with k = pi m / L.
Field mode(const Grid& g, int m) {
  return Field::from_function(g, [&](const std::array<double, 3>& x) { return std::polar(1.0, pi * m * x[0] / g.half_length()); });
}

// -i \int_0^t e^{-i k^2 (t - s)} e^{i sigma s} ds, closed form.
Complex duhamel_mode_exact(double k, double sigma, double t) {
  const double w = sigma + k * k;
  return Complex(0, -1) * std::exp(Complex(0, -k * k * t)) * (std::exp(Complex(0, w * t)) - 1.0) / Complex(0, w);
}

double duhamel_mode_error(const Grid& g, int m, double sigma, double t, std::size_t steps) {
  const double dt = t / static_cast<double>(steps);
  std::vector<double> times;
  std::vector<Field> sources;
  const Field e = mode(g, m);
  for (std::size_t j = 0; j <= steps; ++j) {
    const double s = dt * static_cast<double>(j);
    times.push_back(s);
    sources.push_back(std::exp(Complex(0, sigma * s)) * e);
  }
  const Field got = duhamel_integral(times, sources);
  const double k = pi * m / g.half_length();
  return max_abs_diff(got, duhamel_mode_exact(k, sigma, t) * e);
}
}  // namespace

TEST_CASE("Gaussian free propagation closed form") {
  const Grid g(1, 1024, 30.0);
  const Field u0 = Field::from_function(g, [](const std::array<double, 3>& x) { return Complex(std::exp(-x[0] * x[0]), 0); });
  for (double t : {0.1, 0.5, 1.0}) {
    const Complex z(1.0, 4.0 * t);
    const Field exact = Field::from_function(g, [&](const std::array<double, 3>& x) { return std::exp(-x[0] * x[0] / z) / std::sqrt(z); });
    CHECK(max_abs_diff(free_evolve(u0, t), exact) <= 1e-12);
  }
}

TEST_CASE("unitarity and group law") {
  for (int dim : {1, 2, 3}) {
    const Grid g(dim, dim == 3 ? 16 : 64, 4.0);
    const Field f = testing::noise_field(g, 40u + dim);
    const double n0 = lp_norm(f, 2.0);
    for (double t : {0.013, 0.7, 5.0}) CHECK(std::abs(lp_norm(free_evolve(f, t), 2.0) - n0) <= 1e-12 * n0);
    const Field two = free_evolve(free_evolve(f, 0.3), 0.45);
    const Field one = free_evolve(f, 0.75);
    CHECK(max_abs_diff(two, one) <= 1e-12 * max_abs(f));
    CHECK(max_abs_diff(free_evolve(free_evolve(f, 0.4), -0.4), f) <= 1e-12 * max_abs(f));
  }
}

TEST_CASE("duhamel integral of a single mode") {
  const Grid g(1, 64, 5.0);
  const double e1 = duhamel_mode_error(g, 3, 1.7, 0.8, 40);
  const double e2 = duhamel_mode_error(g, 3, 1.7, 0.8, 80);
  CHECK(e1 < 1e-2);
  const double ratio = e1 / e2;
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 5.0);
}

TEST_CASE("duhamel integral is linear in the source") {
  const Grid g(2, 16, 3.0);
  std::vector<double> times;
  std::vector<Field> a, b, mix;
  const Complex alpha(0.7, -0.2), beta(-1.1, 0.4);
  for (int j = 0; j <= 6; ++j) {
    times.push_back(0.05 * j);
    a.push_back(testing::noise_field(g, 100 + j));
    b.push_back(testing::noise_field(g, 200 + j));
    mix.push_back(alpha * a.back() + beta * b.back());
  }
  const Field lhs = duhamel_integral(times, mix);
  const Field rhs = alpha * duhamel_integral(times, a) + beta * duhamel_integral(times, b);
  CHECK(max_abs_diff(lhs, rhs) <= 1e-12 * max_abs(lhs));

  // The cumulative form agrees with the one-shot integral at every upper limit.
  const auto cum = duhamel_cumulative(a, 0.05);
  CHECK(max_abs(cum[0]) == 0.0);
  for (std::size_t j = 1; j < a.size(); ++j) {
    const Field direct = duhamel_integral(std::span(times.data(), j + 1), std::span(a.data(), j + 1));
    CHECK(max_abs_diff(cum[j], direct) <= 1e-12 * max_abs(direct));
  }
}

TEST_CASE("duhamel integral preconditions") {
  const Grid g(1, 16, 1.0);
  const Field f(g);
  std::vector<Field> two{f, f}, three{f, f, f};
  const std::vector<double> shifted{0.1, 0.2};
  const std::vector<double> uneven{0.0, 0.1, 0.3};
  const std::vector<double> single{0.0};
  CHECK_THROWS_AS(duhamel_integral(single, std::span(two.data(), 1)), DomainError);
  CHECK_THROWS_AS(duhamel_integral(shifted, two), DomainError);
  CHECK_THROWS_AS(duhamel_integral(uneven, three), DomainError);
}

TEST_CASE("strichartz ratio properties") {
  const Grid g(2, 32, 5.0);
  const Field f = seeded_random_field(g, 5, Spectrum::Flat);
  const AdmissiblePair pair{3.0, 6.0, 2};
  const double r = strichartz_ratio_of(f, pair, 1.0, 20);
  for (Complex s : {Complex(2.5, 0), Complex(0, -1e-3), Complex(-3, 4)})
    CHECK(std::abs(strichartz_ratio_of(s * f, pair, 1.0, 20) - r) <= 1e-12 * r);
  // The energy pair measures sup_t ||e^{it Delta} f||_2 / ||f||_2 = 1.
  CHECK(std::abs(strichartz_ratio_of(f, AdmissiblePair{kInf, 2.0, 2}, 1.0, 20) - 1.0) <= 1e-12);

  const auto rep = strichartz_ratio(g, 9, pair, 1.0, 10, 5, Spectrum::SobolevDecay);
  CHECK(rep.ratios.size() == 5);
  CHECK(rep.ratio == rep.ratios.front());
  CHECK(rep.max_ratio >= rep.ratio);
  CHECK(rep.ratios[2] == strichartz_ratio_of(seeded_random_field(g, 11, Spectrum::SobolevDecay), pair, 1.0, 10));
  CHECK_THROWS_AS(strichartz_ratio_of(f, AdmissiblePair{2.0, kInf, 2}, 1.0, 10), DomainError);
  CHECK_THROWS_AS(strichartz_ratio_of(f, AdmissiblePair{2.0, 6.0, 3}, 1.0, 10), DomainError);
  CHECK_THROWS_AS(strichartz_ratio_of(Field(g), pair, 1.0, 10), DomainError);
}
