#include "gpfield/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gpfield/errors.hpp"

namespace gpf {

namespace {

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Taylor shift: coefficients of p(r) in powers of r -> powers of (r - x0).
std::vector<double> shift_coefficients(const std::vector<double>& c, double x0) {
  std::vector<double> d(c);
  const std::size_t n = d.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) d[j - 1] += x0 * d[j];
  return d;
}

struct GridFit {
  double full = 0.0;
  double lower = 0.0;
};

// Maximum of `ratios` over the whole grid and over the grid with the top
// decade removed (first half of the grid when r_max < 10).
GridFit fit_max(const std::vector<double>& r, const std::vector<double>& ratios, double r_max) {
  GridFit fit{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  const double cut = r_max / 10.0;
  std::size_t lower_count = 0;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] <= cut) ++lower_count;
  if (lower_count == 0) lower_count = std::max<std::size_t>(1, r.size() / 2);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double v = std::isnan(ratios[i]) ? std::numeric_limits<double>::infinity() : ratios[i];
    fit.full = std::max(fit.full, v);
    if (i < lower_count) fit.lower = std::max(fit.lower, v);
  }
  return fit;
}

void finish_growth_fit(HypothesisReport& rep, const GridFit& fit) {
  rep.fitted_C0 = fit.full;
  if (!std::isfinite(fit.full)) {
    rep.passed = false;
    rep.max_violation = std::numeric_limits<double>::infinity();
    return;
  }
  rep.max_violation = fit.full - 1.05 * fit.lower;
  rep.passed = rep.max_violation <= 0.0;
}

void require_grid(double r_max, std::size_t samples, double lo) {
  if (!(r_max > lo)) throw DomainError("r_max must exceed " + std::to_string(lo));
  if (samples < 2) throw DomainError("at least two samples are required");
}

std::vector<double> halpha1prime_ratios(const Nonlinearity& nl, double alpha1,
                                        const std::vector<double>& r) {
  std::vector<double> out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    double best = 0.0;
    for (int k = 1; k <= 2; ++k) {
      const double v = std::abs(nl.derivative(k, r[i])) * std::pow(r[i], k + 1 - alpha1);
      best = std::max(best, v);
    }
    out[i] = best;
  }
  return out;
}

// {0} followed by a log grid on [1e-6, r_max]; ff01 and the lower-bound
// branch of H_alpha2 quantify over all r >= 0.
std::vector<double> grid_from_zero(double r_max, std::size_t samples) {
  std::vector<double> r{0.0};
  auto tail = log_grid(1e-6, r_max, samples - 1);
  r.insert(r.end(), tail.begin(), tail.end());
  return r;
}

}  // namespace

std::string to_string(NonlinearityKind kind) {
  switch (kind) {
    case NonlinearityKind::GrossPitaevskii: return "gross-pitaevskii";
    case NonlinearityKind::CubicQuintic: return "cubic-quintic";
    case NonlinearityKind::UserPolynomial: return "user-polynomial";
  }
  return "unknown";
}

std::string to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::Hf: return "Hf";
    case Hypothesis::Halpha1: return "Halpha1";
    case Hypothesis::Halpha1prime: return "Halpha1prime";
    case Hypothesis::Halpha2: return "Halpha2";
    case Hypothesis::ff01: return "ff01";
  }
  return "unknown";
}

Nonlinearity::Nonlinearity(NonlinearityKind kind, double rho0, std::vector<double> coefficients)
    : kind_(kind), rho0_(rho0), coefficients_(std::move(coefficients)) {
  if (!(rho0 > 0.0) || !std::isfinite(rho0)) throw DomainError("rho0 must be positive");
  while (coefficients_.size() > 1 && coefficients_.back() == 0.0) coefficients_.pop_back();
  if (coefficients_.empty()) coefficients_.push_back(0.0);
  for (double c : coefficients_)
    if (!std::isfinite(c)) throw DomainError("polynomial coefficients must be finite");
  shifted_ = shift_coefficients(coefficients_, rho0_);
  alpha1_hint_ = std::max(1.0, static_cast<double>(degree() + 1));
}

Nonlinearity Nonlinearity::user_polynomial(double rho0, std::vector<double> coefficients) {
  return Nonlinearity(NonlinearityKind::UserPolynomial, rho0, std::move(coefficients));
}

Nonlinearity make_gross_pitaevskii(double rho0) {
  if (!(rho0 > 0.0)) throw DomainError("gross-pitaevskii: rho0 must be positive");
  Nonlinearity nl(NonlinearityKind::GrossPitaevskii, rho0, {rho0, -1.0});
  nl.shifted_ = {0.0, -1.0};
  return nl;
}

Nonlinearity make_cubic_quintic(double rho0, double a) {
  if (!(rho0 > 0.0)) throw DomainError("cubic-quintic: rho0 must be positive");
  if (!(a > 0.0 && a < rho0)) throw DomainError("cubic-quintic: requires 0 < a < rho0");
  // (r - rho0)(2a + rho0 - 3r) expanded in r.
  Nonlinearity nl(NonlinearityKind::CubicQuintic, rho0,
                  {-rho0 * (2.0 * a + rho0), 2.0 * a + 4.0 * rho0, -3.0});
  // In s = r - rho0: s (2a - 2 rho0 - 3 s).
  nl.shifted_ = {0.0, 2.0 * a - 2.0 * rho0, -3.0};
  nl.cq_a_ = a;
  return nl;
}

double Nonlinearity::f(double r) const { return horner(shifted_, r - rho0_); }
double Nonlinearity::fprime(double r) const { return derivative(1, r); }
double Nonlinearity::fsecond(double r) const { return derivative(2, r); }

double Nonlinearity::derivative(int k, double r) const {
  if (k < 0) throw DomainError("derivative order must be nonnegative");
  if (k == 0) return f(r);
  if (static_cast<std::size_t>(k) >= shifted_.size()) return 0.0;
  std::vector<double> d(shifted_.begin() + k, shifted_.end());
  for (std::size_t j = 0; j < d.size(); ++j) {
    double falling = 1.0;
    for (int m = 0; m < k; ++m) falling *= static_cast<double>(j + k - m);
    d[j] *= falling;
  }
  return horner(d, r - rho0_);
}

double Nonlinearity::V(double r) const {
  // V(r) = -\int_{rho0}^{r} f = -sum_k d_k s^(k+1) / (k+1).
  const double s = r - rho0_;
  double acc = 0.0;
  for (std::size_t k = shifted_.size(); k-- > 0;) acc = acc * s + shifted_[k] / static_cast<double>(k + 1);
  return -acc * s;
}

std::vector<double> log_grid(double lo, double hi, std::size_t samples) {
  if (!(lo > 0.0) || !(hi > lo) || samples < 2) throw DomainError("invalid log grid");
  std::vector<double> r(samples);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < samples; ++i)
    r[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(samples - 1));
  r.front() = lo;
  r.back() = hi;
  return r;
}

HypothesisReport check_Hf(const Nonlinearity& nl, double tol) {
  if (!(tol > 0.0)) throw DomainError("check_Hf: tol must be positive");
  HypothesisReport rep;
  rep.hypothesis = Hypothesis::Hf;
  rep.alpha1 = nl.alpha1_hint().value_or(1.0);
  rep.samples = 1;
  const double f0 = nl.f(nl.rho0());
  const double fp = nl.fprime(nl.rho0());
  const double zero_excess = std::abs(f0) - tol * (1.0 + std::abs(fp));
  rep.max_violation = std::max(zero_excess, fp);
  rep.passed = zero_excess <= 0.0 && fp < 0.0;
  return rep;
}

HypothesisReport check_Halpha1prime(const Nonlinearity& nl, double alpha1, double r_max,
                                    std::size_t samples) {
  if (!(alpha1 >= 1.0)) throw DomainError("check_Halpha1prime: alpha1 must be >= 1");
  require_grid(r_max, samples, 1.0);
  HypothesisReport rep;
  rep.hypothesis = Hypothesis::Halpha1prime;
  rep.alpha1 = alpha1;
  rep.samples = samples;
  const auto r = log_grid(1.0, r_max, samples);
  finish_growth_fit(rep, fit_max(r, halpha1prime_ratios(nl, alpha1, r), r_max));
  return rep;
}

double halpha1prime_violation(const Nonlinearity& nl, double alpha1, double C0, double r_max,
                              std::size_t samples) {
  const auto r = log_grid(1.0, r_max, samples);
  const auto ratios = halpha1prime_ratios(nl, alpha1, r);
  double worst = -std::numeric_limits<double>::infinity();
  for (double v : ratios) worst = std::max(worst, v - C0);
  return worst;
}

HypothesisReport check_Halpha1(const Nonlinearity& nl, double alpha1, int dim, double r_max,
                               std::size_t samples) {
  if (!(alpha1 >= 1.0)) throw DomainError("check_Halpha1: alpha1 must be >= 1");
  if (dim < 1 || dim > 4) throw DomainError("check_Halpha1: dimension must be in 1..4");
  require_grid(r_max, samples, 1.0);
  HypothesisReport rep;
  rep.hypothesis = Hypothesis::Halpha1;
  rep.alpha1 = alpha1;
  rep.samples = samples;
  const int k = dim == 4 ? 3 : 2;
  const auto r = log_grid(1.0, r_max, samples);
  std::vector<double> ratios(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    ratios[i] = std::abs(nl.derivative(k, r[i])) * std::pow(r[i], k + 1 - alpha1);
  finish_growth_fit(rep, fit_max(r, ratios, r_max));
  return rep;
}

HypothesisReport check_Halpha2(const Nonlinearity& nl, double alpha1, double alpha2, double r_max,
                               std::size_t samples) {
  if (alpha1 - alpha2 > 0.5)
    throw DomainError("check_Halpha2: requires alpha1 - alpha2 <= 1/2");
  HypothesisReport rep;
  rep.hypothesis = Hypothesis::Halpha2;
  rep.alpha1 = alpha1;
  rep.alpha2 = alpha2;
  rep.samples = samples;

  if (alpha1 <= 1.5) {
    // V bounded from below.
    require_grid(r_max, samples, 1e-6);
    const auto r = grid_from_zero(r_max, samples);
    std::vector<double> neg_v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) neg_v[i] = -nl.V(r[i]);
    const auto fit = fit_max(r, neg_v, r_max);
    rep.V_min = -fit.full;
    if (!std::isfinite(fit.full)) {
      rep.passed = false;
      rep.max_violation = std::numeric_limits<double>::infinity();
      return rep;
    }
    const double lower_min = -fit.lower;
    const double allowed = lower_min - 0.05 * std::max(std::abs(lower_min), 1.0);
    rep.max_violation = allowed - *rep.V_min;
    rep.passed = rep.max_violation <= 0.0;
    return rep;
  }

  require_grid(r_max, samples, nl.rho0());
  const auto r = log_grid(nl.rho0(), r_max, samples);
  // Smallest grid point above rho0 beyond which V stays positive.
  std::size_t start = r.size();
  for (std::size_t i = r.size(); i-- > 0;) {
    if (!(r[i] > nl.rho0()) || !(nl.V(r[i]) > 0.0)) break;
    start = i;
  }
  if (start == r.size()) {
    rep.passed = false;
    rep.fitted_C0 = std::numeric_limits<double>::infinity();
    rep.max_violation = std::numeric_limits<double>::infinity();
    return rep;
  }
  rep.A = r[start];
  std::vector<double> tail(r.begin() + static_cast<std::ptrdiff_t>(start), r.end());
  std::vector<double> ratios(tail.size());
  for (std::size_t i = 0; i < tail.size(); ++i) ratios[i] = std::pow(tail[i], alpha2) / nl.V(tail[i]);
  finish_growth_fit(rep, fit_max(tail, ratios, r_max));
  return rep;
}

HypothesisReport check_ff01(const Nonlinearity& nl, double alpha1, std::size_t samples,
                            double r_max) {
  require_grid(r_max, samples, 1e-6);
  HypothesisReport rep;
  rep.hypothesis = Hypothesis::ff01;
  rep.alpha1 = alpha1;
  rep.samples = samples;
  const auto r = grid_from_zero(r_max, samples);
  std::vector<double> ratios(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    double best = 0.0;
    for (int k = 1; k <= 2; ++k) {
      const double expo = std::max(0.0, alpha1 - (2.0 * k + 1.0) / 2.0);
      const double v = std::sqrt(r[i]) * std::abs(nl.derivative(k, r[i])) / (1.0 + std::pow(r[i], expo));
      best = std::max(best, v);
    }
    ratios[i] = best;
  }
  finish_growth_fit(rep, fit_max(r, ratios, r_max));
  return rep;
}

std::set<int> max_admissible_dimension(double alpha1) {
  if (!(alpha1 >= 1.0)) throw DomainError("max_admissible_dimension: alpha1 must be >= 1");
  std::set<int> dims{2};
  if (alpha1 < 3.0) dims.insert(3);
  if (alpha1 < 2.0) dims.insert(4);
  return dims;
}

}  // namespace gpf
