#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace gpf {

enum class NonlinearityKind { GrossPitaevskii, CubicQuintic, UserPolynomial };

std::string to_string(NonlinearityKind kind);

/// Defocusing nonlinearity f(r) with background intensity rho0.
///
/// Every built-in kind is a polynomial in r. The coefficients are stored in
/// the shifted variable s = r - rho0, which makes V(r) = \int_r^{rho0} f(s) ds
/// an exact polynomial in s that vanishes identically at r = rho0 and keeps
/// V free of cancellation for densities close to the background.
class Nonlinearity {
 public:
  /// `coefficients[k]` multiplies r^k.
  static Nonlinearity user_polynomial(double rho0, std::vector<double> coefficients);

  NonlinearityKind kind() const noexcept { return kind_; }
  double rho0() const noexcept { return rho0_; }
  std::optional<double> alpha1_hint() const noexcept { return alpha1_hint_; }
  int degree() const noexcept { return static_cast<int>(shifted_.size()) - 1; }

  /// Coefficients in powers of r (as supplied / expanded).
  const std::vector<double>& coefficients() const noexcept { return coefficients_; }
  /// Extra parameter of the cubic-quintic family (0 otherwise).
  double cq_parameter() const noexcept { return cq_a_; }

  double f(double r) const;
  double fprime(double r) const;
  double fsecond(double r) const;
  /// k-th derivative, k >= 0.
  double derivative(int k, double r) const;
  double V(double r) const;

 private:
  friend Nonlinearity make_gross_pitaevskii(double);
  friend Nonlinearity make_cubic_quintic(double, double);
  Nonlinearity(NonlinearityKind kind, double rho0, std::vector<double> coefficients);

  NonlinearityKind kind_;
  double rho0_;
  double cq_a_ = 0.0;
  std::optional<double> alpha1_hint_;
  std::vector<double> coefficients_;  // powers of r
  std::vector<double> shifted_;       // powers of (r - rho0)
};

/// f(r) = rho0 - r; V(r) = (rho0 - r)^2 / 2.
Nonlinearity make_gross_pitaevskii(double rho0);
/// f(r) = (r - rho0)(2a + rho0 - 3r), 0 < a < rho0.
Nonlinearity make_cubic_quintic(double rho0, double a);

enum class Hypothesis { Hf, Halpha1, Halpha1prime, Halpha2, ff01 };

std::string to_string(Hypothesis h);

struct HypothesisReport {
  Hypothesis hypothesis = Hypothesis::Hf;
  bool passed = false;
  double fitted_C0 = 0.0;
  double alpha1 = 0.0;
  std::optional<double> alpha2;
  std::optional<double> A;
  /// Infimum of V on the grid (lower-boundedness branch of H_alpha2).
  std::optional<double> V_min;
  std::size_t samples = 0;
  double max_violation = 0.0;
};

/// Log-spaced grid of `samples` points on [lo, hi].
std::vector<double> log_grid(double lo, double hi, std::size_t samples);

HypothesisReport check_Hf(const Nonlinearity& nl, double tol = 1e-12);

/// Growth-bound certification |f^(k)(r)| <= C0 r^(alpha1-1-k), k = 1, 2,
/// on a log grid over [1, r_max]. The fit is stable when the maximum over the
/// whole grid is within 1.05x of the maximum with the top decade removed.
HypothesisReport check_Halpha1prime(const Nonlinearity& nl, double alpha1, double r_max = 1e6,
                                    std::size_t samples = 400);

/// The original growth condition: |f''(r)| <= C0 r^(alpha1-3) for n <= 3,
/// |f'''(r)| <= C0 r^(alpha1-4) for n = 4.
HypothesisReport check_Halpha1(const Nonlinearity& nl, double alpha1, int dim, double r_max = 1e6,
                               std::size_t samples = 400);

HypothesisReport check_Halpha2(const Nonlinearity& nl, double alpha1, double alpha2,
                               double r_max = 1e6, std::size_t samples = 400);

/// r^(1/2)|f^(k)(r)| <= C (1 + r^max(0, alpha1-(2k+1)/2)), k = 1, 2, for r >= 0.
HypothesisReport check_ff01(const Nonlinearity& nl, double alpha1, std::size_t samples = 400,
                            double r_max = 1e6);

/// Largest violation of the H_alpha1' bound with a caller-supplied constant on
/// the same grid check_Halpha1prime uses (<= 0 means the constant certifies it).
double halpha1prime_violation(const Nonlinearity& nl, double alpha1, double C0, double r_max,
                              std::size_t samples);

/// Dimensions n in {2, 3, 4} for which alpha1 satisfies alpha1 < alpha1*(n).
std::set<int> max_admissible_dimension(double alpha1);

}  // namespace gpf
