#pragma once

#include <string>
#include <vector>

namespace entlab {

struct FitResult {
  std::string model;
  std::vector<double> coefficients;
  double rss;  // residual sum of squares
  std::vector<double> predictions;
  bool converged;
  std::string message;

  double evaluate(double x) const;
};

// g(n) = 0.5 + a / (n^2 + b n + c), coefficients {a, b, c}.
// Nonlinear least squares: Gauss-Newton with numerical Jacobian and step
// halving, multi-started from a coarse (b, c) grid with a solved linearly
// per start. Converged when the relative step drops below 1e-10.
FitResult fit_rational_shift(const std::vector<double>& n,
                             const std::vector<double>& y);

// y(n) = 2 + a (n-6) + b (n-6)^2, coefficients {a, b}; closed-form least
// squares on the transformed regressors. Requires n > 6.
FitResult fit_quadratic_shifted(const std::vector<double>& n,
                                const std::vector<double>& y);

// y(n) = c + d sqrt(n-6), coefficients {c, d}; closed form. Requires n > 6.
FitResult fit_sqrt_shifted(const std::vector<double>& n,
                           const std::vector<double>& y);

}  // namespace entlab
