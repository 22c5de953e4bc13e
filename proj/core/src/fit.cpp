#include "entlab/fit.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace entlab {

namespace {

double rational_shift(double n, double a, double b, double c) {
  return 0.5 + a / (n * n + b * n + c);
}

double rss_of(const std::vector<double>& n, const std::vector<double>& y,
              double a, double b, double c) {
  double rss = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double r = y[i] - rational_shift(n[i], a, b, c);
    rss += r * r;
  }
  return rss;
}

// For fixed (b, c) the model is linear in a.
double best_a(const std::vector<double>& n, const std::vector<double>& y,
              double b, double c) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double basis = 1.0 / (n[i] * n[i] + b * n[i] + c);
    num += (y[i] - 0.5) * basis;
    den += basis * basis;
  }
  return den > 0.0 ? num / den : 0.0;
}

bool denominator_safe(const std::vector<double>& n, double b, double c) {
  for (double x : n) {
    if (std::abs(x * x + b * x + c) < 1e-3) return false;
  }
  return true;
}

FitResult finish(const std::string& model, std::vector<double> coeffs,
                 const std::vector<double>& n, const std::vector<double>& y,
                 bool converged, std::string message) {
  FitResult res{model, std::move(coeffs), 0.0, {}, converged,
                std::move(message)};
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double p = res.evaluate(n[i]);
    res.predictions.push_back(p);
    res.rss += (y[i] - p) * (y[i] - p);
  }
  return res;
}

void check_points(const std::vector<double>& n, const std::vector<double>& y,
                  std::size_t min_points, bool shifted) {
  if (n.size() != y.size()) {
    throw std::invalid_argument("x and y point counts differ");
  }
  if (n.size() < min_points) {
    throw std::invalid_argument("too few points for the model");
  }
  if (shifted) {
    for (double x : n) {
      if (x <= 6.0) {
        throw std::invalid_argument("shifted models need n > 6");
      }
    }
  }
}

}  // namespace

double FitResult::evaluate(double x) const {
  if (model == "rational_shift") {
    return rational_shift(x, coefficients[0], coefficients[1],
                          coefficients[2]);
  }
  if (model == "quadratic_shifted") {
    const double t = x - 6.0;
    return 2.0 + coefficients[0] * t + coefficients[1] * t * t;
  }
  if (model == "sqrt_shifted") {
    return coefficients[0] + coefficients[1] * std::sqrt(x - 6.0);
  }
  throw std::logic_error("unknown fit model " + model);
}

FitResult fit_rational_shift(const std::vector<double>& n,
                             const std::vector<double>& y) {
  check_points(n, y, 3, false);

  double best[3] = {0.0, 0.0, 0.0};
  double best_rss = std::numeric_limits<double>::infinity();
  bool any_converged = false;

  for (double b0 = -20.0; b0 <= 20.0; b0 += 4.0) {
    for (double c0 = -60.0; c0 <= 60.0; c0 += 10.0) {
      if (!denominator_safe(n, b0, c0)) continue;
      double a = best_a(n, y, b0, c0), b = b0, c = c0;
      double rss = rss_of(n, y, a, b, c);
      bool converged = false;

      for (int iter = 0; iter < 200; ++iter) {
        // Gauss-Newton step with forward-difference Jacobian
        Eigen::MatrixXd jac(n.size(), 3);
        Eigen::VectorXd resid(n.size());
        const double params[3] = {a, b, c};
        for (std::size_t i = 0; i < n.size(); ++i) {
          resid[static_cast<Eigen::Index>(i)] =
              y[i] - rational_shift(n[i], a, b, c);
          for (int p = 0; p < 3; ++p) {
            double bumped[3] = {params[0], params[1], params[2]};
            const double h = 1e-7 * std::max(1.0, std::abs(params[p]));
            bumped[p] += h;
            jac(static_cast<Eigen::Index>(i), p) =
                (rational_shift(n[i], bumped[0], bumped[1], bumped[2]) -
                 rational_shift(n[i], a, b, c)) /
                h;
          }
        }
        Eigen::Vector3d step =
            jac.colPivHouseholderQr().solve(resid);
        if (!step.allFinite()) break;

        // halve until the step improves (or give up)
        double scale = 1.0;
        double na = a, nb = b, nc = c, nrss = rss;
        bool improved = false;
        for (int halving = 0; halving < 30; ++halving) {
          const double ta = a + scale * step[0];
          const double tb = b + scale * step[1];
          const double tc = c + scale * step[2];
          if (denominator_safe(n, tb, tc)) {
            const double trss = rss_of(n, y, ta, tb, tc);
            if (trss < rss) {
              na = ta; nb = tb; nc = tc; nrss = trss;
              improved = true;
              break;
            }
          }
          scale *= 0.5;
        }
        if (!improved) {
          // at a minimum: no direction improves and the proposed step is
          // negligible, or the residual is already at machine level
          const double rel_full =
              step.norm() / std::max(1.0, std::sqrt(a * a + b * b + c * c));
          converged = rel_full < 1e-8 || rss < 1e-24;
          break;
        }

        const double rel_step =
            scale * step.norm() /
            std::max(1.0, std::sqrt(a * a + b * b + c * c));
        a = na; b = nb; c = nc; rss = nrss;
        if (rel_step < 1e-10) {
          converged = true;
          break;
        }
      }

      if (rss < best_rss) {
        best_rss = rss;
        best[0] = a; best[1] = b; best[2] = c;
        any_converged = converged;
      }
    }
  }

  if (!std::isfinite(best_rss)) {
    return finish("rational_shift", {0.0, 0.0, 0.0}, n, y, false,
                  "no admissible start point");
  }
  return finish("rational_shift", {best[0], best[1], best[2]}, n, y,
                any_converged,
                any_converged ? "" : "best start did not fully converge");
}

FitResult fit_quadratic_shifted(const std::vector<double>& n,
                                const std::vector<double>& y) {
  check_points(n, y, 2, true);
  Eigen::MatrixXd design(n.size(), 2);
  Eigen::VectorXd rhs(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double t = n[i] - 6.0;
    design(static_cast<Eigen::Index>(i), 0) = t;
    design(static_cast<Eigen::Index>(i), 1) = t * t;
    rhs[static_cast<Eigen::Index>(i)] = y[i] - 2.0;
  }
  const auto qr = design.colPivHouseholderQr();
  if (qr.rank() < 2) {
    return finish("quadratic_shifted", {0.0, 0.0}, n, y, false,
                  "rank-deficient design");
  }
  const Eigen::Vector2d sol = qr.solve(rhs);
  return finish("quadratic_shifted", {sol[0], sol[1]}, n, y, true, "");
}

FitResult fit_sqrt_shifted(const std::vector<double>& n,
                           const std::vector<double>& y) {
  check_points(n, y, 2, true);
  Eigen::MatrixXd design(n.size(), 2);
  Eigen::VectorXd rhs(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    design(static_cast<Eigen::Index>(i), 0) = 1.0;
    design(static_cast<Eigen::Index>(i), 1) = std::sqrt(n[i] - 6.0);
    rhs[static_cast<Eigen::Index>(i)] = y[i];
  }
  const auto qr = design.colPivHouseholderQr();
  if (qr.rank() < 2) {
    return finish("sqrt_shifted", {0.0, 0.0}, n, y, false,
                  "rank-deficient design");
  }
  const Eigen::Vector2d sol = qr.solve(rhs);
  return finish("sqrt_shifted", {sol[0], sol[1]}, n, y, true, "");
}

}  // namespace entlab
