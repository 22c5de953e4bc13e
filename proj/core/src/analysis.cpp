#include "entlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "entlab/parallel.hpp"

namespace entlab {

namespace {

// Vertex of the parabola through three points with general spacing.
// Falls back to the middle point when the data is locally flat.
PeakEstimate parabolic_peak(double x0, double y0, double x1, double y1,
                            double x2, double y2, double uncertainty) {
  const double d01 = x1 - x0;
  const double d12 = x1 - x2;
  const double num = d01 * d01 * (y1 - y2) - d12 * d12 * (y1 - y0);
  const double den = d01 * (y1 - y2) - d12 * (y1 - y0);
  if (std::abs(den) < 1e-300) {
    return {x1, y1, uncertainty};
  }
  double xs = x1 - 0.5 * num / den;
  xs = std::clamp(xs, std::min(x0, x2), std::max(x0, x2));
  // Lagrange evaluation of the interpolating quadratic at xs
  const double l0 = (xs - x1) * (xs - x2) / ((x0 - x1) * (x0 - x2));
  const double l1 = (xs - x0) * (xs - x2) / ((x1 - x0) * (x1 - x2));
  const double l2 = (xs - x0) * (xs - x1) / ((x2 - x0) * (x2 - x1));
  return {xs, y0 * l0 + y1 * l1 + y2 * l2, uncertainty};
}

PeakEstimate locate_peak(const std::vector<GridPoint>& points,
                         double GridPoint::* field) {
  std::size_t imax = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].*field > points[imax].*field) imax = i;
  }
  if (imax == 0 || imax + 1 == points.size()) {
    // boundary maximum: no bracketing triple
    const double step =
        points.size() > 1
            ? std::abs(points[std::min(imax + 1, points.size() - 1)].g -
                       points[imax > 0 ? imax - 1 : imax].g)
            : 0.0;
    return {points[imax].g, points[imax].*field, 0.5 * step};
  }
  const auto& p0 = points[imax - 1];
  const auto& p1 = points[imax];
  const auto& p2 = points[imax + 1];
  const double local_step = std::min(p1.g - p0.g, p2.g - p1.g);
  return parabolic_peak(p0.g, p0.*field, p1.g, p1.*field, p2.g, p2.*field,
                        0.5 * local_step);
}

// Quadratic interpolation of `field` at g, from the three grid points
// closest to g.
double interpolate_at(const std::vector<GridPoint>& points, double g,
                      double GridPoint::* field) {
  if (points.size() < 3) return points.empty() ? 0.0 : points.front().*field;
  std::size_t nearest = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (std::abs(points[i].g - g) < std::abs(points[nearest].g - g)) {
      nearest = i;
    }
  }
  const std::size_t mid =
      std::clamp<std::size_t>(nearest, 1, points.size() - 2);
  const auto& p0 = points[mid - 1];
  const auto& p1 = points[mid];
  const auto& p2 = points[mid + 1];
  const double l0 = (g - p1.g) * (g - p2.g) / ((p0.g - p1.g) * (p0.g - p2.g));
  const double l1 = (g - p0.g) * (g - p2.g) / ((p1.g - p0.g) * (p1.g - p2.g));
  const double l2 = (g - p0.g) * (g - p1.g) / ((p2.g - p0.g) * (p2.g - p1.g));
  return p0.*field * l0 + p1.*field * l1 + p2.*field * l2;
}

GridPoint evaluate_grid_point(int n, double epsilon, double g,
                              SolverChoice solver,
                              const PartitionFamily& family) {
  const IsingParameters params{n, g, epsilon};
  const GroundStateResult ground = solve_ground(params, solver);
  double sum = 0.0, sumsq = 0.0;
  const std::uint64_t count = family.size();
  for (std::uint64_t i = 0; i < count; ++i) {
    const double nab = 1.0 / purity(ground.state, family.at(i));
    sum += nab;
    sumsq += nab * nab;
  }
  const double mu = sum / static_cast<double>(count);
  const double var = std::max(0.0, sumsq / static_cast<double>(count) - mu * mu);
  return {g, mu, std::sqrt(var)};
}

}  // namespace

DistributionSummary summarize(const std::vector<EntanglementRecord>& records,
                              int bins) {
  if (records.empty()) throw std::invalid_argument("empty record list");
  if (bins < 1) throw std::invalid_argument("bins must be >= 1");

  DistributionSummary s{};
  s.count = records.size();
  double sum = 0.0;
  s.min = std::numeric_limits<double>::infinity();
  s.max = -std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    sum += r.participation;
    s.min = std::min(s.min, r.participation);
    s.max = std::max(s.max, r.participation);
  }
  s.mu = sum / static_cast<double>(s.count);
  double sq = 0.0;
  for (const auto& r : records) {
    const double d = r.participation - s.mu;
    sq += d * d;
  }
  s.sigma = std::sqrt(sq / static_cast<double>(s.count));

  const double span = s.max - s.min;
  if (span <= 0.0) {
    s.histogram.push_back({s.min, s.max, s.count});
    return s;
  }
  s.histogram.assign(static_cast<std::size_t>(bins), HistogramBin{});
  const double width = span / bins;
  for (int b = 0; b < bins; ++b) {
    s.histogram[b].low = s.min + b * width;
    s.histogram[b].high = b + 1 == bins ? s.max : s.min + (b + 1) * width;
  }
  for (const auto& r : records) {
    auto b = static_cast<std::size_t>((r.participation - s.min) / width);
    if (b >= static_cast<std::size_t>(bins)) b = bins - 1;
    ++s.histogram[b].count;
  }
  return s;
}

DistributionResult distribution(const PureState& state,
                                const PartitionFamily& family, int bins,
                                bool with_entropy, int threads) {
  if (family.n() != state.n()) {
    throw std::invalid_argument("family and state site counts differ");
  }
  const std::uint64_t count = family.size();
  if (count == 0) throw std::invalid_argument("empty partition family");

  auto records = parallel_map<EntanglementRecord>(
      count, threads, [&](std::size_t i) {
        return make_record(state, family.at(i), with_entropy);
      });
  return DistributionResult{summarize(records, bins), std::move(records)};
}

std::vector<double> make_g_grid(double g_min, double g_max, double step) {
  if (step <= 0.0 || g_max < g_min) {
    throw std::invalid_argument("grid needs step > 0 and g_max >= g_min");
  }
  const auto count = static_cast<std::size_t>((g_max - g_min) / step + 0.5);
  std::vector<double> grid;
  grid.reserve(count + 1);
  for (std::size_t i = 0; i <= count; ++i) grid.push_back(g_min + i * step);
  return grid;
}

SweepResult sweep_g(int n, double epsilon, const std::vector<double>& g_grid,
                    const SweepOptions& opts) {
  if (g_grid.empty()) throw std::invalid_argument("empty g grid");
  for (std::size_t i = 0; i + 1 < g_grid.size(); ++i) {
    if (g_grid[i + 1] <= g_grid[i]) {
      throw std::invalid_argument("g grid must be strictly increasing");
    }
  }
  const PartitionFamily family = PartitionFamily::balanced(n);

  auto evaluate_all = [&](const std::vector<double>& gs) {
    return parallel_map<GridPoint>(gs.size(), opts.threads, [&](std::size_t i) {
      return evaluate_grid_point(n, epsilon, gs[i], opts.solver, family);
    });
  };

  SweepResult result;
  result.n = n;
  result.epsilon = epsilon;
  result.points = evaluate_all(g_grid);

  if (opts.refine) {
    const PeakEstimate mu0 = locate_peak(result.points, &GridPoint::mu);
    const PeakEstimate sg0 = locate_peak(result.points, &GridPoint::sigma);
    std::set<long long> wanted;  // refinement grid as integer multiples
    auto add_window = [&](double center) {
      const long long lo = std::llround(
          std::ceil((center - opts.refine_window) / opts.refine_step));
      const long long hi = std::llround(
          std::floor((center + opts.refine_window) / opts.refine_step));
      for (long long q = lo; q <= hi; ++q) wanted.insert(q);
    };
    add_window(mu0.location);
    add_window(sg0.location);

    std::vector<double> extra;
    for (long long q : wanted) {
      const double g = q * opts.refine_step;
      if (g < g_grid.front() || g > g_grid.back()) continue;
      bool present = false;
      for (const auto& p : result.points) {
        if (std::abs(p.g - g) < 1e-12) { present = true; break; }
      }
      if (!present) extra.push_back(g);
    }
    auto refined = evaluate_all(extra);
    result.points.insert(result.points.end(), refined.begin(), refined.end());
    std::sort(result.points.begin(), result.points.end(),
              [](const GridPoint& a, const GridPoint& b) { return a.g < b.g; });
  }

  result.mu_peak = locate_peak(result.points, &GridPoint::mu);
  result.sigma_peak = locate_peak(result.points, &GridPoint::sigma);
  result.sigma_at_mu_max =
      interpolate_at(result.points, result.mu_peak.location, &GridPoint::sigma);
  return result;
}

ScalingPoint extract_scaling_point(const SweepResult& sweep) {
  return ScalingPoint{sweep.n,
                      sweep.mu_peak.location,
                      sweep.mu_peak.uncertainty,
                      sweep.sigma_peak.location,
                      sweep.sigma_peak.uncertainty,
                      sweep.mu_peak.value,
                      sweep.sigma_peak.value,
                      sweep.sigma_at_mu_max,
                      sweep.sigma_peak.location < sweep.mu_peak.location};
}

std::vector<ScalingPoint> scaling_study(const std::vector<int>& n_list,
                                        double epsilon,
                                        const std::vector<double>& g_grid,
                                        const SweepOptions& opts) {
  std::vector<ScalingPoint> points;
  points.reserve(n_list.size());
  for (int n : n_list) {
    points.push_back(extract_scaling_point(sweep_g(n, epsilon, g_grid, opts)));
  }
  return points;
}

double composite_sigma_rel(const FitResult& mu_fit, const FitResult& sigma_fit,
                           double n) {
  return sigma_fit.evaluate(n) / mu_fit.evaluate(n);
}

double composite_large_n_exponent(const FitResult& mu_fit,
                                  const FitResult& sigma_fit) {
  const double n1 = 1e8, n2 = 1e9;
  const double f1 = composite_sigma_rel(mu_fit, sigma_fit, n1);
  const double f2 = composite_sigma_rel(mu_fit, sigma_fit, n2);
  if (f1 <= 0.0 || f2 <= 0.0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return (std::log(f2) - std::log(f1)) / (std::log(n2) - std::log(n1));
}

SigmaRelReport sigma_rel_report(const std::vector<ScalingPoint>& points) {
  SigmaRelReport report;
  std::vector<double> mu_max, sigma_at;
  for (const auto& p : points) {
    report.n.push_back(static_cast<double>(p.n));
    mu_max.push_back(p.mu_max);
    sigma_at.push_back(p.sigma_at_mu_max);
    report.sigma_rel.push_back(p.mu_max > 0.0 ? p.sigma_at_mu_max / p.mu_max
                                              : 0.0);
  }
  report.mu_fit = fit_quadratic_shifted(report.n, mu_max);
  report.sigma_fit = fit_sqrt_shifted(report.n, sigma_at);
  report.composite_exponent =
      composite_large_n_exponent(report.mu_fit, report.sigma_fit);
  return report;
}

std::vector<std::pair<int, double>> block_entropy_profile(int n, double g,
                                                          double epsilon,
                                                          int max_len,
                                                          SolverChoice solver) {
  const IsingParameters params{n, g, epsilon};
  const GroundStateResult ground = solve_ground(params, solver);
  const PartitionFamily family = PartitionFamily::contiguous(n, max_len);

  std::vector<double> sums(static_cast<std::size_t>(max_len) + 1, 0.0);
  std::vector<int> counts(static_cast<std::size_t>(max_len) + 1, 0);
  for (std::uint64_t i = 0; i < family.size(); ++i) {
    const int len = family.block_length(i);
    sums[len] += entropy(ground.state, family.at(i));
    ++counts[len];
  }
  std::vector<std::pair<int, double>> profile;
  for (int len = 1; len <= max_len; ++len) {
    profile.emplace_back(len, sums[len] / counts[len]);
  }
  return profile;
}

BaselineSummary random_baseline(int n, int samples, std::uint64_t seed,
                                int threads) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const PartitionFamily family = PartitionFamily::balanced(n);

  struct MuSigma { double mu, sigma; };
  auto stats = parallel_map<MuSigma>(
      static_cast<std::size_t>(samples), threads, [&](std::size_t i) {
        const PureState state =
            haar_random_state(n, seed + 1000003ull * static_cast<std::uint64_t>(i));
        double sum = 0.0, sumsq = 0.0;
        for (std::uint64_t j = 0; j < family.size(); ++j) {
          const double nab = 1.0 / purity(state, family.at(j));
          sum += nab;
          sumsq += nab * nab;
        }
        const double mu = sum / static_cast<double>(family.size());
        const double var =
            std::max(0.0, sumsq / static_cast<double>(family.size()) - mu * mu);
        return MuSigma{mu, std::sqrt(var)};
      });

  BaselineSummary out{n, samples, seed, 0.0, 0.0, 0.0, 0.0};
  for (const auto& s : stats) {
    out.mean_mu += s.mu;
    out.mean_sigma += s.sigma;
  }
  out.mean_mu /= samples;
  out.mean_sigma /= samples;
  for (const auto& s : stats) {
    out.std_mu += (s.mu - out.mean_mu) * (s.mu - out.mean_mu);
    out.std_sigma += (s.sigma - out.mean_sigma) * (s.sigma - out.mean_sigma);
  }
  out.std_mu = std::sqrt(out.std_mu / samples);
  out.std_sigma = std::sqrt(out.std_sigma / samples);
  return out;
}

}  // namespace entlab
