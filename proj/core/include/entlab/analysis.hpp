#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "entlab/fit.hpp"
#include "entlab/ground.hpp"
#include "entlab/measures.hpp"
#include "entlab/partitions.hpp"
#include "entlab/state.hpp"

namespace entlab {

struct HistogramBin {
  double low;
  double high;
  std::uint64_t count;
};

/// Statistics of N_AB over a partition family. sigma is the population
/// standard deviation: the family is the whole population, not a sample.
struct DistributionSummary {
  std::uint64_t count;
  double mu;
  double sigma;
  double min;
  double max;
  std::vector<HistogramBin> histogram;
};

struct DistributionResult {
  DistributionSummary summary;
  std::vector<EntanglementRecord> records;
};

DistributionSummary summarize(const std::vector<EntanglementRecord>& records,
                              int bins);

DistributionResult distribution(const PureState& state,
                                const PartitionFamily& family, int bins = 50,
                                bool with_entropy = false, int threads = 1);

struct GridPoint {
  double g;
  double mu;
  double sigma;
};

struct PeakEstimate {
  double location;     // interpolated g of the maximum
  double value;        // interpolated peak height
  double uncertainty;  // half the local grid step
};

struct SweepOptions {
  SolverChoice solver = SolverChoice::automatic;
  bool refine = true;          // 0.002-step pass around each coarse maximum
  double refine_step = 0.002;
  double refine_window = 0.03;
  int threads = 1;
};

struct SweepResult {
  int n;
  double epsilon;
  std::vector<GridPoint> points;  // coarse + refinement, ascending in g
  PeakEstimate mu_peak;
  PeakEstimate sigma_peak;
  double sigma_at_mu_max;  // sigma interpolated at g(mu_max)
};

std::vector<double> make_g_grid(double g_min, double g_max, double step);

// For each g: ground state -> N_AB distribution over balanced cuts.
// Maxima located by three-point parabolic interpolation around the
// discrete argmax.
SweepResult sweep_g(int n, double epsilon, const std::vector<double>& g_grid,
                    const SweepOptions& opts = {});

struct ScalingPoint {
  int n;
  double g_mu_max;
  double g_mu_uncertainty;
  double g_sigma_max;
  double g_sigma_uncertainty;
  double mu_max;
  double sigma_max;
  double sigma_at_mu_max;
  bool sigma_before_mu;  // g(sigma_max) < g(mu_max)
};

ScalingPoint extract_scaling_point(const SweepResult& sweep);

std::vector<ScalingPoint> scaling_study(const std::vector<int>& n_list,
                                        double epsilon,
                                        const std::vector<double>& g_grid,
                                        const SweepOptions& opts = {});

struct SigmaRelReport {
  std::vector<double> n;
  std::vector<double> sigma_rel;  // sigma(mu_max) / mu_max per n
  FitResult mu_fit;               // quadratic_shifted on mu_max(n)
  FitResult sigma_fit;            // sqrt_shifted on sigma(mu_max)(n)
  double composite_exponent;      // large-n log-log slope of the composite
};

// Composite relative width built from the two fitted curves.
double composite_sigma_rel(const FitResult& mu_fit, const FitResult& sigma_fit,
                           double n);
double composite_large_n_exponent(const FitResult& mu_fit,
                                  const FitResult& sigma_fit);

SigmaRelReport sigma_rel_report(const std::vector<ScalingPoint>& points);

// Ground state once, then von Neumann entropy of every contiguous block,
// position-averaged per block length.
std::vector<std::pair<int, double>> block_entropy_profile(
    int n, double g, double epsilon, int max_len,
    SolverChoice solver = SolverChoice::automatic);

/// Haar-ensemble statistics of the balanced-cut participation number:
/// mean and spread, over samples, of the per-state mu and sigma.
struct BaselineSummary {
  int n;
  int samples;
  std::uint64_t seed;
  double mean_mu;
  double std_mu;
  double mean_sigma;
  double std_sigma;
};

BaselineSummary random_baseline(int n, int samples, std::uint64_t seed,
                                int threads = 1);

}  // namespace entlab
