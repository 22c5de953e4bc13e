// entlab command-line driver: ground states of the transverse-field Ising
// chain, participation-number distributions over bipartition families,
// coupling sweeps, finite-size scaling fits, Haar baselines, and a
// self-check suite. CSV output is round-trip exact (17 significant digits)
// and byte-stable for a fixed config and seed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entlab/analysis.hpp"
#include "entlab/ground.hpp"
#include "entlab/ising.hpp"
#include "entlab/measures.hpp"
#include "entlab/parallel.hpp"
#include "entlab/partitions.hpp"
#include "entlab/state.hpp"
#include "entlab/state_io.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitVerify = 4;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

entlab::SolverChoice parse_solver(const std::string& s) {
  if (s == "dense") return entlab::SolverChoice::dense;
  if (s == "lanczos") return entlab::SolverChoice::lanczos;
  if (s == "auto") return entlab::SolverChoice::automatic;
  throw ConfigError("unknown solver '" + s + "' (use dense|lanczos|auto)");
}

std::string mask_to_binary(std::uint64_t mask, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((mask >> i) & 1u) s[static_cast<std::size_t>(n - 1 - i)] = '1';
  }
  return s;
}

std::uint64_t binary_to_mask(const std::string& line) {
  std::uint64_t mask = 0;
  for (char c : line) {
    if (c != '0' && c != '1') {
      throw ConfigError("partition file lines must be binary masks, got '" +
                        line + "'");
    }
    mask = (mask << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return mask;
}

entlab::PartitionFamily parse_partitions(const std::string& spec, int n) {
  if (spec == "balanced") return entlab::PartitionFamily::balanced(n);
  if (spec.rfind("contiguous:", 0) == 0) {
    const int len = std::stoi(spec.substr(11));
    return entlab::PartitionFamily::contiguous(n, len);
  }
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw ConfigError("cannot open partition file " + spec.substr(5));
    std::vector<std::uint64_t> masks;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) masks.push_back(binary_to_mask(line));
    }
    return entlab::PartitionFamily::from_masks(n, std::move(masks));
  }
  throw ConfigError("unknown partition spec '" + spec +
                    "' (use balanced|contiguous:<L>|file:<path>)");
}

entlab::PureState resolve_state(const std::string& spec, int n, double g,
                                double eps, entlab::SolverChoice solver) {
  if (spec == "ground" || spec.empty()) {
    return entlab::solve_ground({n, g, eps}, solver).state;
  }
  if (spec == "ghz") return entlab::ghz_state(n);
  if (spec == "plus") return entlab::product_plus_state(n);
  if (spec.rfind("file:", 0) == 0) {
    return entlab::read_state_file(spec.substr(5));
  }
  throw ConfigError("unknown state spec '" + spec +
                    "' (use ground|ghz|plus|file:<path>)");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

void emit_json(const json& doc, const std::string& path) {
  if (path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    write_text(path, doc.dump(2) + "\n");
  }
}

using entlab::format_double;

std::string sweep_csv(const entlab::SweepResult& sweep) {
  std::string csv = "g,mu,sigma\n";
  for (const auto& p : sweep.points) {
    csv += format_double(p.g) + "," + format_double(p.mu) + "," +
           format_double(p.sigma) + "\n";
  }
  return csv;
}

json sweep_maxima_json(const entlab::SweepResult& sweep) {
  return json{
      {"g_mu_max", sweep.mu_peak.location},
      {"g_mu_max_uncertainty", sweep.mu_peak.uncertainty},
      {"mu_max", sweep.mu_peak.value},
      {"g_sigma_max", sweep.sigma_peak.location},
      {"g_sigma_max_uncertainty", sweep.sigma_peak.uncertainty},
      {"sigma_max", sweep.sigma_peak.value},
      {"sigma_at_mu_max", sweep.sigma_at_mu_max},
  };
}

json fit_json(const entlab::FitResult& fit) {
  return json{{"model", fit.model},
              {"coefficients", fit.coefficients},
              {"rss", fit.rss},
              {"predictions", fit.predictions},
              {"converged", fit.converged},
              {"message", fit.message}};
}

// ---------------------------------------------------------------------------
// subcommand state

struct GroundArgs {
  int n = 10;
  double g = 0.5;
  double eps = 0.0;
  std::string solver = "auto";
  bool amplitudes = false;
  std::string json_out;
};

struct DistArgs {
  int n = 10;
  double g = 0.5;
  double eps = 0.0;
  std::string state = "ground";
  std::string state_file;
  std::string partitions = "balanced";
  std::string solver = "auto";
  int bins = 50;
  bool with_entropy = false;
  int threads = 0;
  std::string out = "dist.csv";
  std::string json_out;
};

struct SweepArgs {
  int n = 10;
  double eps = 0.0;
  double g_min = 0.01;
  double g_max = 0.99;
  double g_step = 0.01;
  std::string solver = "auto";
  bool no_refine = false;
  int threads = 0;
  std::string out = "sweep.csv";
  std::string json_out;
};

struct ScalingArgs {
  std::vector<int> n_list{7, 8, 9, 10, 11};
  double eps = 0.0;
  double g_min = 0.01;
  double g_max = 0.99;
  double g_step = 0.01;
  std::string solver = "auto";
  int threads = 0;
  std::string out = "scaling";
  std::string json_out;
};

struct BaselineArgs {
  std::vector<int> n_list{8};
  int samples = 200;
  std::uint64_t seed = 42;
  int threads = 0;
  std::string out = "baseline.csv";
  std::string json_out;
};

struct BlocksArgs {
  int n = 12;
  double g = 0.5;
  double eps = 0.0;
  int max_len = 0;  // 0 -> n/2
  std::string solver = "auto";
  std::string out = "blocks.csv";
  std::string json_out;
};

struct VerifyArgs {
  std::uint64_t seed = 7;
  int cases = 100;
};

int resolve_threads(int flag_value) {
  return flag_value > 0 ? flag_value : entlab::default_thread_count();
}

int run_ground(const GroundArgs& a) {
  const entlab::IsingParameters params{a.n, a.g, a.eps};
  params.validate();
  const auto result = entlab::solve_ground(params, parse_solver(a.solver));
  json doc{{"format_version", 1},
           {"config",
            {{"command", "ground"},
             {"n", a.n},
             {"g", a.g},
             {"eps", a.eps},
             {"solver", a.solver}}},
           {"energy", result.energy},
           {"gap", result.gap.has_value() ? json(*result.gap) : json()},
           {"residual", result.residual},
           {"solver_used", result.solver},
           {"degenerate", result.near_degenerate()}};
  if (a.amplitudes) {
    if (a.n > 14) {
      std::cerr << "warning: emitting " << (1 << a.n) << " amplitudes\n";
    }
    json amps = json::array();
    for (const auto& z : result.state.amplitudes()) {
      amps.push_back(json::array({z.real(), z.imag()}));
    }
    doc["amplitudes"] = std::move(amps);
  }
  emit_json(doc, a.json_out);
  return kExitOk;
}

int run_dist(const DistArgs& a) {
  const std::string state_spec =
      a.state_file.empty() ? a.state : "file:" + a.state_file;
  entlab::PureState state =
      resolve_state(state_spec, a.n, a.g, a.eps, parse_solver(a.solver));
  const auto family = parse_partitions(a.partitions, state.n());
  const auto result = entlab::distribution(state, family, a.bins,
                                           a.with_entropy,
                                           resolve_threads(a.threads));

  std::string csv = a.with_entropy
                        ? "mask,n_A,purity,participation,n_AB,entropy\n"
                        : "mask,n_A,purity,participation,n_AB\n";
  for (const auto& rec : result.records) {
    csv += mask_to_binary(rec.part.mask_a(), rec.part.n()) + "," +
           std::to_string(rec.part.n_a()) + "," + format_double(rec.purity) +
           "," + format_double(rec.participation) + "," +
           format_double(rec.n_ab);
    if (a.with_entropy) csv += "," + format_double(*rec.entropy);
    csv += "\n";
  }
  write_text(a.out, csv);

  json hist = json::array();
  for (const auto& b : result.summary.histogram) {
    hist.push_back(json{{"low", b.low}, {"high", b.high}, {"count", b.count}});
  }
  emit_json(json{{"format_version", 1},
                 {"config",
                  {{"command", "dist"},
                   {"n", state.n()},
                   {"g", a.g},
                   {"eps", a.eps},
                   {"state", state_spec},
                   {"partitions", a.partitions},
                   {"bins", a.bins},
                   {"out", a.out}}},
                 {"count", result.summary.count},
                 {"mu", result.summary.mu},
                 {"sigma", result.summary.sigma},
                 {"min", result.summary.min},
                 {"max", result.summary.max},
                 {"histogram", hist}},
            a.json_out);
  return kExitOk;
}

entlab::SweepOptions sweep_options(const std::string& solver, bool no_refine,
                                   int threads) {
  entlab::SweepOptions opts;
  opts.solver = parse_solver(solver);
  opts.refine = !no_refine;
  opts.threads = resolve_threads(threads);
  return opts;
}

int run_sweep(const SweepArgs& a) {
  if (a.g_max > 0.99 + 1e-12) {
    throw ConfigError("sweep grids must stay within [0, 0.99]");
  }
  const auto grid = entlab::make_g_grid(a.g_min, a.g_max, a.g_step);
  const auto sweep = entlab::sweep_g(
      a.n, a.eps, grid, sweep_options(a.solver, a.no_refine, a.threads));
  write_text(a.out, sweep_csv(sweep));
  emit_json(json{{"format_version", 1},
                 {"config",
                  {{"command", "sweep"},
                   {"n", a.n},
                   {"eps", a.eps},
                   {"g_min", a.g_min},
                   {"g_max", a.g_max},
                   {"g_step", a.g_step},
                   {"solver", a.solver},
                   {"refine", !a.no_refine},
                   {"out", a.out}}},
                 {"maxima", sweep_maxima_json(sweep)}},
            a.json_out);
  return kExitOk;
}

int run_scaling(const ScalingArgs& a) {
  const auto grid = entlab::make_g_grid(a.g_min, a.g_max, a.g_step);
  const auto opts = sweep_options(a.solver, false, a.threads);

  std::vector<entlab::ScalingPoint> points;
  for (int n : a.n_list) {
    const auto sweep = entlab::sweep_g(n, a.eps, grid, opts);
    write_text(a.out + "_n" + std::to_string(n) + ".csv", sweep_csv(sweep));
    points.push_back(entlab::extract_scaling_point(sweep));
  }

  std::vector<double> ns, g_mu, g_sigma;
  for (const auto& p : points) {
    ns.push_back(p.n);
    g_mu.push_back(p.g_mu_max);
    g_sigma.push_back(p.g_sigma_max);
  }

  json point_rows = json::array();
  bool ordering_all = true;
  for (const auto& p : points) {
    ordering_all = ordering_all && p.sigma_before_mu;
    point_rows.push_back(json{{"n", p.n},
                              {"g_mu_max", p.g_mu_max},
                              {"g_mu_max_uncertainty", p.g_mu_uncertainty},
                              {"g_sigma_max", p.g_sigma_max},
                              {"g_sigma_max_uncertainty", p.g_sigma_uncertainty},
                              {"mu_max", p.mu_max},
                              {"sigma_max", p.sigma_max},
                              {"sigma_at_mu_max", p.sigma_at_mu_max},
                              {"sigma_before_mu", p.sigma_before_mu}});
  }

  json fits;
  try {
    fits["g_mu_max"] = fit_json(entlab::fit_rational_shift(ns, g_mu));
  } catch (const std::exception& e) {
    fits["g_mu_max"] = json{{"error", e.what()}};
  }
  try {
    fits["g_sigma_max"] = fit_json(entlab::fit_rational_shift(ns, g_sigma));
  } catch (const std::exception& e) {
    fits["g_sigma_max"] = json{{"error", e.what()}};
  }

  json sigma_rel;
  try {
    const auto report = entlab::sigma_rel_report(points);
    sigma_rel = json{{"n", report.n},
                     {"sigma_rel", report.sigma_rel},
                     {"mu_max_fit", fit_json(report.mu_fit)},
                     {"sigma_at_mu_max_fit", fit_json(report.sigma_fit)},
                     {"composite_exponent", report.composite_exponent}};
  } catch (const std::exception& e) {
    sigma_rel = json{{"error", e.what()}};
  }

  emit_json(json{{"format_version", 1},
                 {"config",
                  {{"command", "scaling"},
                   {"n_list", a.n_list},
                   {"eps", a.eps},
                   {"g_min", a.g_min},
                   {"g_max", a.g_max},
                   {"g_step", a.g_step},
                   {"solver", a.solver},
                   {"out", a.out}}},
                 {"points", point_rows},
                 {"ordering_g_sigma_before_g_mu", ordering_all},
                 {"fits", fits},
                 {"sigma_rel", sigma_rel}},
            a.json_out);
  return kExitOk;
}

int run_baseline(const BaselineArgs& a) {
  std::string csv = "n,samples,mean_mu,std_mu,mean_sigma,std_sigma\n";
  json rows = json::array();
  for (int n : a.n_list) {
    const auto summary = entlab::random_baseline(n, a.samples, a.seed,
                                                 resolve_threads(a.threads));
    csv += std::to_string(n) + "," + std::to_string(a.samples) + "," +
           format_double(summary.mean_mu) + "," + format_double(summary.std_mu) +
           "," + format_double(summary.mean_sigma) + "," +
           format_double(summary.std_sigma) + "\n";
    rows.push_back(json{{"n", n},
                        {"mean_mu", summary.mean_mu},
                        {"std_mu", summary.std_mu},
                        {"mean_sigma", summary.mean_sigma},
                        {"std_sigma", summary.std_sigma}});
  }
  write_text(a.out, csv);
  emit_json(json{{"format_version", 1},
                 {"config",
                  {{"command", "baseline"},
                   {"n_list", a.n_list},
                   {"samples", a.samples},
                   {"seed", a.seed},
                   {"out", a.out}}},
                 {"results", rows}},
            a.json_out);
  return kExitOk;
}

int run_blocks(const BlocksArgs& a) {
  const int max_len = a.max_len > 0 ? a.max_len : a.n / 2;
  const auto profile = entlab::block_entropy_profile(a.n, a.g, a.eps, max_len,
                                                     parse_solver(a.solver));
  std::string csv = "len,mean_entropy\n";
  for (const auto& [len, s] : profile) {
    csv += std::to_string(len) + "," + format_double(s) + "\n";
  }
  write_text(a.out, csv);

  // least-squares slope of S vs log2(len)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [len, s] : profile) {
    const double x = std::log2(static_cast<double>(len));
    sx += x; sy += s; sxx += x * x; sxy += x * s;
  }
  const double m = static_cast<double>(profile.size());
  const double denom = m * sxx - sx * sx;
  const double slope = denom != 0.0 ? (m * sxy - sx * sy) / denom : 0.0;

  json rows = json::array();
  for (const auto& [len, s] : profile) {
    rows.push_back(json{{"len", len}, {"mean_entropy", s}});
  }
  emit_json(json{{"format_version", 1},
                 {"config",
                  {{"command", "blocks"},
                   {"n", a.n},
                   {"g", a.g},
                   {"eps", a.eps},
                   {"max_len", max_len},
                   {"solver", a.solver},
                   {"out", a.out}}},
                 {"profile", rows},
                 {"slope_vs_log2_len", slope}},
            a.json_out);
  return kExitOk;
}

// self-check suite: the oracle pairings from the measure and solver layers
int run_verify(const VerifyArgs& a) {
  int failures = 0;
  auto check = [&](bool ok, const std::string& name,
                   const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
    if (!ok) ++failures;
  };

  {  // purity (matrix route) vs the literal quadruple sum
    std::mt19937_64 rng(a.seed);
    double worst = 0.0;
    for (int c = 0; c < a.cases; ++c) {
      const int n = 3 + static_cast<int>(rng() % 6);  // 3..8
      const std::uint64_t full = (std::uint64_t{1} << n) - 1;
      std::uint64_t mask = 0;
      while (mask == 0 || mask == full) mask = rng() & full;
      const auto state = entlab::haar_random_state(n, rng());
      const entlab::Bipartition part(n, mask);
      worst = std::max(worst, std::abs(entlab::purity(state, part) -
                                       entlab::purity_bruteforce(state, part)));
    }
    check(worst < 1e-10, "purity-vs-bruteforce",
          "max |delta| = " + format_double(worst) + " over " +
              std::to_string(a.cases) + " cases");
  }

  {  // dense vs lanczos
    double worst_de = 0.0, worst_overlap = 1.0;
    for (int n : {2, 4, 6, 8, 10}) {
      for (double g : {0.1, 0.5, 0.9}) {
        for (double eps : {0.0, 1e-4}) {
          const entlab::IsingParameters params{n, g, eps};
          const auto dense = entlab::dense_ground_state(params);
          const auto lanczos = entlab::lanczos_ground_state(params);
          worst_de = std::max(worst_de,
                              std::abs(dense.energy - lanczos.energy));
          entlab::Complex ov(0, 0);
          for (std::uint64_t k = 0; k < dense.state.dim(); ++k) {
            ov += std::conj(dense.state.amplitude(k)) *
                  lanczos.state.amplitude(k);
          }
          worst_overlap = std::min(worst_overlap, std::abs(ov));
        }
      }
    }
    check(worst_de < 1e-9 && worst_overlap > 1.0 - 1e-8, "dense-vs-lanczos",
          "max |dE| = " + format_double(worst_de) +
              ", min overlap = " + format_double(worst_overlap));
  }

  {  // participation bounds, complement symmetry
    bool bounds_ok = true, compl_ok = true;
    std::mt19937_64 rng(a.seed + 1);
    for (int c = 0; c < 50; ++c) {
      const int n = 4 + static_cast<int>(rng() % 5);  // 4..8
      const auto state = entlab::haar_random_state(n, rng());
      const auto family = entlab::PartitionFamily::balanced(n);
      for (std::uint64_t i = 0; i < family.size(); ++i) {
        const auto part = family.at(i);
        const double p = entlab::purity(state, part);
        const double nab = 1.0 / p;
        if (nab < 1.0 - 1e-9 ||
            nab > static_cast<double>(part.dim_a()) + 1e-9) {
          bounds_ok = false;
        }
        const double pc = entlab::purity(state, part.complement());
        if (std::abs(p - pc) > 1e-12) compl_ok = false;
      }
    }
    check(bounds_ok, "participation-bounds", "1 <= N_AB <= 2^n_A");
    check(compl_ok, "complement-symmetry", "N_AB = N_BA within 1e-12");
  }

  {  // GHZ / product fixed points
    bool ok = true;
    for (int n : {4, 6, 8}) {
      const auto family = entlab::PartitionFamily::balanced(n);
      const auto ghz = entlab::ghz_state(n);
      const auto plus = entlab::product_plus_state(n);
      const auto dg = entlab::distribution(ghz, family, 1);
      const auto dp = entlab::distribution(plus, family, 1);
      ok = ok && std::abs(dg.summary.mu - 2.0) < 1e-9 &&
           dg.summary.sigma <= 1e-12 && std::abs(dp.summary.mu - 1.0) < 1e-9 &&
           dp.summary.sigma <= 1e-12;
    }
    check(ok, "ghz-product-fixed-points", "mu = 2 / mu = 1, sigma = 0");
  }

  {  // normalization guard
    bool threw = false;
    try {
      std::vector<entlab::Complex> amps(4, entlab::Complex(0.0, 0.0));
      amps[0] = entlab::Complex(0.9, 0.0);  // norm 0.81
      entlab::PureState bad(2, amps);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    check(threw, "normalization-guard", "norm-0.9 state rejected");
  }

  if (failures > 0) {
    std::cout << failures << " check(s) failed\n";
    return kExitVerify;
  }
  std::cout << "all checks passed\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Participation-number statistics of the transverse-field "
               "Ising chain"};
  app.require_subcommand(1);
  app.set_config("--config");

  GroundArgs ground_args;
  auto* ground = app.add_subcommand("ground", "Ground-state eigenpair");
  ground->add_option("--n", ground_args.n, "chain length");
  ground->add_option("--g", ground_args.g, "coupling in [0,1]");
  ground->add_option("--eps", ground_args.eps, "longitudinal field");
  ground->add_option("--solver", ground_args.solver, "dense|lanczos|auto");
  ground->add_flag("--amplitudes", ground_args.amplitudes,
                   "include the state vector in the JSON");
  ground->add_option("--json", ground_args.json_out, "JSON output path");

  DistArgs dist_args;
  auto* dist = app.add_subcommand(
      "dist", "Participation-number distribution over a partition family");
  dist->add_option("--n", dist_args.n, "chain length");
  dist->add_option("--g", dist_args.g, "coupling");
  dist->add_option("--eps", dist_args.eps, "longitudinal field");
  dist->add_option("--state", dist_args.state, "ground|ghz|plus|file:<path>");
  dist->add_option("--state-file", dist_args.state_file,
                   "read the state from a file (same as --state file:<path>)");
  dist->add_option("--partitions", dist_args.partitions,
                   "balanced|contiguous:<L>|file:<path>");
  dist->add_option("--solver", dist_args.solver, "dense|lanczos|auto");
  dist->add_option("--bins", dist_args.bins, "histogram bins");
  dist->add_flag("--entropy", dist_args.with_entropy,
                 "also compute the von Neumann entropy per cut");
  dist->add_option("--threads", dist_args.threads, "worker threads");
  dist->add_option("--out", dist_args.out, "records CSV path");
  dist->add_option("--json", dist_args.json_out, "summary JSON path");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "mu(g), sigma(g) over a g grid");
  sweep->add_option("--n", sweep_args.n, "chain length");
  sweep->add_option("--eps", sweep_args.eps, "longitudinal field");
  sweep->add_option("--g-min", sweep_args.g_min, "grid start");
  sweep->add_option("--g-max", sweep_args.g_max, "grid end (<= 0.99)");
  sweep->add_option("--g-step", sweep_args.g_step, "grid step");
  sweep->add_option("--solver", sweep_args.solver, "dense|lanczos|auto");
  sweep->add_flag("--no-refine", sweep_args.no_refine,
                  "skip the 0.002-step refinement around the maxima");
  sweep->add_option("--threads", sweep_args.threads, "worker threads");
  sweep->add_option("--out", sweep_args.out, "CSV path");
  sweep->add_option("--json", sweep_args.json_out, "maxima JSON path");

  ScalingArgs scaling_args;
  auto* scaling = app.add_subcommand(
      "scaling", "Sweep several n, locate maxima, fit the scaling forms");
  scaling->add_option("--n-list", scaling_args.n_list, "chain lengths");
  scaling->add_option("--eps", scaling_args.eps, "longitudinal field");
  scaling->add_option("--g-min", scaling_args.g_min, "grid start");
  scaling->add_option("--g-max", scaling_args.g_max, "grid end");
  scaling->add_option("--g-step", scaling_args.g_step, "grid step");
  scaling->add_option("--solver", scaling_args.solver, "dense|lanczos|auto");
  scaling->add_option("--threads", scaling_args.threads, "worker threads");
  scaling->add_option("--out", scaling_args.out, "CSV path prefix");
  scaling->add_option("--json", scaling_args.json_out, "fits JSON path");

  BaselineArgs baseline_args;
  auto* baseline = app.add_subcommand(
      "baseline", "Haar-random-state baseline over balanced cuts");
  baseline->add_option("--n-list", baseline_args.n_list, "chain lengths");
  baseline->add_option("--samples", baseline_args.samples, "Haar samples");
  baseline->add_option("--seed", baseline_args.seed, "RNG seed");
  baseline->add_option("--threads", baseline_args.threads, "worker threads");
  baseline->add_option("--out", baseline_args.out, "CSV path");
  baseline->add_option("--json", baseline_args.json_out, "JSON path");

  BlocksArgs blocks_args;
  auto* blocks = app.add_subcommand(
      "blocks", "Position-averaged block entropy S(len)");
  blocks->add_option("--n", blocks_args.n, "chain length");
  blocks->add_option("--g", blocks_args.g, "coupling");
  blocks->add_option("--eps", blocks_args.eps, "longitudinal field");
  blocks->add_option("--max-len", blocks_args.max_len,
                     "largest block length (default n/2)");
  blocks->add_option("--solver", blocks_args.solver, "dense|lanczos|auto");
  blocks->add_option("--out", blocks_args.out, "CSV path");
  blocks->add_option("--json", blocks_args.json_out, "JSON path");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the oracle self-checks");
  verify->add_option("--seed", verify_args.seed, "RNG seed");
  verify->add_option("--cases", verify_args.cases,
                     "random cases for the purity oracle");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ground->parsed()) return run_ground(ground_args);
    if (dist->parsed()) return run_dist(dist_args);
    if (sweep->parsed()) return run_sweep(sweep_args);
    if (scaling->parsed()) return run_scaling(scaling_args);
    if (baseline->parsed()) return run_baseline(baseline_args);
    if (blocks->parsed()) return run_blocks(blocks_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const entlab::SolverError& e) {
    std::cerr << "solver error: " << e.what()
              << " (best residual " << e.best_residual << ")\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
