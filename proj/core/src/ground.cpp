#include "entlab/ground.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

namespace entlab {

namespace {

Eigen::VectorXd spin_flipped(const Eigen::VectorXd& v, int n) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  Eigen::VectorXd out(v.size());
  for (std::uint64_t k = 0; k <= full; ++k) {
    out[static_cast<Eigen::Index>(full ^ k)] = v[static_cast<Eigen::Index>(k)];
  }
  return out;
}

// Largest-magnitude component positive, for deterministic output.
void fix_sign(Eigen::VectorXd& v) {
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  if (v[imax] < 0.0) v = -v;
}

double residual_norm(const IsingParameters& params, const Eigen::VectorXd& v,
                     double energy) {
  return (apply_hamiltonian(params, v) - energy * v).norm();
}

GroundStateResult make_result(const IsingParameters& params,
                              Eigen::VectorXd v, std::optional<double> gap,
                              std::string solver) {
  v.normalize();
  fix_sign(v);
  const double energy = v.dot(apply_hamiltonian(params, v));
  const double res = residual_norm(params, v, energy);
  return GroundStateResult{energy, PureState::from_real(params.n, v),
                           gap, std::move(solver), res};
}

Eigen::VectorXd seeded_gaussian(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = gauss(rng);
  return v;
}

struct LanczosOutcome {
  double energy;
  Eigen::VectorXd vector;
  std::optional<double> sector_gap;
  double residual;
  bool converged;
};

// Lanczos with full reorthogonalization from a fixed start vector. The
// iteration stays in any H-invariant subspace containing the start.
LanczosOutcome lanczos_lowest(const IsingParameters& params,
                              Eigen::VectorXd start, double tol,
                              int max_iter) {
  start.normalize();
  const auto idim = start.size();
  std::vector<Eigen::VectorXd> basis{std::move(start)};
  std::vector<double> alpha, beta;
  const int iter_cap =
      std::min<Eigen::Index>(max_iter, idim);

  LanczosOutcome out{};
  out.converged = false;
  out.residual = std::numeric_limits<double>::infinity();

  for (int j = 0; j < iter_cap; ++j) {
    Eigen::VectorXd w = apply_hamiltonian(params, basis[j]);
    alpha.push_back(basis[j].dot(w));
    w -= alpha[j] * basis[j];
    if (j > 0) w -= beta[j - 1] * basis[j - 1];
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) w -= q.dot(w) * q;
    }
    const double b = w.norm();

    const int k = j + 1;
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) t(i, i) = alpha[i];
    for (int i = 0; i + 1 < k; ++i) t(i, i + 1) = t(i + 1, i) = beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    const Eigen::VectorXd s = es.eigenvectors().col(0);
    const double res_est = std::abs(b * s[k - 1]);
    const bool exhausted = b < 1e-14;

    if (res_est <= tol || exhausted || k == iter_cap) {
      Eigen::VectorXd psi = Eigen::VectorXd::Zero(idim);
      for (int i = 0; i < k; ++i) psi += s[i] * basis[i];
      psi.normalize();
      out.energy = psi.dot(apply_hamiltonian(params, psi));
      out.residual = residual_norm(params, psi, out.energy);
      out.vector = std::move(psi);
      if (k >= 2) out.sector_gap = es.eigenvalues()[1] - es.eigenvalues()[0];
      if (out.residual <= tol || exhausted) {
        out.converged = true;
        return out;
      }
      if (k == iter_cap) return out;
    }
    beta.push_back(b);
    basis.push_back(w / b);
  }
  return out;
}

}  // namespace

GroundStateResult dense_ground_state(const IsingParameters& params,
                                     int dense_cap) {
  params.validate();
  const Eigen::MatrixXd h = dense_matrix(params, dense_cap);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  const Eigen::VectorXd& evals = es.eigenvalues();
  const double gap = evals[1] - evals[0];

  Eigen::VectorXd v = es.eigenvectors().col(0);
  if (params.epsilon == 0.0) {
    // The true finite-n ground state is Z2-even for g < 1. When the gap
    // closes, the diagonalizer may mix the quasi-degenerate pair; project
    // onto the even sector, falling back to the second eigenvector when
    // the first one is dominated by the odd combination.
    Eigen::VectorXd even0 = v + spin_flipped(v, params.n);
    if (gap < kDegeneracyThreshold) {
      const Eigen::VectorXd v1 = es.eigenvectors().col(1);
      Eigen::VectorXd even1 = v1 + spin_flipped(v1, params.n);
      if (even1.norm() > even0.norm()) even0 = even1;
    }
    if (even0.norm() > 1e-6) v = even0;
  }
  return make_result(params, std::move(v), gap, "dense");
}

GroundStateResult lanczos_ground_state(const IsingParameters& params,
                                       const LanczosOptions& opts) {
  params.validate();
  const auto idim = static_cast<Eigen::Index>(std::uint64_t{1} << params.n);
  Eigen::VectorXd start = seeded_gaussian(idim, opts.seed);
  if (params.epsilon == 0.0) {
    start += spin_flipped(start, params.n);  // stay in the Z2-even sector
  }
  LanczosOutcome out =
      lanczos_lowest(params, std::move(start), opts.tol, opts.max_iter);
  if (!out.converged) {
    throw SolverError("lanczos did not converge within " +
                          std::to_string(opts.max_iter) + " iterations",
                      out.residual);
  }
  return make_result(params, std::move(out.vector), out.sector_gap,
                     "lanczos");
}

GroundStateResult solve_ground(const IsingParameters& params,
                               SolverChoice choice) {
  switch (choice) {
    case SolverChoice::dense:
      return dense_ground_state(params);
    case SolverChoice::lanczos:
      return lanczos_ground_state(params);
    case SolverChoice::automatic:
    default:
      return params.n <= 10 ? dense_ground_state(params)
                            : lanczos_ground_state(params);
  }
}

double energy_gap(const IsingParameters& params) {
  params.validate();
  if (params.n <= kDenseCap) {
    const Eigen::MatrixXd h = dense_matrix(params);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    return es.eigenvalues()[1] - es.eigenvalues()[0];
  }
  const GroundStateResult ground = lanczos_ground_state(params);
  if (params.epsilon != 0.0) {
    return ground.gap.value_or(0.0);
  }
  // At eps = 0 the run above explored the even sector only; E1 may live in
  // the odd sector, so run Lanczos there as well.
  LanczosOptions opts;
  const auto idim = static_cast<Eigen::Index>(std::uint64_t{1} << params.n);
  Eigen::VectorXd start = seeded_gaussian(idim, opts.seed + 1);
  start -= spin_flipped(start, params.n);
  const LanczosOutcome odd =
      lanczos_lowest(params, std::move(start), opts.tol, opts.max_iter);
  const double e1 =
      std::min(ground.energy + ground.gap.value_or(0.0), odd.energy);
  return std::max(0.0, e1 - ground.energy);
}

}  // namespace entlab
