#include "entlab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace entlab {

namespace {

Eigen::VectorXd density_eigenvalues(const PureState& state,
                                    const Bipartition& part) {
  const ReducedDensityMatrix rho = reduced_density(state, part);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries,
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace

ReducedDensityMatrix reduced_density(const PureState& state,
                                     const Bipartition& part) {
  const AmplitudeMatrix m = to_matrix(state, part);
  return ReducedDensityMatrix{m.entries * m.entries.adjoint()};
}

double purity(const PureState& state, const Bipartition& part) {
  const AmplitudeMatrix m = to_matrix(state, part);
  return (m.entries * m.entries.adjoint()).squaredNorm();
}

double purity_bruteforce(const PureState& state, const Bipartition& part,
                         int cap) {
  if (part.n() > cap) {
    throw std::invalid_argument("brute-force purity refused above n=" +
                                std::to_string(cap));
  }
  const AmplitudeMatrix m = to_matrix(state, part);
  const auto na = m.rows();
  const auto nb = m.cols();
  Complex sum(0.0, 0.0);
  for (Eigen::Index j = 0; j < na; ++j) {
    for (Eigen::Index jp = 0; jp < na; ++jp) {
      for (Eigen::Index l = 0; l < nb; ++l) {
        for (Eigen::Index lp = 0; lp < nb; ++lp) {
          sum += m.entries(j, l) * std::conj(m.entries(jp, l)) *
                 m.entries(jp, lp) * std::conj(m.entries(j, lp));
        }
      }
    }
  }
  return sum.real();
}

double entropy(const PureState& state, const Bipartition& part) {
  const Eigen::VectorXd evals = density_eigenvalues(state, part);
  double s = 0.0;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    const double lambda = evals[i];
    if (lambda > 1e-14) s -= lambda * std::log2(lambda);
  }
  return s;
}

double tsallis_entropy(const PureState& state, const Bipartition& part,
                       double q) {
  if (q <= 0.0 || q == 1.0) {
    throw std::invalid_argument(
        "tsallis entropy needs q > 0, q != 1 (use entropy for q -> 1)");
  }
  const Eigen::VectorXd evals = density_eigenvalues(state, part);
  double trace_q = 0.0;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    const double lambda = std::max(evals[i], 0.0);
    if (lambda > 0.0) trace_q += std::pow(lambda, q);
  }
  return (1.0 - trace_q) / (q - 1.0);
}

EntanglementRecord make_record(const PureState& state, const Bipartition& part,
                               bool with_entropy) {
  const double p = purity(state, part);
  EntanglementRecord rec{part, p, 1.0 / p, std::log2(1.0 / p), std::nullopt};
  if (with_entropy) rec.entropy = entropy(state, part);
  return rec;
}

}  // namespace entlab
