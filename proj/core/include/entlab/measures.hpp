#pragma once

#include <optional>

#include <Eigen/Dense>

#include "entlab/state.hpp"

namespace entlab {

inline constexpr int kBruteForceCap = 12;

/// rho_A = Tr_B |psi><psi|, Hermitian, unit trace.
struct ReducedDensityMatrix {
  Eigen::MatrixXcd entries;

  Eigen::Index dim() const { return entries.rows(); }
};

/// Per-bipartition entanglement summary. participation = 1/purity is the
/// effective Schmidt rank of the cut; n_AB = log2(participation) the
/// effective number of entangled qubits.
struct EntanglementRecord {
  Bipartition part;
  double purity;
  double participation;
  double n_ab;
  std::optional<double> entropy;
};

ReducedDensityMatrix reduced_density(const PureState& state,
                                     const Bipartition& part);

// Tr(rho_A^2), via the squared Frobenius norm of M M^dagger with
// M = to_matrix(state, part). Cost N_A^2 N_B.
double purity(const PureState& state, const Bipartition& part);

// The literal quadruple sum over amplitude products, cost N_A^2 N_B^2.
// Kept as the independent oracle for purity(); refuses above the cap.
double purity_bruteforce(const PureState& state, const Bipartition& part,
                         int cap = kBruteForceCap);

// von Neumann entropy -sum lambda log2 lambda of rho_A; eigenvalues below
// 1e-14 are treated as zero.
double entropy(const PureState& state, const Bipartition& part);

// (1 - Tr rho_A^q) / (q - 1); q > 0, q != 1. At q = 2 this is the linear
// entropy 1 - purity.
double tsallis_entropy(const PureState& state, const Bipartition& part,
                       double q);

EntanglementRecord make_record(const PureState& state, const Bipartition& part,
                               bool with_entropy = false);

}  // namespace entlab
