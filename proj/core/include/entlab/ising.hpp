#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace entlab {

inline constexpr int kDenseCap = 14;

/// Transverse-field Ising chain with open boundary conditions:
///   H = -g sum_i s^z_i s^z_{i+1} - (1-g) sum_i s^x_i + eps sum_i s^z_i
/// The critical point of the infinite chain sits at g = 1/2.
struct IsingParameters {
  int n;
  double g;
  double epsilon = 0.0;

  void validate() const;
};

// Diagonal part of H at basis index k: coupling term plus longitudinal
// field, with s_i = 1 - 2 b_i for bit i of k. Open chain, n-1 bonds.
double diagonal_energy(std::uint64_t k, const IsingParameters& params);

// Matrix-free y = H x. The transverse field contributes
// y_k += -(1-g) x_{k xor (1<<i)} for each site i.
Eigen::VectorXd apply_hamiltonian(const IsingParameters& params,
                                  const Eigen::Ref<const Eigen::VectorXd>& x);
Eigen::VectorXcd apply_hamiltonian(const IsingParameters& params,
                                   const Eigen::Ref<const Eigen::VectorXcd>& x);

// Explicit 2^n x 2^n real symmetric matrix; refuses above dense_cap.
Eigen::MatrixXd dense_matrix(const IsingParameters& params,
                             int dense_cap = kDenseCap);

}  // namespace entlab
