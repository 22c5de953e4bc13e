#include "entlab/ising.hpp"

#include <stdexcept>
#include <string>

namespace entlab {

void IsingParameters::validate() const {
  if (n < 2 || n > 30) {
    throw std::invalid_argument("ising chain needs n in [2, 30]");
  }
  if (g < 0.0 || g > 1.0) {
    throw std::invalid_argument("coupling g must lie in [0, 1]");
  }
  if (epsilon < 0.0 || epsilon > 1.0) {
    throw std::invalid_argument("longitudinal field eps must lie in [0, 1]");
  }
}

double diagonal_energy(std::uint64_t k, const IsingParameters& params) {
  params.validate();
  if (k >= (std::uint64_t{1} << params.n)) {
    throw std::invalid_argument("basis index out of range");
  }
  double coupling = 0.0;
  double field = 0.0;
  int s_prev = 1 - 2 * static_cast<int>(k & 1u);
  field += s_prev;
  for (int i = 1; i < params.n; ++i) {
    const int s = 1 - 2 * static_cast<int>((k >> i) & 1u);
    coupling += static_cast<double>(s_prev * s);
    field += s;
    s_prev = s;
  }
  return -params.g * coupling + params.epsilon * field;
}

namespace {

template <typename Vec>
Vec apply_impl(const IsingParameters& params, const Vec& x) {
  params.validate();
  const std::uint64_t dim = std::uint64_t{1} << params.n;
  if (static_cast<std::uint64_t>(x.size()) != dim) {
    throw std::invalid_argument("vector length must be 2^n");
  }
  Vec y(x.size());
  const double hx = -(1.0 - params.g);
  for (std::uint64_t k = 0; k < dim; ++k) {
    auto acc = diagonal_energy(k, params) * x[static_cast<Eigen::Index>(k)];
    for (int i = 0; i < params.n; ++i) {
      acc += hx * x[static_cast<Eigen::Index>(k ^ (std::uint64_t{1} << i))];
    }
    y[static_cast<Eigen::Index>(k)] = acc;
  }
  return y;
}

}  // namespace

Eigen::VectorXd apply_hamiltonian(const IsingParameters& params,
                                  const Eigen::Ref<const Eigen::VectorXd>& x) {
  return apply_impl<Eigen::VectorXd>(params, x);
}

Eigen::VectorXcd apply_hamiltonian(
    const IsingParameters& params,
    const Eigen::Ref<const Eigen::VectorXcd>& x) {
  return apply_impl<Eigen::VectorXcd>(params, x);
}

Eigen::MatrixXd dense_matrix(const IsingParameters& params, int dense_cap) {
  params.validate();
  if (params.n > dense_cap) {
    throw std::invalid_argument(
        "n=" + std::to_string(params.n) + " exceeds the dense cap " +
        std::to_string(dense_cap) + "; use the matrix-free path");
  }
  const std::uint64_t dim = std::uint64_t{1} << params.n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                            static_cast<Eigen::Index>(dim));
  const double hx = -(1.0 - params.g);
  for (std::uint64_t k = 0; k < dim; ++k) {
    const auto kk = static_cast<Eigen::Index>(k);
    h(kk, kk) = diagonal_energy(k, params);
    for (int i = 0; i < params.n; ++i) {
      h(static_cast<Eigen::Index>(k ^ (std::uint64_t{1} << i)), kk) += hx;
    }
  }
  return h;
}

}  // namespace entlab
