#include <doctest.h>

#include <random>

#include "entlab/ising.hpp"
#include "entlab/state.hpp"

using namespace entlab;

TEST_CASE("diagonal energy on small chains") {
  CHECK(diagonal_energy(0, {3, 1.0, 0.0}) == doctest::Approx(-2.0));
  CHECK(diagonal_energy(0b010, {3, 1.0, 0.0}) == doctest::Approx(2.0));
  CHECK(diagonal_energy(0b11, {2, 0.5, 0.01}) == doctest::Approx(-0.52));
  CHECK_THROWS_AS(diagonal_energy(8, IsingParameters{3, 1.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(IsingParameters({1, 0.5, 0.0}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(IsingParameters({4, 1.5, 0.0}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(IsingParameters({4, 0.5, -0.1}).validate(),
                  std::invalid_argument);
}

TEST_CASE("field-only limit: |++> is an eigenvector with energy -n") {
  const IsingParameters params{2, 0.0, 0.0};
  Eigen::VectorXd x(4);
  x.setConstant(0.5);
  const Eigen::VectorXd y = apply_hamiltonian(params, x);
  CHECK((y + 2.0 * x).norm() < 1e-14);
}

TEST_CASE("diagonal limit: no off-diagonal action at g=1") {
  const IsingParameters params{2, 1.0, 0.0};
  Eigen::VectorXd e0 = Eigen::VectorXd::Zero(4);
  e0[0] = 1.0;
  const Eigen::VectorXd y = apply_hamiltonian(params, e0);
  CHECK(y[0] == doctest::Approx(-1.0));
  CHECK(y[1] == 0.0);
  CHECK(y[2] == 0.0);
  CHECK(y[3] == 0.0);
}

TEST_CASE("matrix-free apply matches the dense matrix") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss;
  for (int n = 2; n <= 6; ++n) {
    const IsingParameters params{n, 0.37, 0.002};
    const Eigen::MatrixXd h = dense_matrix(params);
    CHECK((h - h.transpose()).norm() == 0.0);
    for (int t = 0; t < 5; ++t) {
      Eigen::VectorXd x(h.rows());
      for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = gauss(rng);
      const Eigen::VectorXd ref = h * x;
      const Eigen::VectorXd y = apply_hamiltonian(params, x);
      CHECK((ref - y).lpNorm<Eigen::Infinity>() < 1e-12);
    }
  }
}

TEST_CASE("dense matrix at n=2") {
  const Eigen::MatrixXd h1 = dense_matrix({2, 1.0, 0.0});
  CHECK(h1(0, 0) == doctest::Approx(-1.0));
  CHECK(h1(1, 1) == doctest::Approx(1.0));
  CHECK(h1(2, 2) == doctest::Approx(1.0));
  CHECK(h1(3, 3) == doctest::Approx(-1.0));
  CHECK(h1(0, 1) == 0.0);

  const Eigen::MatrixXd h0 = dense_matrix({2, 0.0, 0.0});
  CHECK(h0.diagonal().norm() == 0.0);
  CHECK(h0(0, 1) == doctest::Approx(-1.0));
  CHECK(h0(0, 2) == doctest::Approx(-1.0));
  CHECK(h0(0, 3) == 0.0);
}

TEST_CASE("dense matrix refuses above the cap") {
  CHECK_THROWS_AS(dense_matrix({16, 0.5, 0.0}, 14), std::invalid_argument);
}

TEST_CASE("symmetry of the matrix-free action") {
  const IsingParameters params{5, 0.42, 0.01};
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd u(32), v(32);
  for (Eigen::Index i = 0; i < 32; ++i) {
    u[i] = gauss(rng);
    v[i] = gauss(rng);
  }
  CHECK(u.dot(apply_hamiltonian(params, v)) ==
        doctest::Approx(v.dot(apply_hamiltonian(params, u))).epsilon(1e-10));
}

TEST_CASE("Z2 spin flip commutes with H at eps=0") {
  const IsingParameters params{6, 0.63, 0.0};
  const std::uint64_t full = 63;
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd x(64);
  for (Eigen::Index i = 0; i < 64; ++i) x[i] = gauss(rng);

  auto flip = [&](const Eigen::VectorXd& v) {
    Eigen::VectorXd out(v.size());
    for (std::uint64_t k = 0; k <= full; ++k) {
      out[static_cast<Eigen::Index>(full ^ k)] =
          v[static_cast<Eigen::Index>(k)];
    }
    return out;
  };
  const Eigen::VectorXd a = flip(apply_hamiltonian(params, x));
  const Eigen::VectorXd b = apply_hamiltonian(params, flip(x));
  CHECK((a - b).lpNorm<Eigen::Infinity>() < 1e-12);
}

TEST_CASE("apply rejects wrong-length vectors") {
  Eigen::VectorXd x(7);
  x.setZero();
  CHECK_THROWS_AS(apply_hamiltonian(IsingParameters{3, 0.5, 0.0}, x),
                  std::invalid_argument);
}
