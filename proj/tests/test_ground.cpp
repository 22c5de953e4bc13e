#include <doctest.h>

#include <cmath>
#include <random>

#include "entlab/ground.hpp"

using namespace entlab;

namespace {

double overlap(const PureState& a, const PureState& b) {
  Complex ov(0.0, 0.0);
  for (std::uint64_t k = 0; k < a.dim(); ++k) {
    ov += std::conj(a.amplitude(k)) * b.amplitude(k);
  }
  return std::abs(ov);
}

}  // namespace

TEST_CASE("dense ground state of the field-only chain") {
  const auto result = dense_ground_state({2, 0.0, 0.0});
  CHECK(result.energy == doctest::Approx(-2.0).epsilon(1e-12));
  for (std::uint64_t k = 0; k < 4; ++k) {
    CHECK(result.state.amplitude(k).real() == doctest::Approx(0.5));
  }
  CHECK(result.gap.value() == doctest::Approx(2.0));
}

TEST_CASE("dense ground state of the classical chain with bias") {
  const auto result = dense_ground_state({2, 1.0, 0.01});
  CHECK(result.energy == doctest::Approx(-1.02));
  CHECK(std::abs(result.state.amplitude(0b11)) == doctest::Approx(1.0));
}

TEST_CASE("ground energy at the classical point is -(n-1), degenerate") {
  for (int n : {3, 5}) {
    const auto result = dense_ground_state({n, 1.0, 0.0});
    CHECK(result.energy == doctest::Approx(-(n - 1.0)));
    CHECK(result.gap.value() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(result.near_degenerate());
  }
}

TEST_CASE("lanczos exhausts the Krylov space at n=2") {
  const auto result = lanczos_ground_state({2, 0.3, 0.05});
  const auto dense = dense_ground_state({2, 0.3, 0.05});
  CHECK(result.energy == doctest::Approx(dense.energy).epsilon(1e-12));
  CHECK(result.residual <= 1e-10);
}

TEST_CASE("cross-solver equivalence over a parameter grid") {
  for (int n : {4, 6, 8, 10}) {
    for (double g : {0.0, 0.25, 0.5, 0.75, 0.95}) {
      for (double eps : {0.0, 1e-4, 1e-2}) {
        const IsingParameters params{n, g, eps};
        const auto dense = dense_ground_state(params);
        const auto lanczos = lanczos_ground_state(params);
        CAPTURE(n); CAPTURE(g); CAPTURE(eps);
        CHECK(std::abs(dense.energy - lanczos.energy) <= 1e-9);
        CHECK(overlap(dense.state, lanczos.state) >= 1.0 - 1e-8);
      }
    }
  }
}

TEST_CASE("lanczos residual is self-certifying at n=12") {
  const auto result = lanczos_ground_state({12, 0.5, 0.0});
  CHECK(result.residual <= 1e-10);
}

TEST_CASE("variational property against random probes") {
  const IsingParameters params{6, 0.5, 0.0};
  const auto result = dense_ground_state(params);
  std::mt19937_64 rng(23);
  std::normal_distribution<double> gauss;
  for (int t = 0; t < 100; ++t) {
    Eigen::VectorXd probe(64);
    for (Eigen::Index i = 0; i < 64; ++i) probe[i] = gauss(rng);
    probe.normalize();
    CHECK(result.energy <= probe.dot(apply_hamiltonian(params, probe)) + 1e-12);
  }
}

TEST_CASE("near-degenerate regime returns the GHZ-like even state") {
  // n=9, g=0.95: the tunneling gap is far below the degeneracy threshold.
  const auto result = dense_ground_state({9, 0.95, 0.0});
  CHECK(result.near_degenerate());
  const double a0 = std::abs(result.state.amplitude(0));
  const double a1 = std::abs(result.state.amplitude((1u << 9) - 1));
  CHECK(a0 == doctest::Approx(a1).epsilon(1e-6));
  CHECK(a0 > 0.6);  // weight concentrated on the two classical states

  const auto lanczos = lanczos_ground_state({9, 0.95, 0.0});
  CHECK(overlap(result.state, lanczos.state) >= 1.0 - 1e-8);
}

TEST_CASE("energy gap examples") {
  CHECK(energy_gap({2, 1.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(energy_gap({2, 0.0, 0.0}) == doctest::Approx(2.0));
  const double gap = energy_gap({9, 0.95, 0.0});
  CHECK(gap >= 0.0);
  CHECK(gap < kDegeneracyThreshold);
}

TEST_CASE("continuity of the ground energy away from degeneracies") {
  const double e1 = dense_ground_state({8, 0.40, 0.0}).energy;
  const double e2 = dense_ground_state({8, 0.401, 0.0}).energy;
  const double e3 = dense_ground_state({8, 0.402, 0.0}).energy;
  const double local_slope = std::abs(e3 - e2) / 1e-3;
  CHECK(std::abs(e2 - e1) <= 10.0 * std::max(local_slope, 1.0) * 1e-3);
}

TEST_CASE("ground state is deterministic across calls") {
  const auto a = lanczos_ground_state({8, 0.47, 0.0});
  const auto b = lanczos_ground_state({8, 0.47, 0.0});
  for (std::uint64_t k = 0; k < a.state.dim(); ++k) {
    CHECK(a.state.amplitude(k) == b.state.amplitude(k));
  }
}
