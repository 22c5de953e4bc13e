#include "entlab/state.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace entlab {

namespace {

void check_qubit_count(int n) {
  if (n < 1 || n > 30) {
    throw std::invalid_argument("qubit count must be in [1, 30], got " +
                                std::to_string(n));
  }
}

}  // namespace

PureState::PureState(int n, std::vector<Complex> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
  check_qubit_count(n);
  if (amps_.size() != (std::uint64_t{1} << n_)) {
    throw std::invalid_argument("amplitude vector length must be 2^n");
  }
  if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized");
  }
}

PureState PureState::normalized(int n, std::vector<Complex> amplitudes) {
  check_qubit_count(n);
  if (amplitudes.size() != (std::uint64_t{1} << n)) {
    throw std::invalid_argument("amplitude vector length must be 2^n");
  }
  double s2 = 0.0;
  for (const auto& z : amplitudes) s2 += std::norm(z);
  if (s2 <= 0.0) throw std::invalid_argument("cannot normalize a zero vector");
  const double inv = 1.0 / std::sqrt(s2);
  for (auto& z : amplitudes) z *= inv;
  return PureState(n, std::move(amplitudes));
}

PureState PureState::from_real(int n, const Eigen::VectorXd& v) {
  std::vector<Complex> amps(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) amps[i] = Complex(v[i], 0.0);
  return PureState::normalized(n, std::move(amps));
}

double PureState::norm_squared() const {
  double s2 = 0.0;
  for (const auto& z : amps_) s2 += std::norm(z);
  return s2;
}

void PureState::normalize() {
  const double inv = 1.0 / std::sqrt(norm_squared());
  for (auto& z : amps_) z *= inv;
}

Bipartition::Bipartition(int n, std::uint64_t mask_a) : n_(n) {
  if (n < 2 || n > 62) {
    throw std::invalid_argument("bipartition needs n in [2, 62]");
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  if (mask_a == 0 || mask_a > full || (mask_a & ~full) != 0) {
    throw std::invalid_argument("mask_A must select a nonempty proper subset");
  }
  if (mask_a == full) {
    throw std::invalid_argument("subsystem B must be nonempty");
  }
  int pc = std::popcount(mask_a);
  if (2 * pc > n) {  // store the complement so that n_A <= n_B
    mask_a = full & ~mask_a;
    pc = n - pc;
  }
  mask_a_ = mask_a;
  mask_b_ = full & ~mask_a;
  n_a_ = pc;
}

std::pair<std::uint64_t, std::uint64_t> split_index(std::uint64_t k,
                                                    const Bipartition& part) {
  if (k >= (std::uint64_t{1} << part.n())) {
    throw std::invalid_argument("basis index out of range");
  }
  std::uint64_t j_a = 0, l_b = 0;
  int ia = 0, ib = 0;
  const std::uint64_t mask = part.mask_a();
  for (int site = 0; site < part.n(); ++site) {
    const std::uint64_t bit = (k >> site) & 1u;
    if ((mask >> site) & 1u) {
      j_a |= bit << ia++;
    } else {
      l_b |= bit << ib++;
    }
  }
  return {j_a, l_b};
}

std::uint64_t merge_index(std::uint64_t j_a, std::uint64_t l_b,
                          const Bipartition& part) {
  if (j_a >= part.dim_a() || l_b >= part.dim_b()) {
    throw std::invalid_argument("subsystem index out of range");
  }
  std::uint64_t k = 0;
  int ia = 0, ib = 0;
  const std::uint64_t mask = part.mask_a();
  for (int site = 0; site < part.n(); ++site) {
    std::uint64_t bit;
    if ((mask >> site) & 1u) {
      bit = (j_a >> ia++) & 1u;
    } else {
      bit = (l_b >> ib++) & 1u;
    }
    k |= bit << site;
  }
  return k;
}

AmplitudeMatrix to_matrix(const PureState& state, const Bipartition& part) {
  if (state.n() != part.n()) {
    throw std::invalid_argument("state and bipartition site counts differ");
  }
  AmplitudeMatrix m;
  m.entries.setZero(static_cast<Eigen::Index>(part.dim_a()),
                    static_cast<Eigen::Index>(part.dim_b()));
  for (std::uint64_t k = 0; k < state.dim(); ++k) {
    const auto [j_a, l_b] = split_index(k, part);
    m.entries(static_cast<Eigen::Index>(j_a), static_cast<Eigen::Index>(l_b)) =
        state.amplitude(k);
  }
  return m;
}

PureState product_plus_state(int n) {
  check_qubit_count(n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  const double a = std::pow(2.0, -0.5 * n);
  return PureState::normalized(n, std::vector<Complex>(dim, Complex(a, 0.0)));
}

PureState ghz_state(int n) {
  if (n < 2) throw std::invalid_argument("GHZ state needs n >= 2");
  check_qubit_count(n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<Complex> amps(dim, Complex(0.0, 0.0));
  const double a = 1.0 / std::sqrt(2.0);
  amps.front() = Complex(a, 0.0);
  amps.back() = Complex(a, 0.0);
  return PureState(n, std::move(amps));
}

PureState haar_random_state(int n, std::uint64_t seed) {
  check_qubit_count(n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<Complex> amps(dim);
  for (auto& z : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = Complex(re, im);
  }
  return PureState::normalized(n, std::move(amps));
}

}  // namespace entlab
