#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace entlab {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;

/// Normalized pure state of n qubits over the computational basis.
/// Site i is bit i of the basis index; bit value b maps to the
/// sigma^z eigenvalue s = 1 - 2b.
class PureState {
 public:
  // Amplitudes must already be normalized to within kNormTolerance.
  PureState(int n, std::vector<Complex> amplitudes);

  // Rescales the given amplitudes to unit norm.
  static PureState normalized(int n, std::vector<Complex> amplitudes);
  static PureState from_real(int n, const Eigen::VectorXd& v);

  int n() const { return n_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex amplitude(std::uint64_t k) const { return amps_[k]; }

  double norm_squared() const;
  void normalize();

 private:
  int n_;
  std::vector<Complex> amps_;
};

/// A cut of n sites into subsystems A and B, stored as the bit mask of
/// the A sites. Orientation is normalized so that n_A <= n_B: a mask
/// with more than n/2 bits set is replaced by its complement.
class Bipartition {
 public:
  Bipartition(int n, std::uint64_t mask_a);

  int n() const { return n_; }
  std::uint64_t mask_a() const { return mask_a_; }
  std::uint64_t mask_b() const { return mask_b_; }
  int n_a() const { return n_a_; }
  int n_b() const { return n_ - n_a_; }
  std::uint64_t dim_a() const { return std::uint64_t{1} << n_a(); }
  std::uint64_t dim_b() const { return std::uint64_t{1} << n_b(); }

  Bipartition complement() const { return Bipartition(n_, mask_b_); }

 private:
  int n_;
  std::uint64_t mask_a_;
  std::uint64_t mask_b_;
  int n_a_;
};

/// Amplitude vector reshaped to an N_A x N_B matrix:
/// entries(j_A, l_B) = z_k under the bit-split bijection.
struct AmplitudeMatrix {
  Eigen::MatrixXcd entries;

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }
};

// Bit-split bijection k <-> (j_A, l_B). Bits of k at the set positions of
// mask_A are packed into j_A in ascending site order; cleared positions
// likewise into l_B.
std::pair<std::uint64_t, std::uint64_t> split_index(std::uint64_t k,
                                                    const Bipartition& part);
std::uint64_t merge_index(std::uint64_t j_a, std::uint64_t l_b,
                          const Bipartition& part);

AmplitudeMatrix to_matrix(const PureState& state, const Bipartition& part);

// All qubits in (|0> + |1>)/sqrt(2); ground state of the pure-field limit.
PureState product_plus_state(int n);

// (|0...0> + |1...1>)/sqrt(2), n >= 2.
PureState ghz_state(int n);

// Unitarily invariant random state: i.i.d. standard complex Gaussian
// amplitudes, normalized. Reproducible from the seed.
PureState haar_random_state(int n, std::uint64_t seed);

}  // namespace entlab
