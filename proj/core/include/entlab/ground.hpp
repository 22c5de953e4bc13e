#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "entlab/ising.hpp"
#include "entlab/state.hpp"

namespace entlab {

inline constexpr double kSolverTolerance = 1e-10;
inline constexpr double kDegeneracyThreshold = 1e-8;

struct GroundStateResult {
  double energy;
  PureState state;
  std::optional<double> gap;  // E1 - E0 when available
  std::string solver;
  double residual;  // ||H psi - E psi||_2

  bool near_degenerate(double threshold = kDegeneracyThreshold) const {
    return gap.has_value() && *gap < threshold;
  }
};

struct SolverError : std::runtime_error {
  SolverError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual(best_residual) {}
  double best_residual;
};

// Full symmetric eigendecomposition, n <= dense cap. At eps = 0 the
// returned state is the Z2-even combination of the lowest eigenpair(s),
// so the near-degenerate regime g -> 1 yields the GHZ-like state.
GroundStateResult dense_ground_state(const IsingParameters& params,
                                     int dense_cap = kDenseCap);

struct LanczosOptions {
  double tol = kSolverTolerance;
  int max_iter = 500;
  std::uint64_t seed = 1234;
};

// Matrix-free Lanczos with full reorthogonalization. At eps = 0 the start
// vector is Z2-symmetrized, so the iteration stays in the even sector and
// agrees with the dense path in the near-degenerate regime. The reported
// gap is the gap of the explored sector.
GroundStateResult lanczos_ground_state(const IsingParameters& params,
                                       const LanczosOptions& opts = {});

enum class SolverChoice { automatic, dense, lanczos };

// dense for n <= 10, lanczos above (when automatic).
GroundStateResult solve_ground(const IsingParameters& params,
                               SolverChoice choice = SolverChoice::automatic);

// E1 - E0 >= 0, from the full spectrum (both Z2 sectors at eps = 0).
double energy_gap(const IsingParameters& params);

}  // namespace entlab
