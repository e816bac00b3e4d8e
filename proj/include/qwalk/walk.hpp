// qwalk - exact discrete-time evolution of the walk
#ifndef QWALK_WALK_HPP_
#define QWALK_WALK_HPP_

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/mat2.hpp"

namespace qwalk {

// Uniform 1-D lattice. Time and length scales are fixed to 1, so
// dt = dx = epsilon and the dimensionless coordinates coincide with the
// lattice ones: T_j = j * epsilon, X_m = m * epsilon (exact products).
struct LatticeGrid {
  int site_count = 0;         // M
  double epsilon = 0.0;       // dt = dx
  std::int64_t origin = 0;    // lattice index m of array index 0

  double dt() const { return epsilon; }
  double dx() const { return epsilon; }
  double position(int i) const {
    return static_cast<double>(origin + i) * epsilon;
  }
  double x_min() const { return position(0); }
  double x_max() const { return position(site_count - 1); }

  // Smallest grid whose sites cover [x_lo, x_hi].
  static LatticeGrid covering(double x_lo, double x_hi, double epsilon);
};

// Two-component amplitudes over the lattice at one time index. Amplitudes are
// interleaved (L, R) pairs so the step kernel streams the array once.
struct WalkState {
  LatticeGrid grid;
  std::int64_t time_index = 0;
  std::vector<Complex> amp;  // size 2 * site_count

  double time() const { return static_cast<double>(time_index) * grid.epsilon; }
  Complex left(int i) const { return amp[2 * static_cast<std::size_t>(i)]; }
  Complex right(int i) const { return amp[2 * static_cast<std::size_t>(i) + 1]; }
  Complex& left(int i) { return amp[2 * static_cast<std::size_t>(i)]; }
  Complex& right(int i) { return amp[2 * static_cast<std::size_t>(i) + 1]; }

  static WalkState zero(const LatticeGrid& grid);
};

// Gaussian density n0(X) = exp(-(X - x0)^2 / (2 sigma^2)) distributed over
// both spin components via spin_mix, then renormalized so the total
// probability is 1. Requires sigma > 0 (std::invalid_argument) and the 8-sigma
// support inside the grid (ConfigError).
WalkState init_gaussian(const LatticeGrid& grid, double x0, double sigma,
                        Vec2c spin_mix = {Complex(1.0, 0.0), Complex(0.0, 1.0)});

// One time step. Zero inflow at both lattice ends.
void step_into(const WalkState& in, const CoinAngleField& field, WalkState& out);
WalkState step(const WalkState& state, const CoinAngleField& field);

// Two time steps in one pass, using the composed two-step update directly.
// Agrees with step(step(s)) within 1e-14 per amplitude (not bit-identical).
void step_s2_into(const WalkState& in, const CoinAngleField& field, WalkState& out);
WalkState step_s2(const WalkState& state, const CoinAngleField& field);

// Total probability, compensated summation.
double total_probability(const WalkState& state);

// Probability carried by the outermost site at each end; the boundary guard
// watches this.
double boundary_probability(const WalkState& state);

// Subsequence of states with time_index == 0 (mod n). Throws
// std::invalid_argument for n == 0.
std::vector<WalkState> stroboscope(const std::vector<WalkState>& history, int n);

struct WalkRunOptions {
  int snapshot_stride = 1;               // observer cadence, >= 1
  double boundary_guard = 1e-12;         // GuardError above this; <= 0 disables
};

// Run `steps` steps, invoking observer at j = 0 and every stride-th state
// (always including the final one). Throws GuardError when boundary-adjacent
// probability exceeds the guard threshold.
void run_walk(WalkState state, const CoinAngleField& field, std::int64_t steps,
              const WalkRunOptions& options,
              const std::function<void(const WalkState&)>& observer);

}  // namespace qwalk

#endif  // QWALK_WALK_HPP_
