// qwalk - density post-processing, peak tracking, comparison metrics
#ifndef QWALK_ANALYSIS_HPP_
#define QWALK_ANALYSIS_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "qwalk/continuum.hpp"
#include "qwalk/schwarzschild.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// Per-site probability and its checkerboard-filtered version at one time.
// The walk couples even sites to odd sites only, which imprints a 2 dx
// sampling oscillation on densities; the filter (1,2,1)/4 — a two-point pair
// average applied symmetrically — removes that mode exactly. Edge weights
// (3,1)/4 keep the total identical to the raw total.
struct DensitySnapshot {
  std::int64_t time_index = 0;
  double time = 0.0;
  std::vector<double> raw;
  std::vector<double> smoothed;
  double total_raw = 0.0;
  double total_smoothed = 0.0;
};

struct DensityField {
  LatticeGrid grid;
  std::vector<DensitySnapshot> frames;
};

std::vector<double> smooth_pair_average(const std::vector<double>& density);
DensitySnapshot make_density(const WalkState& state);

enum class Branch { kLeft, kRight };

struct PeakSample {
  double time = 0.0;
  double x = 0.0;     // sub-grid position, quadratic refinement
  double mass = 0.0;  // probability on the branch's side of the split
};

// Local density maximum of one branch over time. Samples exist only while
// the branch holds at least 1e-6 of the frame total.
struct PeakTrajectory {
  Branch branch = Branch::kLeft;
  std::vector<PeakSample> samples;
};

// Left/right branch peaks per frame. The split starts at split_x and follows
// the density minimum between the branch peaks once they separate. Ties in
// the argmax break toward smaller X.
std::pair<PeakTrajectory, PeakTrajectory> track_peaks(const DensityField& density,
                                                      double split_x);

struct DeviationSeries {
  std::vector<double> time;
  std::vector<double> deviation;  // |X_peak - X_geodesic|
  double max = 0.0;
  double mean = 0.0;
};

// Peak-vs-geodesic distance over the overlapping time range, linear
// interpolation of the track. Throws std::invalid_argument when the ranges
// are disjoint or either input is empty.
DeviationSeries geodesic_deviation(const PeakTrajectory& peaks,
                                   const GeodesicTrack& track);

struct ConvergenceRow {
  double epsilon = 0.0;
  double l2_error = 0.0;
  double observed_order = 0.0;  // log2(e_prev / e_this); NaN on the first row
};

struct ConvergenceOptions {
  double x0 = 0.0;
  double sigma = 1.0;
  Vec2c spin_mix{Complex(1.0, 0.0), Complex(0.0, 1.0)};
  int pde_refine = 4;    // reference grid spacing h = epsilon / pde_refine
  double pde_cfl = 0.5;  // dt = pde_cfl * h (then snapped to divide t_final)
};

// Walk-vs-PDE L2 density error for each epsilon. The walk runs to t_final,
// is viewed through the two-step stroboscope (so t_final / epsilon must be a
// positive even integer), rotated to the eigenbasis and compared component
// by component against the upwind reference on an aligned finer grid.
// Throws ConfigError for non-smooth fields, epsilon lists that do not halve,
// or incompatible t_final.
std::vector<ConvergenceRow> convergence_study(const CoinAngleField& field,
                                              const std::vector<double>& epsilons,
                                              double t_final,
                                              const ConvergenceOptions& options = {});

// Scalar two-step pedagogy: u_{j+1} = sigma exp(i omega Tscale) u_j, u_0 = 1,
// kept in sign/phase form so the modulus is exactly 1 by construction, and
// v_k = u_{2k} compared against its closed form exp(2 i omega t_{2k}).
struct StroboscopeReport {
  std::vector<Complex> u;
  std::vector<Complex> v;
  double max_modulus_error = 0.0;   // of |u_j| - 1, from the representation
  double max_v_error = 0.0;         // |v_k - exp(2 i omega t_k)|
  Complex fitted_generator{};       // least-squares fit of dv/dt = g v
  double generator_error = 0.0;     // |fitted - 2 i omega|
  double max_phase_jump_error = 0.0;  // consecutive-u phase increments vs
                                      // omega*Tscale (+ pi when sigma = -1)
};

// Requires steps >= 4 and sigma in {-1, +1} (std::invalid_argument).
StroboscopeReport scalar_stroboscope_demo(double omega, double t_scale,
                                          int sigma, int steps);

}  // namespace qwalk

#endif  // QWALK_ANALYSIS_HPP_
