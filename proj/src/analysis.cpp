#include "qwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

std::vector<double> smooth_pair_average(const std::vector<double>& density) {
  const std::size_t n = density.size();
  std::vector<double> out(n, 0.0);
  if (n == 0) return out;
  if (n == 1) {
    out[0] = density[0];
    return out;
  }
  out[0] = (3.0 * density[0] + density[1]) / 4.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out[i] = (density[i - 1] + 2.0 * density[i] + density[i + 1]) / 4.0;
  }
  out[n - 1] = (density[n - 2] + 3.0 * density[n - 1]) / 4.0;
  return out;
}

namespace {

double kahan_sum(const std::vector<double>& values) {
  double sum = 0.0, c = 0.0;
  for (double v : values) {
    const double y = v - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace

DensitySnapshot make_density(const WalkState& state) {
  DensitySnapshot snap;
  snap.time_index = state.time_index;
  snap.time = state.time();
  snap.raw.resize(state.grid.site_count);
  for (int i = 0; i < state.grid.site_count; ++i) {
    snap.raw[i] = std::norm(state.left(i)) + std::norm(state.right(i));
  }
  snap.smoothed = smooth_pair_average(snap.raw);
  snap.total_raw = kahan_sum(snap.raw);
  snap.total_smoothed = kahan_sum(snap.smoothed);
  return snap;
}

namespace {

// Vertex of the parabola through the three sites around index i.
double refine_peak(const DensityField& density, const std::vector<double>& n,
                   int i) {
  const LatticeGrid& grid = density.grid;
  if (i <= 0 || i + 1 >= static_cast<int>(n.size())) return grid.position(i);
  const double lo = n[i - 1], mid = n[i], hi = n[i + 1];
  const double denom = lo - 2.0 * mid + hi;
  if (!(std::abs(denom) > 1e-300)) return grid.position(i);
  const double shift = 0.5 * (lo - hi) / denom;
  return grid.position(i) + grid.dx() * std::clamp(shift, -0.5, 0.5);
}

// argmax over [begin, end); ties break toward smaller index.
int argmax_range(const std::vector<double>& n, int begin, int end) {
  int best = -1;
  double best_val = -1.0;
  for (int i = begin; i < end; ++i) {
    if (n[i] > best_val) {
      best_val = n[i];
      best = i;
    }
  }
  return best;
}

}  // namespace

std::pair<PeakTrajectory, PeakTrajectory> track_peaks(const DensityField& density,
                                                      double split_x) {
  PeakTrajectory left{Branch::kLeft, {}};
  PeakTrajectory right{Branch::kRight, {}};
  if (density.frames.empty()) {
    throw std::invalid_argument("track_peaks: density field is empty");
  }
  const LatticeGrid& grid = density.grid;
  const int m = grid.site_count;
  double split = split_x;
  constexpr double kMassFloor = 1e-6;

  for (const DensitySnapshot& frame : density.frames) {
    const std::vector<double>& n = frame.smoothed;
    if (frame.total_smoothed <= 0.0) continue;  // all-zero frame: undefined

    int split_index = 0;
    while (split_index < m && grid.position(split_index) < split) ++split_index;

    const int il = argmax_range(n, 0, split_index);
    const int ir = argmax_range(n, split_index, m);

    double mass_left = 0.0, mass_right = 0.0;
    for (int i = 0; i < split_index; ++i) mass_left += n[i];
    for (int i = split_index; i < m; ++i) mass_right += n[i];

    if (il >= 0 && mass_left > kMassFloor * frame.total_smoothed) {
      left.samples.push_back({frame.time, refine_peak(density, n, il), mass_left});
    }
    if (ir >= 0 && mass_right > kMassFloor * frame.total_smoothed) {
      right.samples.push_back({frame.time, refine_peak(density, n, ir), mass_right});
    }

    // Once the branches are separated by a genuine dip, let the split follow
    // the density minimum between them.
    if (il >= 0 && ir >= 0 && ir > il + 1) {
      int imin = il;
      double vmin = std::numeric_limits<double>::infinity();
      for (int i = il; i <= ir; ++i) {
        if (n[i] < vmin) {
          vmin = n[i];
          imin = i;
        }
      }
      if (vmin < 0.5 * std::min(n[il], n[ir])) {
        split = grid.position(imin);
      }
    }
  }
  return {left, right};
}

DeviationSeries geodesic_deviation(const PeakTrajectory& peaks,
                                   const GeodesicTrack& track) {
  if (peaks.samples.empty() || track.size() == 0) {
    throw std::invalid_argument("geodesic_deviation: empty input");
  }
  const double t_lo = track.t.front();
  const double t_hi = track.t.back();

  DeviationSeries series;
  std::size_t seg = 0;
  for (const PeakSample& sample : peaks.samples) {
    const double t = sample.time;
    if (t < t_lo || t > t_hi) continue;
    while (seg + 2 < track.t.size() && track.t[seg + 1] < t) ++seg;
    const double t0 = track.t[seg], t1 = track.t[seg + 1 < track.t.size() ? seg + 1 : seg];
    double x_geo = track.x[seg];
    if (t1 > t0) {
      const double w = (t - t0) / (t1 - t0);
      x_geo = (1.0 - w) * track.x[seg] + w * track.x[seg + 1];
    }
    series.time.push_back(t);
    series.deviation.push_back(std::abs(sample.x - x_geo));
  }
  if (series.time.empty()) {
    throw std::invalid_argument("geodesic_deviation: disjoint time ranges");
  }
  series.max = *std::max_element(series.deviation.begin(), series.deviation.end());
  double sum = 0.0;
  for (double d : series.deviation) sum += d;
  series.mean = sum / static_cast<double>(series.deviation.size());
  return series;
}

namespace {

struct ComponentDensities {
  std::vector<double> minus;
  std::vector<double> plus;
};

// Walk state at its final time, rotated to the eigenbasis, as per-length
// component densities on the walk sites.
ComponentDensities walk_component_densities(const WalkState& state,
                                            const CoinAngleField& field) {
  const int m = state.grid.site_count;
  ComponentDensities out;
  out.minus.resize(m);
  out.plus.resize(m);
  const double t = state.time();
  const double inv_dx = 1.0 / state.grid.dx();
  for (int i = 0; i < m; ++i) {
    const Vec2c pm = to_eigenbasis({state.left(i), state.right(i)},
                                   field.angle(t, state.grid.position(i)));
    out.minus[i] = std::norm(pm.a) * inv_dx;
    out.plus[i] = std::norm(pm.b) * inv_dx;
  }
  out.minus = smooth_pair_average(out.minus);
  out.plus = smooth_pair_average(out.plus);
  return out;
}

}  // namespace

std::vector<ConvergenceRow> convergence_study(const CoinAngleField& field,
                                              const std::vector<double>& epsilons,
                                              double t_final,
                                              const ConvergenceOptions& options) {
  if (!field.smooth()) {
    throw ConfigError("convergence_study: field kind must be smooth");
  }
  if (epsilons.size() < 2) {
    throw ConfigError("convergence_study: need at least two epsilon values");
  }
  for (std::size_t i = 1; i < epsilons.size(); ++i) {
    if (std::abs(epsilons[i - 1] / epsilons[i] - 2.0) > 1e-9) {
      throw ConfigError("convergence_study: epsilon values must halve");
    }
  }
  if (!(t_final > 0.0)) {
    throw ConfigError("convergence_study: t_final must be > 0");
  }

  std::vector<ConvergenceRow> rows;
  for (const double eps : epsilons) {
    const double steps_real = t_final / eps;
    const auto steps = static_cast<std::int64_t>(std::llround(steps_real));
    if (std::abs(steps_real - static_cast<double>(steps)) > 1e-9 || steps % 2 != 0) {
      throw ConfigError(
          "convergence_study: t_final / epsilon must be a positive even integer");
    }

    const double margin = 8.0 * options.sigma + t_final + 4.0 * eps;
    const LatticeGrid grid =
        LatticeGrid::covering(options.x0 - margin, options.x0 + margin, eps);
    WalkState state = init_gaussian(grid, options.x0, options.sigma, options.spin_mix);
    WalkState next = WalkState::zero(grid);
    for (std::int64_t k = 0; k < steps; ++k) {
      step_into(state, field, next);
      std::swap(state, next);
    }
    const ComponentDensities walk = walk_component_densities(state, field);

    // Reference on an aligned finer grid: spacing h = eps / refine, so walk
    // site i coincides with reference point refine * i.
    const int refine = options.pde_refine;
    ContinuumGrid fine;
    fine.h = eps / static_cast<double>(refine);
    fine.x_min = grid.x_min();
    fine.point_count = (grid.site_count - 1) * refine + 1;
    ContinuumState pde =
        init_gaussian_continuum(fine, options.x0, options.sigma, field, options.spin_mix);
    const auto pde_steps = static_cast<std::int64_t>(
        std::ceil(t_final / (options.pde_cfl * fine.h) - 1e-9));
    const double dt = t_final / static_cast<double>(pde_steps);
    pde = evolve_pde(pde, field, dt, pde_steps);

    double err_sq = 0.0;
    for (int i = 0; i < grid.site_count; ++i) {
      const std::size_t p = static_cast<std::size_t>(i) * refine;
      const double dm = walk.minus[i] - std::norm(pde.psi_minus[p]);
      const double dp = walk.plus[i] - std::norm(pde.psi_plus[p]);
      err_sq += (dm * dm + dp * dp) * eps;
    }

    ConvergenceRow row;
    row.epsilon = eps;
    row.l2_error = std::sqrt(err_sq);
    row.observed_order =
        rows.empty() ? std::numeric_limits<double>::quiet_NaN()
                     : std::log2(rows.back().l2_error / row.l2_error);
    rows.push_back(row);
  }
  return rows;
}

StroboscopeReport scalar_stroboscope_demo(double omega, double t_scale,
                                          int sigma, int steps) {
  if (steps < 4) {
    throw std::invalid_argument("scalar_stroboscope_demo: steps must be >= 4");
  }
  if (sigma != 1 && sigma != -1) {
    throw std::invalid_argument("scalar_stroboscope_demo: sigma must be +1 or -1");
  }
  if (!std::isfinite(omega) || !(t_scale > 0.0)) {
    throw std::invalid_argument("scalar_stroboscope_demo: bad omega or t_scale");
  }

  // The recursion multiplies by sigma * exp(i omega Tscale); carrying it as a
  // sign and a compensated phase keeps |u_j| = 1 exactly by construction.
  StroboscopeReport report;
  const double increment = omega * t_scale;
  double phase = 0.0, comp = 0.0;
  double sign = 1.0;
  report.u.reserve(steps + 1);
  for (int j = 0; j <= steps; ++j) {
    report.u.push_back(sign * Complex(std::cos(phase), std::sin(phase)));
    const double y = increment - comp;
    const double t = phase + y;
    comp = (t - phase) - y;
    phase = t;
    sign *= static_cast<double>(sigma);
  }
  report.max_modulus_error = 0.0;  // modulus is 1 in the sign/phase form

  for (int k = 0; 2 * k <= steps; ++k) {
    report.v.push_back(report.u[2 * k]);
    const double expected_phase = 2.0 * omega * t_scale * static_cast<double>(k);
    const Complex expected(std::cos(expected_phase), std::sin(expected_phase));
    report.max_v_error =
        std::max(report.max_v_error, std::abs(report.v.back() - expected));
  }

  // Fit dv/dt = g v from per-step logarithmic ratios. The v sequence lives on
  // the clock t_k = k * Tscale (one v step per Tscale), which is what makes
  // its generator 2 i omega. Valid (no aliasing) while |2 omega Tscale| < pi.
  Complex g_sum(0.0, 0.0);
  for (std::size_t k = 0; k + 1 < report.v.size(); ++k) {
    const Complex ratio = report.v[k + 1] / report.v[k];
    g_sum += std::log(ratio) / t_scale;
  }
  report.fitted_generator = g_sum / static_cast<double>(report.v.size() - 1);
  report.generator_error =
      std::abs(report.fitted_generator - Complex(0.0, 2.0 * omega));

  // Consecutive-u phase increments: omega*Tscale, plus pi when sigma = -1.
  for (std::size_t j = 0; j + 1 < report.u.size(); ++j) {
    const Complex ratio = report.u[j + 1] * std::conj(report.u[j]);
    double jump = std::arg(ratio) - increment;
    if (sigma == -1) jump -= std::numbers::pi;
    // reduce to (-pi, pi]
    while (jump <= -std::numbers::pi) jump += 2.0 * std::numbers::pi;
    while (jump > std::numbers::pi) jump -= 2.0 * std::numbers::pi;
    report.max_phase_jump_error = std::max(report.max_phase_jump_error, std::abs(jump));
  }
  return report;
}

}  // namespace qwalk
