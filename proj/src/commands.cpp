#include "qwalk/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qwalk/analysis.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/io.hpp"
#include "qwalk/schwarzschild.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

LatticeGrid make_grid(const RunConfig& config) {
  if (!config.xauto) {
    return LatticeGrid::covering(config.xmin, config.xmax, config.epsilon);
  }
  // Nothing outruns lattice speed 1, so the light cone of the initial
  // support plus a small pad can never trip the boundary guard.
  const double horizon = static_cast<double>(config.steps) * config.epsilon;
  const double reach = 8.0 * config.dx0 + horizon + 4.0 * config.epsilon + 1.0;
  return LatticeGrid::covering(config.x0 - reach, config.x0 + reach, config.epsilon);
}

std::string snapshot_name(std::int64_t j) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "snapshot_%06lld.tsv", static_cast<long long>(j));
  return buf;
}

void write_snapshot(const std::string& path, const KeyValues& header,
                    const LatticeGrid& grid, const DensitySnapshot& snap) {
  TsvWriter tsv(path, header, {"X", "n_raw", "n_smoothed"});
  for (int i = 0; i < grid.site_count; ++i) {
    tsv.row(std::vector<double>{grid.position(i), snap.raw[i], snap.smoothed[i]});
  }
}

void write_density_pgm(const std::string& path, KeyValues header,
                       const LatticeGrid& grid,
                       const std::vector<DensitySnapshot>& frames) {
  if (frames.empty()) return;
  const std::size_t cols = static_cast<std::size_t>(grid.site_count);
  std::vector<double> data;
  data.reserve(frames.size() * cols);
  for (const DensitySnapshot& f : frames) {
    data.insert(data.end(), f.smoothed.begin(), f.smoothed.end());
  }
  header.emplace_back("rows_time_min", format_double(frames.front().time));
  header.emplace_back("rows_time_max", format_double(frames.back().time));
  header.emplace_back("cols_x_min", format_double(grid.x_min()));
  header.emplace_back("cols_x_max", format_double(grid.x_max()));
  write_pgm16(path, frames.size(), cols, data, header);
}

std::optional<double> track_at(const GeodesicTrack& track, double t) {
  if (track.size() == 0 || t < track.t.front() || t > track.t.back()) {
    return std::nullopt;
  }
  const auto it = std::upper_bound(track.t.begin(), track.t.end(), t);
  const std::size_t hi = std::min<std::size_t>(
      static_cast<std::size_t>(it - track.t.begin()), track.t.size() - 1);
  if (hi == 0) return track.x.front();
  const std::size_t lo = hi - 1;
  const double span = track.t[hi] - track.t[lo];
  if (!(span > 0.0)) return track.x[lo];
  const double w = (t - track.t[lo]) / span;
  return (1.0 - w) * track.x[lo] + w * track.x[hi];
}

std::optional<double> peak_at(const PeakTrajectory& peaks, double t) {
  for (const PeakSample& s : peaks.samples) {
    if (std::abs(s.time - t) < 1e-9) return s.x;
  }
  return std::nullopt;
}

const char* geodesic_end_name(GeodesicEnd end) {
  switch (end) {
    case GeodesicEnd::kReachedSingularity: return "reached-singularity";
    case GeodesicEnd::kLeftGrid: return "left-grid";
    case GeodesicEnd::kMaxTime: return "max-time";
  }
  return "unknown";
}

void write_geodesic(const std::string& path, const KeyValues& header,
                    const SchwarzschildParams& params, const GeodesicTrack& track) {
  KeyValues full = header;
  full.emplace_back("sign", std::to_string(track.sign));
  full.emplace_back("termination", geodesic_end_name(track.end));
  TsvWriter tsv(path, full, {"T", "X", "r", "y", "dev_horizon"});
  for (std::size_t k = 0; k < track.size(); ++k) {
    const double t = track.t[k];
    const double x = track.x[k];
    const double y = x - singularity_position(params, t);
    const double r = y >= 0.0 ? bh_radius(params, t, x) : kNan;
    tsv.row(std::vector<double>{t, x, r, y, x - horizon_position(params, t)});
  }
}

// One stub per panel directory; reads the TSV/PGM outputs next to it.
constexpr const char* kPlotStub = R"(#!/usr/bin/env python3
"""Quick-look plot for one panel directory (requires numpy + matplotlib)."""
import numpy as np
import matplotlib.pyplot as plt

data = np.genfromtxt("panel.tsv", names=True, comments=None, skip_header=1,
                     delimiter="\t")
fig, ax = plt.subplots(figsize=(5, 7))
with open("density.pgm", "rb") as fh:
    assert fh.readline().strip() == b"P5"
    meta = {}
    line = fh.readline()
    while line.startswith(b"#"):
        for token in line[1:].split():
            if b"=" in token:
                key, value = token.split(b"=", 1)
                meta[key.decode()] = value.decode()
        line = fh.readline()
    cols, rows = map(int, line.split())
    assert fh.readline().strip() == b"65535"
    raster = np.frombuffer(fh.read(rows * cols * 2), dtype=">u2")
extent = [float(meta["cols_x_min"]), float(meta["cols_x_max"]),
          float(meta["rows_time_min"]), float(meta["rows_time_max"])]
ax.imshow(raster.reshape(rows, cols), origin="lower", aspect="auto",
          extent=extent, cmap="magma")
for name, style in [("x_geo_minus", "c-"), ("x_geo_plus", "c-"),
                    ("x_singularity", "w:"), ("x_horizon", "w--"),
                    ("x_domain_boundary", "r-")]:
    ax.plot(data[name], data["T"], style, lw=1)
ax.set_xlabel("X")
ax.set_ylabel("T")
fig.tight_layout()
fig.savefig("panel.png", dpi=160)
)";

void write_plot_stub(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << kPlotStub;
}

struct WalkArtifacts {
  LatticeGrid grid;
  DensityField strobe;  // frames at the two-step cadence (figure1 only)
};

}  // namespace

void cmd_walk(const RunConfig& config, std::ostream& log) {
  config.validate();
  const CoinAngleField field = config.make_field();
  const LatticeGrid grid = make_grid(config);
  const std::string dir = config.resolved_outdir();
  ensure_directory(dir);
  const KeyValues header = config.echo("walk");

  WalkState initial = init_gaussian(grid, config.x0, config.dx0, config.spin_mix());

  TsvWriter probability(dir + "/probability.tsv", header, {"j", "T", "pi"});
  TsvWriter manifest(dir + "/snapshots.tsv", header, {"j", "T", "pi", "file"});
  std::vector<DensitySnapshot> frames;

  WalkRunOptions options;
  options.snapshot_stride = 1;  // observe every step for the pi series
  run_walk(std::move(initial), field, config.steps, options,
           [&](const WalkState& state) {
             const double pi = total_probability(state);
             const std::string j = std::to_string(state.time_index);
             probability.row({j, format_double(state.time()), format_double(pi)});
             if (state.time_index % config.stride == 0 ||
                 state.time_index == config.steps) {
               const DensitySnapshot snap = make_density(state);
               const std::string name = snapshot_name(state.time_index);
               write_snapshot(dir + "/" + name, header, grid, snap);
               manifest.row({j, format_double(state.time()), format_double(pi), name});
               frames.push_back(std::move(snap));
             }
           });

  if (config.heatmap) {
    write_density_pgm(dir + "/density.pgm", header, grid, frames);
  }
  log << "walk: " << config.steps << " steps on " << grid.site_count
      << " sites -> " << dir << "\n";
}

RunConfig figure1_panel_config(char panel, const RunConfig& base) {
  RunConfig cfg = base;
  cfg.field = "schwarzschild";
  cfg.xauto = true;
  switch (panel) {
    case 'a':  // interior start, domain boundary inside the horizon
      cfg.lambda = 1.5;
      cfg.x0 = 50.5;
      cfg.steps = 240;
      break;
    case 'b':  // interior start, domain boundary on the horizon
      cfg.lambda = 1.0;
      cfg.x0 = 50.5;
      cfg.steps = 340;
      break;
    case 'c':  // start on the horizon
      cfg.lambda = 1.0;
      cfg.x0 = 100.0;
      cfg.steps = 320;
      break;
    case 'd':  // start outside the horizon; the right branch escapes
      cfg.lambda = 0.7;
      cfg.x0 = 90.0;
      cfg.steps = 1700;
      break;
    default:
      throw ConfigError("figure1: panel must be one of a, b, c, d");
  }
  cfg.stride = std::max<std::int64_t>(2, 2 * (cfg.steps / 40));
  return cfg;
}

void cmd_figure1(char panel, RunConfig config, std::ostream& log) {
  config.validate();
  if (config.field != "schwarzschild") {
    throw ConfigError("figure1: field must be schwarzschild");
  }
  const CoinAngleField field = config.make_field();
  const SchwarzschildParams params{config.rg, config.lambda};
  const LatticeGrid grid = make_grid(config);
  const std::string dir =
      config.resolved_outdir() + "/panel_" + std::string(1, panel);
  ensure_directory(dir);
  const KeyValues header = config.echo(std::string("figure1-") + panel);

  WalkState initial = init_gaussian(grid, config.x0, config.dx0, config.spin_mix());

  TsvWriter probability(dir + "/probability.tsv", header, {"j", "T", "pi"});
  TsvWriter manifest(dir + "/snapshots.tsv", header, {"j", "T", "pi", "file"});
  DensityField strobe;
  strobe.grid = grid;

  WalkRunOptions options;
  options.snapshot_stride = 1;
  run_walk(std::move(initial), field, config.steps, options,
           [&](const WalkState& state) {
             const double pi = total_probability(state);
             const std::string j = std::to_string(state.time_index);
             probability.row({j, format_double(state.time()), format_double(pi)});
             const bool strobe_frame = state.time_index % 2 == 0;
             const bool file_frame = state.time_index % config.stride == 0 ||
                                     state.time_index == config.steps;
             if (!strobe_frame && !file_frame) return;
             DensitySnapshot snap = make_density(state);
             if (file_frame) {
               const std::string name = snapshot_name(state.time_index);
               write_snapshot(dir + "/" + name, header, grid, snap);
               manifest.row({j, format_double(state.time()), format_double(pi), name});
             }
             if (strobe_frame) strobe.frames.push_back(std::move(snap));
           });

  write_density_pgm(dir + "/density.pgm", header, grid, strobe.frames);

  const double t_max = static_cast<double>(config.steps) * config.epsilon;
  GeodesicWindow window;
  window.x_min = grid.x_min();
  window.x_max = grid.x_max();
  const GeodesicTrack plus = integrate_null_geodesic(params, 0.0, config.x0, +1,
                                                     config.geo_dt, t_max, window);
  const GeodesicTrack minus = integrate_null_geodesic(params, 0.0, config.x0, -1,
                                                      config.geo_dt, t_max, window);
  write_geodesic(dir + "/geodesic_plus.tsv", header, params, plus);
  write_geodesic(dir + "/geodesic_minus.tsv", header, params, minus);

  const auto [peak_left, peak_right] = track_peaks(strobe, config.x0);
  auto write_peaks = [&](const char* name, const PeakTrajectory& peaks) {
    TsvWriter tsv(dir + "/" + name, header, {"T", "X_peak", "branch_mass"});
    for (const PeakSample& s : peaks.samples) {
      tsv.row(std::vector<double>{s.time, s.x, s.mass});
    }
  };
  write_peaks("peaks_left.tsv", peak_left);
  write_peaks("peaks_right.tsv", peak_right);

  auto write_deviation = [&](const char* name, const PeakTrajectory& peaks,
                             const GeodesicTrack& track) {
    TsvWriter tsv(dir + "/" + name, header, {"T", "deviation"});
    if (peaks.samples.empty() || track.size() == 0) return;
    const DeviationSeries series = geodesic_deviation(peaks, track);
    for (std::size_t i = 0; i < series.time.size(); ++i) {
      tsv.row(std::vector<double>{series.time[i], series.deviation[i]});
    }
  };
  write_deviation("deviation_left.tsv", peak_left, minus);
  write_deviation("deviation_right.tsv", peak_right, plus);

  TsvWriter combined(dir + "/panel.tsv", header,
                     {"T", "x_peak_left", "x_peak_right", "x_geo_minus",
                      "x_geo_plus", "x_singularity", "x_horizon",
                      "x_domain_boundary", "dev_left", "dev_right"});
  for (const DensitySnapshot& frame : strobe.frames) {
    const double t = frame.time;
    const auto pl = peak_at(peak_left, t);
    const auto pr = peak_at(peak_right, t);
    const auto gm = track_at(minus, t);
    const auto gp = track_at(plus, t);
    auto ornan = [](const std::optional<double>& v) { return v ? *v : kNan; };
    const double dev_l = (pl && gm) ? std::abs(*pl - *gm) : kNan;
    const double dev_r = (pr && gp) ? std::abs(*pr - *gp) : kNan;
    combined.row(std::vector<double>{
        t, ornan(pl), ornan(pr), ornan(gm), ornan(gp),
        singularity_position(params, t), horizon_position(params, t),
        domain_boundary_position(params, t), dev_l, dev_r});
  }

  write_plot_stub(dir + "/plot_panel.py");
  log << "figure1 panel " << panel << ": " << config.steps << " steps on "
      << grid.site_count << " sites -> " << dir << "\n";
}

void cmd_converge(const RunConfig& config, std::ostream& log) {
  config.validate();
  const CoinAngleField field = config.make_field();
  if (!field.smooth()) {
    throw ConfigError("converge: field must be constant or smooth-test");
  }
  ConvergenceOptions options;
  options.x0 = config.x0;
  options.sigma = config.dx0;
  options.spin_mix = config.spin_mix();
  options.pde_refine = config.pde_refine;
  options.pde_cfl = config.pde_cfl;
  const std::vector<ConvergenceRow> rows =
      convergence_study(field, config.epsilons, config.t_final, options);

  const std::string dir = config.resolved_outdir();
  ensure_directory(dir);
  TsvWriter tsv(dir + "/convergence.tsv", config.echo("converge"),
                {"epsilon", "l2_error", "observed_order"});
  for (const ConvergenceRow& row : rows) {
    tsv.row(std::vector<double>{row.epsilon, row.l2_error, row.observed_order});
    log << "converge: epsilon=" << format_double(row.epsilon)
        << " l2_error=" << format_double(row.l2_error)
        << " order=" << format_double(row.observed_order) << "\n";
  }
}

void cmd_geodesic(const RunConfig& config, std::ostream& log) {
  config.validate();
  const SchwarzschildParams params{config.rg, config.lambda};
  if (config.geo_x0 < singularity_position(params, config.geo_t0)) {
    throw ConfigError(
        "geodesic: start violates X >= lambda*T (beyond the singularity)");
  }
  const std::string dir = config.resolved_outdir();
  ensure_directory(dir);
  const KeyValues header = config.echo("geodesic");

  std::vector<int> signs;
  if (config.geo_sign >= 0) signs.push_back(+1);
  if (config.geo_sign <= 0) signs.push_back(-1);
  for (int sign : signs) {
    const GeodesicTrack track =
        integrate_null_geodesic(params, config.geo_t0, config.geo_x0, sign,
                                config.geo_dt, config.geo_tmax);
    const std::string name =
        sign > 0 ? "geodesic_plus.tsv" : "geodesic_minus.tsv";
    write_geodesic(dir + "/" + name, header, params, track);
    log << "geodesic sign=" << sign << ": " << track.size() << " samples, "
        << geodesic_end_name(track.end) << " -> " << dir << "/" << name << "\n";
  }
}

void cmd_strobe_demo(const RunConfig& config, std::ostream& log) {
  config.validate();
  const StroboscopeReport report = scalar_stroboscope_demo(
      config.demo_omega, config.tscale, config.sigma,
      static_cast<int>(config.demo_steps));

  const std::string dir = config.resolved_outdir();
  ensure_directory(dir);
  KeyValues header = config.echo("strobe-demo");
  header.emplace_back("max_modulus_error", format_double(report.max_modulus_error));
  header.emplace_back("max_v_error", format_double(report.max_v_error));
  header.emplace_back("fitted_generator_re",
                      format_double(report.fitted_generator.real()));
  header.emplace_back("fitted_generator_im",
                      format_double(report.fitted_generator.imag()));
  header.emplace_back("generator_error", format_double(report.generator_error));
  header.emplace_back("max_phase_jump_error",
                      format_double(report.max_phase_jump_error));

  TsvWriter tsv(dir + "/strobe_demo.tsv", header,
                {"j", "t", "u_re", "u_im", "u_abs"});
  for (std::size_t j = 0; j < report.u.size(); ++j) {
    tsv.row(std::vector<double>{static_cast<double>(j),
                                static_cast<double>(j) * config.tscale,
                                report.u[j].real(), report.u[j].imag(),
                                std::abs(report.u[j])});
  }
  log << "strobe-demo: max |v - exp(2 i omega t)| = "
      << format_double(report.max_v_error)
      << ", generator error = " << format_double(report.generator_error) << "\n";
}

}  // namespace qwalk
