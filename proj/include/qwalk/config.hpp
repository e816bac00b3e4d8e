// qwalk - run configuration shared by the CLI commands
#ifndef QWALK_CONFIG_HPP_
#define QWALK_CONFIG_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/mat2.hpp"

namespace qwalk {

// All simulation parameters, defaulting to the shipped black-hole profile
// (r_g = 150, epsilon = 0.5, Gaussian of width 2.5 centered on 50.5).
// Every key can come from a flat key=value config file or from the CLI flag
// of the same name; the CLI wins.
struct RunConfig {
  // coin-angle field
  std::string field = "schwarzschild";  // constant | smooth-test | schwarzschild
  double theta0 = 0.3;
  double amplitude = 0.2;
  double wavenumber = 0.1;
  double omega = 0.1;
  double rg = 150.0;
  double lambda = 1.0;

  // lattice
  double epsilon = 0.5;
  double xmin = 0.0, xmax = 0.0;  // used only when xauto = false
  bool xauto = true;              // size the grid to the full light cone
  std::int64_t steps = 600;

  // initial data
  double x0 = 50.5;
  double dx0 = 2.5;
  double spin_l_re = 1.0, spin_l_im = 0.0;
  double spin_r_re = 0.0, spin_r_im = 1.0;

  // output
  std::int64_t stride = 10;
  std::string outdir;  // empty: $QWALK_OUTDIR or ./qwalk_out
  bool heatmap = false;
  std::uint64_t seed = 0;

  // geodesics
  double geo_t0 = 0.0;
  double geo_x0 = 100.0;
  int geo_sign = 0;  // -1, +1, or 0 for both
  double geo_dt = 0.05;
  double geo_tmax = 300.0;

  // convergence study
  std::vector<double> epsilons = {0.1, 0.05, 0.025};
  double t_final = 10.0;
  int pde_refine = 4;
  double pde_cfl = 0.5;

  // scalar stroboscope demo
  double demo_omega = 0.3;
  double tscale = 1.0;
  int sigma = -1;
  std::int64_t demo_steps = 50;

  // Throws ConfigError with a field-level message on the first violation.
  void validate() const;

  CoinAngleField make_field() const;
  Vec2c spin_mix() const;
  std::string resolved_outdir() const;

  // Full resolved configuration as ordered key/value pairs; this is the
  // audit-trail header every output file carries.
  std::vector<std::pair<std::string, std::string>> echo(
      const std::string& command) const;
};

}  // namespace qwalk

#endif  // QWALK_CONFIG_HPP_
