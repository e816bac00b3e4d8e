// qwalk - command-line driver
//
// Subcommands: walk, figure1, converge, geodesic, strobe-demo. Every flag
// mirrors a RunConfig key and can also come from a flat key=value config file
// (--config); explicit flags win. QWALK_OUTDIR selects the default output
// directory. Exit codes: 0 success, 2 configuration error, 3 runtime guard.
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qwalk/commands.hpp"
#include "qwalk/config.hpp"
#include "qwalk/errors.hpp"

namespace {

void bind_common(CLI::App* cmd, qwalk::RunConfig& cfg) {
  cmd->set_config("--config", "", "flat key=value configuration file");
  cmd->add_option("--field", cfg.field,
                  "coin-angle field: constant | smooth-test | schwarzschild");
  cmd->add_option("--theta0", cfg.theta0, "constant / smooth-test base angle");
  cmd->add_option("--amplitude", cfg.amplitude, "smooth-test amplitude");
  cmd->add_option("--wavenumber", cfg.wavenumber, "smooth-test wavenumber");
  cmd->add_option("--omega", cfg.omega, "smooth-test frequency");
  cmd->add_option("--rg", cfg.rg, "Schwarzschild radius (lattice units)");
  cmd->add_option("--lambda", cfg.lambda, "coordinate scaling");
  cmd->add_option("--epsilon", cfg.epsilon, "lattice step (dt = dx)");
  cmd->add_option("--xmin", cfg.xmin, "grid lower edge (with --xauto=false)");
  cmd->add_option("--xmax", cfg.xmax, "grid upper edge (with --xauto=false)");
  cmd->add_option("--xauto", cfg.xauto, "size the grid to the light cone");
  cmd->add_option("--steps", cfg.steps, "number of walk steps");
  cmd->add_option("--x0", cfg.x0, "initial Gaussian center");
  cmd->add_option("--dx0", cfg.dx0, "initial Gaussian width");
  cmd->add_option("--spin_l_re", cfg.spin_l_re, "left spin component, real part");
  cmd->add_option("--spin_l_im", cfg.spin_l_im, "left spin component, imag part");
  cmd->add_option("--spin_r_re", cfg.spin_r_re, "right spin component, real part");
  cmd->add_option("--spin_r_im", cfg.spin_r_im, "right spin component, imag part");
  cmd->add_option("--stride", cfg.stride, "snapshot stride");
  cmd->add_option("--outdir", cfg.outdir, "output directory");
  cmd->add_option("--heatmap", cfg.heatmap, "also write density.pgm");
  cmd->add_option("--seed", cfg.seed, "random seed (echoed into outputs)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum walk simulator with space-time dependent coin angles"};
  app.require_subcommand(1);

  qwalk::RunConfig cfg;

  CLI::App* walk = app.add_subcommand("walk", "run the walk, write densities");
  bind_common(walk, cfg);

  CLI::App* figure1 = app.add_subcommand(
      "figure1", "black-hole demonstration panels (a: deep interior start, "
                 "b: interior, c: horizon start, d: exterior start)");
  std::string panel = "b";
  figure1->add_option("panel", panel, "panel: a | b | c | d")->required();
  bind_common(figure1, cfg);

  CLI::App* converge =
      app.add_subcommand("converge", "walk-vs-transport-reference error table");
  bind_common(converge, cfg);
  converge->add_option("--epsilons", cfg.epsilons, "halving lattice steps");
  converge->add_option("--t_final", cfg.t_final, "comparison time");
  converge->add_option("--pde_refine", cfg.pde_refine,
                       "reference grid refinement (h = epsilon / refine)");
  converge->add_option("--pde_cfl", cfg.pde_cfl, "reference solver CFL number");

  CLI::App* geodesic = app.add_subcommand("geodesic", "integrate null geodesics");
  bind_common(geodesic, cfg);
  geodesic->add_option("--geo_t0", cfg.geo_t0, "start time");
  geodesic->add_option("--geo_x0", cfg.geo_x0, "start position");
  geodesic->add_option("--geo_sign", cfg.geo_sign, "-1, +1 or 0 for both");
  geodesic->add_option("--geo_dt", cfg.geo_dt, "integrator step");
  geodesic->add_option("--geo_tmax", cfg.geo_tmax, "final time");

  CLI::App* strobe = app.add_subcommand("strobe-demo",
                                        "scalar two-step sequence demonstration");
  bind_common(strobe, cfg);
  strobe->add_option("--demo_omega", cfg.demo_omega, "frequency");
  strobe->add_option("--tscale", cfg.tscale, "time scale");
  strobe->add_option("--sigma", cfg.sigma, "per-step sign, -1 or +1");
  strobe->add_option("--demo_steps", cfg.demo_steps, "sequence length");

  // converge defaults to a smooth field; the black-hole profile stays the
  // default everywhere else.
  converge->preparse_callback([&cfg](std::size_t) {
    cfg.field = "constant";
    cfg.theta0 = 0.78539816339744828;
    cfg.x0 = 0.0;
    cfg.dx0 = 1.0;
  });

  try {
    app.parse(argc, argv);
    if (walk->parsed()) {
      qwalk::cmd_walk(cfg, std::cout);
    } else if (figure1->parsed()) {
      if (panel.size() != 1 || panel[0] < 'a' || panel[0] > 'd') {
        throw qwalk::ConfigError("figure1: panel must be one of a, b, c, d");
      }
      qwalk::RunConfig panel_cfg = qwalk::figure1_panel_config(panel[0], cfg);
      // Explicit flags override the panel defaults.
      if (figure1->count("--lambda") > 0) panel_cfg.lambda = cfg.lambda;
      if (figure1->count("--x0") > 0) panel_cfg.x0 = cfg.x0;
      if (figure1->count("--steps") > 0) panel_cfg.steps = cfg.steps;
      if (figure1->count("--stride") > 0) panel_cfg.stride = cfg.stride;
      if (figure1->count("--field") > 0) panel_cfg.field = cfg.field;
      qwalk::cmd_figure1(panel[0], panel_cfg, std::cout);
    } else if (converge->parsed()) {
      qwalk::cmd_converge(cfg, std::cout);
    } else if (geodesic->parsed()) {
      qwalk::cmd_geodesic(cfg, std::cout);
    } else if (strobe->parsed()) {
      qwalk::cmd_strobe_demo(cfg, std::cout);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qwalk::GuardError& e) {
    std::cerr << "guard tripped: " << e.what() << "\n";
    return 3;
  } catch (const qwalk::CflError& e) {
    std::cerr << "guard tripped: " << e.what() << "\n";
    return 3;
  } catch (const qwalk::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
