#include "qwalk/config.hpp"

#include <cmath>
#include <cstdlib>

#include "qwalk/errors.hpp"
#include "qwalk/io.hpp"

namespace qwalk {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

void RunConfig::validate() const {
  require(field == "constant" || field == "smooth-test" || field == "schwarzschild",
          "field: must be constant, smooth-test or schwarzschild");
  require(std::isfinite(theta0), "theta0: must be finite");
  require(std::isfinite(amplitude), "amplitude: must be finite");
  require(std::isfinite(wavenumber), "wavenumber: must be finite");
  require(std::isfinite(omega), "omega: must be finite");
  require(std::isfinite(rg) && rg > 0.0, "rg: must be positive");
  require(std::isfinite(lambda) && lambda > 0.0, "lambda: must be positive");
  require(std::isfinite(epsilon) && epsilon > 0.0, "epsilon: must be positive");
  if (!xauto) {
    require(std::isfinite(xmin) && std::isfinite(xmax) && xmax > xmin,
            "xmin/xmax: must be finite with xmax > xmin");
  }
  require(steps >= 0, "steps: must be >= 0");
  require(std::isfinite(x0), "x0: must be finite");
  require(std::isfinite(dx0) && dx0 > 0.0, "dx0: must be positive");
  require(std::isfinite(spin_l_re) && std::isfinite(spin_l_im) &&
              std::isfinite(spin_r_re) && std::isfinite(spin_r_im),
          "spin components: must be finite");
  require(spin_mix().norm_sq() > 0.0, "spin components: must not all be zero");
  require(stride >= 1, "stride: must be >= 1");
  require(std::isfinite(geo_t0) && std::isfinite(geo_x0), "geodesic start: must be finite");
  require(geo_sign == -1 || geo_sign == 0 || geo_sign == 1,
          "geo_sign: must be -1, 0 (both) or +1");
  require(std::isfinite(geo_dt) && geo_dt > 0.0, "geo_dt: must be positive");
  require(std::isfinite(geo_tmax) && geo_tmax >= geo_t0, "geo_tmax: must be >= geo_t0");
  require(!epsilons.empty(), "epsilons: must not be empty");
  for (double e : epsilons) {
    require(std::isfinite(e) && e > 0.0, "epsilons: entries must be positive");
  }
  require(std::isfinite(t_final) && t_final > 0.0, "t_final: must be positive");
  require(pde_refine >= 1, "pde_refine: must be >= 1");
  require(std::isfinite(pde_cfl) && pde_cfl > 0.0 && pde_cfl <= 1.0,
          "pde_cfl: must be in (0, 1]");
  require(std::isfinite(demo_omega), "demo_omega: must be finite");
  require(std::isfinite(tscale) && tscale > 0.0, "tscale: must be positive");
  require(sigma == -1 || sigma == 1, "sigma: must be -1 or +1");
  require(demo_steps >= 4, "demo_steps: must be >= 4");
}

CoinAngleField RunConfig::make_field() const {
  if (field == "constant") return CoinAngleField::constant(theta0);
  if (field == "smooth-test") {
    return CoinAngleField::smooth_test(theta0, amplitude, wavenumber, omega);
  }
  if (field == "schwarzschild") {
    return CoinAngleField::schwarzschild_field(rg, lambda);
  }
  throw ConfigError("field: must be constant, smooth-test or schwarzschild");
}

Vec2c RunConfig::spin_mix() const {
  return {Complex(spin_l_re, spin_l_im), Complex(spin_r_re, spin_r_im)};
}

std::string RunConfig::resolved_outdir() const {
  if (!outdir.empty()) return outdir;
  if (const char* env = std::getenv("QWALK_OUTDIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return "qwalk_out";
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo(
    const std::string& command) const {
  auto d = [](double v) { return format_double(v); };
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("command", command);
  kv.emplace_back("field", field);
  kv.emplace_back("theta0", d(theta0));
  kv.emplace_back("amplitude", d(amplitude));
  kv.emplace_back("wavenumber", d(wavenumber));
  kv.emplace_back("omega", d(omega));
  kv.emplace_back("rg", d(rg));
  kv.emplace_back("lambda", d(lambda));
  kv.emplace_back("epsilon", d(epsilon));
  kv.emplace_back("xauto", xauto ? "true" : "false");
  kv.emplace_back("xmin", d(xmin));
  kv.emplace_back("xmax", d(xmax));
  kv.emplace_back("steps", std::to_string(steps));
  kv.emplace_back("x0", d(x0));
  kv.emplace_back("dx0", d(dx0));
  kv.emplace_back("spin_l_re", d(spin_l_re));
  kv.emplace_back("spin_l_im", d(spin_l_im));
  kv.emplace_back("spin_r_re", d(spin_r_re));
  kv.emplace_back("spin_r_im", d(spin_r_im));
  kv.emplace_back("stride", std::to_string(stride));
  kv.emplace_back("outdir", resolved_outdir());
  kv.emplace_back("heatmap", heatmap ? "true" : "false");
  kv.emplace_back("seed", std::to_string(seed));
  kv.emplace_back("geo_t0", d(geo_t0));
  kv.emplace_back("geo_x0", d(geo_x0));
  kv.emplace_back("geo_sign", std::to_string(geo_sign));
  kv.emplace_back("geo_dt", d(geo_dt));
  kv.emplace_back("geo_tmax", d(geo_tmax));
  std::string eps_list;
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (i > 0) eps_list += ",";
    eps_list += d(epsilons[i]);
  }
  kv.emplace_back("epsilons", eps_list);
  kv.emplace_back("t_final", d(t_final));
  kv.emplace_back("pde_refine", std::to_string(pde_refine));
  kv.emplace_back("pde_cfl", d(pde_cfl));
  kv.emplace_back("demo_omega", d(demo_omega));
  kv.emplace_back("tscale", d(tscale));
  kv.emplace_back("sigma", std::to_string(sigma));
  kv.emplace_back("demo_steps", std::to_string(demo_steps));
  return kv;
}

}  // namespace qwalk
