#include "qwalk/continuum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qwalk/errors.hpp"

namespace qwalk {

SpinBasisRotation::SpinBasisRotation(double theta_value) : theta(theta_value) {
  const double c = std::cos(0.5 * theta_value);
  const double s = std::sin(0.5 * theta_value);
  matrix = {Complex(0.0, c), Complex(0.0, s),
            Complex(-s, 0.0), Complex(c, 0.0)};
}

Mat2c coin_p_matrix(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {Complex(-c, 0.0), Complex(0.0, s), Complex(0.0, -s), Complex(c, 0.0)};
}

Mat2c coin_q_matrix(double theta, double theta_t, double theta_x) {
  const double s2 = std::sin(2.0 * theta);
  const double c2 = std::cos(2.0 * theta);
  return {Complex(-theta_x * 0.5 * s2, 0.0),
          Complex(0.0, 0.5 * (theta_t - theta_x * c2)),
          Complex(0.0, 0.5 * (theta_t + theta_x * c2)),
          Complex(theta_x * 0.5 * s2, 0.0)};
}

Vec2c to_eigenbasis(const Vec2c& lr, double theta) {
  return SpinBasisRotation(theta).matrix.adjoint().apply(lr);
}

Vec2c from_eigenbasis(const Vec2c& pm, double theta) {
  return SpinBasisRotation(theta).matrix.apply(pm);
}

double Metric2D::g_xx(double t, double x) const {
  const double c = field.cos_sin(t, x).first;
  return -1.0 / (c * c);
}

double Metric2D::det(double t, double x) const {
  return g_tt(t, x) * g_xx(t, x);
}

double Metric2D::volume_weight(double t, double x) const {
  return std::sqrt(-det(t, x));
}

std::pair<double, double> Diad::e0(double, double) const { return {1.0, 0.0}; }

std::pair<double, double> Diad::e1(double t, double x) const {
  return {0.0, field.cos_sin(t, x).first};
}

Mat2c Diad::gamma0() {
  return {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(1.0, 0.0), Complex(0.0, 0.0)};
}

Mat2c Diad::gamma1() {
  return {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(-1.0, 0.0), Complex(0.0, 0.0)};
}

double diad_orthonormality_check(
    const CoinAngleField& field,
    const std::vector<std::pair<double, double>>& points) {
  const Metric2D metric{field};
  const Diad diad{field};
  double worst = 0.0;
  for (const auto& [t, x] : points) {
    const auto e0 = diad.e0(t, x);
    const auto e1 = diad.e1(t, x);
    const double gtt = metric.g_tt(t, x);
    const double gxx = metric.g_xx(t, x);
    auto inner = [&](const std::pair<double, double>& u,
                     const std::pair<double, double>& v) {
      return gtt * u.first * v.first + gxx * u.second * v.second;
    };
    worst = std::max(worst, std::abs(inner(e0, e0) - 1.0));
    worst = std::max(worst, std::abs(inner(e1, e1) + 1.0));
    worst = std::max(worst, std::abs(inner(e0, e1)));
  }
  return worst;
}

ContinuumState ContinuumState::zero(const ContinuumGrid& grid, double time) {
  ContinuumState state;
  state.grid = grid;
  state.time = time;
  state.psi_minus.assign(grid.point_count, Complex(0.0, 0.0));
  state.psi_plus.assign(grid.point_count, Complex(0.0, 0.0));
  return state;
}

ContinuumState init_gaussian_continuum(const ContinuumGrid& grid, double x0,
                                       double sigma,
                                       const CoinAngleField& field,
                                       Vec2c spin_mix) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("init_gaussian_continuum: sigma must be > 0");
  }
  const double mix_norm = std::sqrt(spin_mix.norm_sq());
  if (!(mix_norm > 0.0)) {
    throw std::invalid_argument("init_gaussian_continuum: spin mix must be nonzero");
  }
  // |psi|^2 integrates to 1 analytically; the trapezoid total then matches to
  // spectral accuracy for a resolved Gaussian.
  const double norm = std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25);
  ContinuumState state = ContinuumState::zero(grid);
  for (int i = 0; i < grid.point_count; ++i) {
    const double x = grid.position(i);
    const double dx = x - x0;
    const double amp = norm * std::exp(-dx * dx / (4.0 * sigma * sigma));
    const Vec2c lr{amp * spin_mix.a / mix_norm, amp * spin_mix.b / mix_norm};
    const Vec2c pm = to_eigenbasis(lr, field.angle(0.0, x));
    state.psi_minus[i] = pm.a;
    state.psi_plus[i] = pm.b;
  }
  return state;
}

namespace {

double trapezoid(const ContinuumGrid& grid, const std::vector<double>& f) {
  double sum = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) sum += f[i];
  return sum * grid.h;
}

}  // namespace

double continuum_probability(const ContinuumState& state) {
  std::vector<double> density(state.grid.point_count);
  for (int i = 0; i < state.grid.point_count; ++i) {
    density[i] = std::norm(state.psi_minus[i]) + std::norm(state.psi_plus[i]);
  }
  return trapezoid(state.grid, density);
}

double dirac_norm(const ContinuumState& state, const CoinAngleField& field) {
  std::vector<double> density(state.grid.point_count);
  for (int i = 0; i < state.grid.point_count; ++i) {
    const double x = state.grid.position(i);
    const double c = field.cos_sin(state.time, x).first;
    if (!(c > 0.0)) {
      throw std::domain_error("dirac_norm: cos(theta) must be positive on the grid");
    }
    const double root = std::sqrt(c);
    // Phi = Psi sqrt(cos theta); weight D_G X = dX / cos theta.
    const double phi_sq = std::norm(state.psi_minus[i] * root) +
                          std::norm(state.psi_plus[i] * root);
    density[i] = phi_sq / c;
  }
  return trapezoid(state.grid, density);
}

ContinuumState evolve_pde(const ContinuumState& state,
                          const CoinAngleField& field, double dt,
                          std::int64_t steps) {
  if (!(dt > 0.0) || !std::isfinite(dt) || steps < 0) {
    throw std::invalid_argument("evolve_pde: dt must be > 0 and steps >= 0");
  }
  const ContinuumGrid& grid = state.grid;
  if (dt > grid.h * (1.0 + 1e-12)) {
    throw CflError("evolve_pde: CFL violation, dt must not exceed h");
  }

  ContinuumState cur = state;
  ContinuumState next = ContinuumState::zero(grid, state.time);
  const int n = grid.point_count;
  std::vector<double> speed(n), damp_minus(n), damp_plus(n);

  for (std::int64_t k = 0; k < steps; ++k) {
    const double t = state.time + static_cast<double>(k) * dt;
    const double t_mid = t + 0.5 * dt;
    for (int i = 0; i < n; ++i) {
      const double x = grid.position(i);
      speed[i] = field.cos_sin(t, x).first;
      // Source integrated as an integrating factor with midpoint-sampled
      // exponent: psi-' = -kappa psi-, psi+' = +kappa psi-, kappa =
      // (theta_X / 2) sin(theta).
      const auto [c_mid, s_mid] = field.cos_sin(t_mid, x);
      (void)c_mid;
      const double kappa = 0.5 * field.angle_dx(t_mid, x) * s_mid;
      damp_minus[i] = std::exp(-dt * kappa);
      damp_plus[i] = std::exp(dt * kappa);
    }
    const Complex zero(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
      const double nu = dt * speed[i] / grid.h;
      // psi- rides the leftward characteristic: forward difference.
      const Complex pm_up = (i + 1 < n) ? cur.psi_minus[i + 1] : zero;
      const Complex pm = cur.psi_minus[i] + nu * (pm_up - cur.psi_minus[i]);
      // psi+ rides the rightward characteristic: backward difference.
      const Complex pp_dn = (i > 0) ? cur.psi_plus[i - 1] : zero;
      const Complex pp = cur.psi_plus[i] - nu * (cur.psi_plus[i] - pp_dn);
      next.psi_minus[i] = damp_minus[i] * pm;
      next.psi_plus[i] = damp_plus[i] * pp;
    }
    next.time = state.time + static_cast<double>(k + 1) * dt;
    std::swap(cur, next);
  }
  return cur;
}

Vec2c pde_residual_lr(const std::function<Vec2c(double, double)>& psi,
                      const CoinAngleField& field, double t, double x,
                      double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("pde_residual_lr: h must be > 0");
  }
  auto central = [&](bool in_time) {
    const Vec2c hi = in_time ? psi(t + h, x) : psi(t, x + h);
    const Vec2c lo = in_time ? psi(t - h, x) : psi(t, x - h);
    const double inv = 0.5 / h;
    return Vec2c{(hi.a - lo.a) * inv, (hi.b - lo.b) * inv};
  };
  const Vec2c psi_t = central(true);
  const Vec2c psi_x = central(false);
  const Vec2c value = psi(t, x);

  const double theta = field.angle(t, x);
  const double c = std::cos(theta);
  const Vec2c p_term = coin_p_matrix(theta).apply(psi_x);
  const Vec2c q_term =
      coin_q_matrix(theta, field.angle_dt(t, x), field.angle_dx(t, x)).apply(value);
  return {psi_t.a + c * p_term.a - q_term.a, psi_t.b + c * p_term.b - q_term.b};
}

}  // namespace qwalk
