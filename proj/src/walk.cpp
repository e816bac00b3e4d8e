#include "qwalk/walk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

LatticeGrid LatticeGrid::covering(double x_lo, double x_hi, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ConfigError("LatticeGrid: epsilon must be positive and finite");
  }
  if (!(x_hi > x_lo)) {
    throw ConfigError("LatticeGrid: x_max must exceed x_min");
  }
  const auto m_lo = static_cast<std::int64_t>(std::floor(x_lo / epsilon));
  const auto m_hi = static_cast<std::int64_t>(std::ceil(x_hi / epsilon));
  LatticeGrid grid;
  grid.epsilon = epsilon;
  grid.origin = m_lo;
  grid.site_count = static_cast<int>(m_hi - m_lo + 1);
  return grid;
}

WalkState WalkState::zero(const LatticeGrid& grid) {
  WalkState state;
  state.grid = grid;
  state.amp.assign(2 * static_cast<std::size_t>(grid.site_count), Complex(0.0, 0.0));
  return state;
}

namespace {

double kahan_norm(const std::vector<Complex>& amp) {
  double sum = 0.0, c = 0.0;
  for (const Complex& a : amp) {
    const double y = std::norm(a) - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace

WalkState init_gaussian(const LatticeGrid& grid, double x0, double sigma,
                        Vec2c spin_mix) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("init_gaussian: dx0 must be > 0");
  }
  if (!std::isfinite(x0)) {
    throw std::invalid_argument("init_gaussian: x0 must be finite");
  }
  if (spin_mix.norm_sq() <= 0.0) {
    throw std::invalid_argument("init_gaussian: spin mix must be nonzero");
  }
  if (x0 - 8.0 * sigma < grid.x_min() || x0 + 8.0 * sigma > grid.x_max()) {
    throw ConfigError("init_gaussian: 8-sigma support does not fit inside the grid");
  }

  WalkState state = WalkState::zero(grid);
  for (int i = 0; i < grid.site_count; ++i) {
    const double dx = grid.position(i) - x0;
    const double amp = std::exp(-dx * dx / (4.0 * sigma * sigma));  // sqrt(n0)
    state.left(i) = amp * spin_mix.a;
    state.right(i) = amp * spin_mix.b;
  }
  const double total = kahan_norm(state.amp);
  const double scale = 1.0 / std::sqrt(total);
  for (Complex& a : state.amp) a *= scale;
  return state;
}

void step_into(const WalkState& in, const CoinAngleField& field, WalkState& out) {
  const LatticeGrid& grid = in.grid;
  out.grid = grid;
  out.time_index = in.time_index + 1;
  out.amp.resize(in.amp.size());

  const double t = in.time();
  const int m = grid.site_count;
  const Complex zero(0.0, 0.0);
  for (int i = 0; i < m; ++i) {
    const auto [c, s] = field.cos_sin(t, grid.position(i));
    const Complex l_in = (i + 1 < m) ? in.left(i + 1) : zero;   // psi^L_{j,m+1}
    const Complex r_in = (i > 0) ? in.right(i - 1) : zero;      // psi^R_{j,m-1}
    out.left(i) = -c * l_in + Complex(0.0, s) * r_in;
    out.right(i) = Complex(0.0, -s) * l_in + c * r_in;
  }
}

WalkState step(const WalkState& state, const CoinAngleField& field) {
  WalkState out;
  step_into(state, field, out);
  return out;
}

void step_s2_into(const WalkState& in, const CoinAngleField& field, WalkState& out) {
  const LatticeGrid& grid = in.grid;
  out.grid = grid;
  out.time_index = in.time_index + 2;
  out.amp.resize(in.amp.size());

  const double t0 = in.time();
  const double t1 = t0 + grid.dt();
  const int m = grid.site_count;
  const Complex zero(0.0, 0.0);
  const Complex img(0.0, 1.0);
  for (int i = 0; i < m; ++i) {
    const double x = grid.position(i);
    const auto [c1, s1] = field.cos_sin(t1, x);  // theta_{j+1,m}

    // Groups routed through an out-of-grid intermediate site vanish, matching
    // the zero-inflow behaviour of two single steps.
    Complex via_up = zero;   // through psi^L_{j+1,m+1}
    Complex via_dn = zero;   // through psi^R_{j+1,m-1}
    Complex via_up_r = zero;
    Complex via_dn_r = zero;
    if (i + 1 < m) {
      const auto [cp, sp] = field.cos_sin(t0, grid.position(i + 1));  // theta_{j,m+1}
      const Complex l_pp = (i + 2 < m) ? in.left(i + 2) : zero;       // psi^L_{j,m+2}
      const Complex r_00 = in.right(i);                               // psi^R_{j,m}
      via_up = c1 * (cp * l_pp - img * sp * r_00);
      via_up_r = s1 * (img * cp * l_pp + sp * r_00);
    }
    if (i >= 1) {
      const auto [cm, sm] = field.cos_sin(t0, grid.position(i - 1));  // theta_{j,m-1}
      const Complex l_00 = in.left(i);                                // psi^L_{j,m}
      const Complex r_mm = (i >= 2) ? in.right(i - 2) : zero;         // psi^R_{j,m-2}
      via_dn = s1 * (sm * l_00 + img * cm * r_mm);
      via_dn_r = -c1 * (img * sm * l_00 - cm * r_mm);
    }
    out.left(i) = via_up + via_dn;
    out.right(i) = via_up_r + via_dn_r;
  }
}

WalkState step_s2(const WalkState& state, const CoinAngleField& field) {
  WalkState out;
  step_s2_into(state, field, out);
  return out;
}

double total_probability(const WalkState& state) {
  return kahan_norm(state.amp);
}

double boundary_probability(const WalkState& state) {
  const int last = state.grid.site_count - 1;
  double p = std::norm(state.left(0)) + std::norm(state.right(0));
  if (last > 0) p += std::norm(state.left(last)) + std::norm(state.right(last));
  return p;
}

std::vector<WalkState> stroboscope(const std::vector<WalkState>& history, int n) {
  if (n <= 0) {
    throw std::invalid_argument("stroboscope: period must be >= 1");
  }
  std::vector<WalkState> picked;
  for (const WalkState& s : history) {
    if (s.time_index % n == 0) picked.push_back(s);
  }
  return picked;
}

void run_walk(WalkState state, const CoinAngleField& field, std::int64_t steps,
              const WalkRunOptions& options,
              const std::function<void(const WalkState&)>& observer) {
  if (steps < 0) {
    throw std::invalid_argument("run_walk: steps must be >= 0");
  }
  if (options.snapshot_stride < 1) {
    throw std::invalid_argument("run_walk: snapshot stride must be >= 1");
  }
  auto check_guard = [&](const WalkState& s) {
    if (options.boundary_guard > 0.0 &&
        boundary_probability(s) > options.boundary_guard) {
      throw GuardError("run_walk: boundary-adjacent probability exceeded " +
                       std::to_string(options.boundary_guard) + " at step " +
                       std::to_string(s.time_index));
    }
  };

  check_guard(state);
  observer(state);
  WalkState next = WalkState::zero(state.grid);
  for (std::int64_t k = 1; k <= steps; ++k) {
    step_into(state, field, next);
    std::swap(state, next);
    check_guard(state);
    if (k % options.snapshot_stride == 0 || k == steps) observer(state);
  }
}

}  // namespace qwalk
