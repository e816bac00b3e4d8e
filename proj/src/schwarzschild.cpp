#include "qwalk/schwarzschild.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qwalk/errors.hpp"

namespace qwalk {

void SchwarzschildParams::validate() const {
  if (!(r_g > 0.0) || !std::isfinite(r_g)) {
    throw ConfigError("schwarzschild: r_g must be positive and finite");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ConfigError("schwarzschild: lambda must be positive and finite");
  }
}

namespace {

// u = (3/2)(X/lambda - T); r = cbrt(u^2 r_g), u >= 0.
double radial_argument(const SchwarzschildParams& p, double t, double x) {
  return 1.5 * (x / p.lambda - t);
}

}  // namespace

double bh_radius(const SchwarzschildParams& p, double t, double x) {
  const double u = radial_argument(p, t, x);
  if (u < 0.0) {
    throw std::domain_error("bh_radius: X < lambda*T (beyond the singularity)");
  }
  return std::cbrt(u * u * p.r_g);
}

double bh_cos_angle(const SchwarzschildParams& p, double t, double x) {
  const double u = radial_argument(p, t, x);
  if (u <= 0.0) return 0.0;  // at and beyond the singularity
  // cos(theta) = lambda (u / r_g)^(1/3); clamp to 1 outside D where the
  // metric identification would exceed the unitarity bound.
  const double c = p.lambda * std::cbrt(u / p.r_g);
  return c < 1.0 ? c : 1.0;
}

double coin_angle_bh(const SchwarzschildParams& p, double t, double x) {
  return std::acos(bh_cos_angle(p, t, x));
}

double bh_angle_dx(const SchwarzschildParams& p, double t, double x) {
  const double u = radial_argument(p, t, x);
  if (u <= 0.0) return 0.0;
  const double c = p.lambda * std::cbrt(u / p.r_g);
  if (c >= 1.0) return 0.0;
  const double r = std::cbrt(u * u * p.r_g);
  // theta = arccos(c), dc/dX = 1/(2r).
  return -1.0 / (2.0 * r * std::sqrt(1.0 - c * c));
}

bool in_domain_d(const SchwarzschildParams& p, double t, double x) {
  return x >= p.lambda * t && x <= domain_boundary_position(p, t);
}

double singularity_position(const SchwarzschildParams& p, double t) {
  return p.lambda * t;
}

double horizon_position(const SchwarzschildParams& p, double t) {
  return p.lambda * t + (2.0 * p.lambda / 3.0) * p.r_g;
}

double domain_boundary_position(const SchwarzschildParams& p, double t) {
  return p.lambda * t + 2.0 * p.r_g / (3.0 * p.lambda * p.lambda);
}

GeodesicWindow::GeodesicWindow()
    : x_min(-std::numeric_limits<double>::infinity()),
      x_max(std::numeric_limits<double>::infinity()) {}

GeodesicTrack integrate_null_geodesic(const SchwarzschildParams& p, double t0,
                                      double x0, int sign, double dt,
                                      double t_max,
                                      const GeodesicWindow& window) {
  p.validate();
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("integrate_null_geodesic: dt must be > 0");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("integrate_null_geodesic: sign must be +1 or -1");
  }

  const double s = static_cast<double>(sign);
  auto slope = [&](double t, double x) { return s * bh_cos_angle(p, t, x); };

  GeodesicTrack track;
  track.sign = sign;
  track.end = GeodesicEnd::kMaxTime;
  track.t.push_back(t0);
  track.x.push_back(x0);

  double x = x0;
  std::int64_t k = 0;
  while (true) {
    const double t = t0 + static_cast<double>(k) * dt;
    if (x - p.lambda * t < p.lambda * dt) {
      track.end = GeodesicEnd::kReachedSingularity;
      break;
    }
    if (x < window.x_min || x > window.x_max) {
      track.end = GeodesicEnd::kLeftGrid;
      break;
    }
    double h = dt;
    bool final_step = false;
    if (t + dt > t_max - 1e-12 * dt) {
      h = t_max - t;
      final_step = true;
      if (h <= dt * 1e-9) break;  // already at t_max
    }
    const double k1 = slope(t, x);
    const double k2 = slope(t + 0.5 * h, x + 0.5 * h * k1);
    const double k3 = slope(t + 0.5 * h, x + 0.5 * h * k2);
    const double k4 = slope(t + h, x + h * k3);
    x += h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
    ++k;
    track.t.push_back(final_step ? t_max : t0 + static_cast<double>(k) * dt);
    track.x.push_back(x);
    if (final_step) break;
  }
  return track;
}

CoinAngleField make_bh_field(const SchwarzschildParams& p) {
  return CoinAngleField::schwarzschild_field(p.r_g, p.lambda);
}

}  // namespace qwalk
