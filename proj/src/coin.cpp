#include "qwalk/coin.hpp"

#include <cmath>
#include <stdexcept>

#include "qwalk/errors.hpp"
#include "qwalk/schwarzschild.hpp"

namespace qwalk {

CoinMatrix build_coin(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("build_coin: theta must be finite");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {Complex(-c, 0.0), Complex(0.0, s), Complex(0.0, -s), Complex(c, 0.0)};
}

double AngleTable::t_spacing() const {
  return t_count > 1 ? (t_max - t_min) / static_cast<double>(t_count - 1) : 0.0;
}

double AngleTable::x_spacing() const {
  return x_count > 1 ? (x_max - x_min) / static_cast<double>(x_count - 1) : 0.0;
}

CoinAngleField CoinAngleField::constant(double theta0) {
  if (!std::isfinite(theta0)) {
    throw std::invalid_argument("CoinAngleField: theta0 must be finite");
  }
  CoinAngleField f;
  f.kind_ = AngleFieldKind::kConstant;
  f.theta0_ = theta0;
  return f;
}

CoinAngleField CoinAngleField::smooth_test(double theta0, double amplitude,
                                           double wavenumber, double omega) {
  if (!std::isfinite(theta0) || !std::isfinite(amplitude) ||
      !std::isfinite(wavenumber) || !std::isfinite(omega)) {
    throw std::invalid_argument("CoinAngleField: smooth-test parameters must be finite");
  }
  CoinAngleField f;
  f.kind_ = AngleFieldKind::kSmoothTest;
  f.theta0_ = theta0;
  f.amplitude_ = amplitude;
  f.wavenumber_ = wavenumber;
  f.omega_ = omega;
  return f;
}

CoinAngleField CoinAngleField::schwarzschild_field(double r_g, double lambda) {
  SchwarzschildParams{r_g, lambda}.validate();
  CoinAngleField f;
  f.kind_ = AngleFieldKind::kSchwarzschild;
  f.r_g_ = r_g;
  f.lambda_ = lambda;
  return f;
}

CoinAngleField CoinAngleField::tabulated(AngleTable table) {
  if (table.t_count < 2 || table.x_count < 2) {
    throw ConfigError("CoinAngleField: angle table needs at least 2x2 samples");
  }
  if (table.values.size() != table.t_count * table.x_count) {
    throw ConfigError("CoinAngleField: angle table size mismatch");
  }
  if (!(table.t_max > table.t_min) || !(table.x_max > table.x_min)) {
    throw ConfigError("CoinAngleField: angle table extents must be increasing");
  }
  CoinAngleField f;
  f.kind_ = AngleFieldKind::kTabulated;
  f.table_ = std::make_shared<const AngleTable>(std::move(table));
  return f;
}

bool CoinAngleField::contains(double t, double x) const {
  if (kind_ != AngleFieldKind::kTabulated) return true;
  return t >= table_->t_min && t <= table_->t_max && x >= table_->x_min &&
         x <= table_->x_max;
}

double CoinAngleField::tab_angle(double t, double x) const {
  const AngleTable& tab = *table_;
  const double ft = (t - tab.t_min) / tab.t_spacing();
  const double fx = (x - tab.x_min) / tab.x_spacing();
  auto cell = [](double f, std::size_t count) {
    auto i = static_cast<std::size_t>(std::max(0.0, std::floor(f)));
    if (i > count - 2) i = count - 2;
    return i;
  };
  const std::size_t it = cell(ft, tab.t_count);
  const std::size_t ix = cell(fx, tab.x_count);
  const double wt = ft - static_cast<double>(it);
  const double wx = fx - static_cast<double>(ix);
  const double v00 = tab.values[it * tab.x_count + ix];
  const double v01 = tab.values[it * tab.x_count + ix + 1];
  const double v10 = tab.values[(it + 1) * tab.x_count + ix];
  const double v11 = tab.values[(it + 1) * tab.x_count + ix + 1];
  return (1.0 - wt) * ((1.0 - wx) * v00 + wx * v01) +
         wt * ((1.0 - wx) * v10 + wx * v11);
}

double CoinAngleField::angle(double t, double x) const {
  switch (kind_) {
    case AngleFieldKind::kConstant:
      return theta0_;
    case AngleFieldKind::kSmoothTest:
      return theta0_ + amplitude_ * std::sin(wavenumber_ * x) * std::cos(omega_ * t);
    case AngleFieldKind::kSchwarzschild:
      return coin_angle_bh({r_g_, lambda_}, t, x);
    case AngleFieldKind::kTabulated:
      if (!contains(t, x)) {
        throw std::domain_error("CoinAngleField: point outside tabulated domain");
      }
      return tab_angle(t, x);
  }
  return theta0_;
}

double CoinAngleField::angle_dx(double t, double x) const {
  switch (kind_) {
    case AngleFieldKind::kConstant:
      return 0.0;
    case AngleFieldKind::kSmoothTest:
      return amplitude_ * wavenumber_ * std::cos(wavenumber_ * x) *
             std::cos(omega_ * t);
    case AngleFieldKind::kSchwarzschild:
      return bh_angle_dx({r_g_, lambda_}, t, x);
    case AngleFieldKind::kTabulated: {
      const double h = table_->x_spacing();
      const double lo = std::max(x - h, table_->x_min);
      const double hi = std::min(x + h, table_->x_max);
      return (angle(t, hi) - angle(t, lo)) / (hi - lo);
    }
  }
  return 0.0;
}

double CoinAngleField::angle_dt(double t, double x) const {
  switch (kind_) {
    case AngleFieldKind::kConstant:
      return 0.0;
    case AngleFieldKind::kSmoothTest:
      return -amplitude_ * omega_ * std::sin(wavenumber_ * x) * std::sin(omega_ * t);
    case AngleFieldKind::kSchwarzschild:
      // theta depends on X - lambda T only.
      return -lambda_ * bh_angle_dx({r_g_, lambda_}, t, x);
    case AngleFieldKind::kTabulated: {
      const double h = table_->t_spacing();
      const double lo = std::max(t - h, table_->t_min);
      const double hi = std::min(t + h, table_->t_max);
      return (angle(hi, x) - angle(lo, x)) / (hi - lo);
    }
  }
  return 0.0;
}

std::pair<double, double> CoinAngleField::cos_sin(double t, double x) const {
  if (kind_ == AngleFieldKind::kSchwarzschild) {
    // cos(theta) is the primary quantity here; theta in [0, pi/2] so the
    // sine branch is fixed.
    const double c = bh_cos_angle({r_g_, lambda_}, t, x);
    return {c, std::sqrt(std::max(0.0, 1.0 - c * c))};
  }
  const double theta = angle(t, x);
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace qwalk
