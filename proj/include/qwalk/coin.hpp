// qwalk - quantum coin matrix and the coin-angle field abstraction
#ifndef QWALK_COIN_HPP_
#define QWALK_COIN_HPP_

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "qwalk/mat2.hpp"

namespace qwalk {

// The 2x2 unitary coin acting on the (b_L, b_R) spin basis:
//
//   B(theta) = [ -cos(theta)    i sin(theta) ]
//              [ -i sin(theta)    cos(theta) ]
//
// B is Hermitian, unitary, has determinant -1 and squares to the identity.
struct CoinMatrix {
  Complex m00, m01, m10, m11;  // row-major

  Mat2c as_mat() const { return {m00, m01, m10, m11}; }
};

// Throws std::invalid_argument for non-finite angles.
CoinMatrix build_coin(double theta);

enum class AngleFieldKind { kConstant, kSmoothTest, kSchwarzschild, kTabulated };

// Rectangular table of angle samples for the user-tabulated kind.
// values is row-major: values[it * x_count + ix] = theta(t_it, x_ix) on the
// uniform grid spanning [t_min, t_max] x [x_min, x_max].
struct AngleTable {
  double t_min = 0.0, t_max = 0.0;
  double x_min = 0.0, x_max = 0.0;
  std::size_t t_count = 0, x_count = 0;
  std::vector<double> values;

  double t_spacing() const;
  double x_spacing() const;
};

// A deterministic, pure map (T, X) -> theta (radians). Immutable after
// construction; safe to share across threads.
//
// Kinds:
//   constant       theta(T, X) = theta0                       (C-infinity)
//   smooth-test    theta0 + a sin(kX) cos(wT)                 (C-infinity)
//   schwarzschild  arccos(lambda sqrt(r(T,X)/r_g)), clamped   (C0, seams)
//   tabulated      bilinear interpolation of AngleTable       (C0 only)
class CoinAngleField {
 public:
  static CoinAngleField constant(double theta0);
  static CoinAngleField smooth_test(double theta0, double amplitude,
                                    double wavenumber, double omega);
  static CoinAngleField schwarzschild_field(double r_g, double lambda);
  static CoinAngleField tabulated(AngleTable table);

  AngleFieldKind kind() const { return kind_; }

  // True where the field is evaluable. Everything except the tabulated kind
  // is total; tabulated is restricted to its bounding box.
  bool contains(double t, double x) const;

  // theta(T, X). Throws std::domain_error outside the declared domain.
  double angle(double t, double x) const;

  // Spatial / temporal derivatives of theta. Analytic for constant,
  // smooth-test and schwarzschild (one-sided 0 at the clamp seams); central
  // finite differences at the table spacing for tabulated fields.
  double angle_dx(double t, double x) const;
  double angle_dt(double t, double x) const;

  // (cos theta, sin theta) without the acos/cos round trip; this is what the
  // walk kernel consumes.
  std::pair<double, double> cos_sin(double t, double x) const;

  // Twice differentiable everywhere queried; required by convergence studies.
  bool smooth() const {
    return kind_ == AngleFieldKind::kConstant ||
           kind_ == AngleFieldKind::kSmoothTest;
  }

  // Kind-specific scalars, exposed for config echo and tests.
  double theta0() const { return theta0_; }
  double amplitude() const { return amplitude_; }
  double wavenumber() const { return wavenumber_; }
  double omega() const { return omega_; }
  double r_g() const { return r_g_; }
  double lambda() const { return lambda_; }

 private:
  CoinAngleField() = default;

  double tab_angle(double t, double x) const;

  AngleFieldKind kind_ = AngleFieldKind::kConstant;
  double theta0_ = 0.0;
  double amplitude_ = 0.0, wavenumber_ = 0.0, omega_ = 0.0;
  double r_g_ = 0.0, lambda_ = 0.0;
  std::shared_ptr<const AngleTable> table_;
};

}  // namespace qwalk

#endif  // QWALK_COIN_HPP_
