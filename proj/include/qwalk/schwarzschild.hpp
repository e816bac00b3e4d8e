// qwalk - black-hole coin angle in Lemaitre-type coordinates and null geodesics
//
// Dimensionless conventions: T is the Lemaitre time tau, X = lambda * rho.
// The areal radius is
//
//   r(T, X) = [ (3/2) (X/lambda - T) ]^(2/3) * r_g^(1/3),   X >= lambda T,
//
// the horizon sits at r = r_g (X = lambda T + (2 lambda / 3) r_g), the
// singularity at r = 0 (X = lambda T). The coin angle is defined on the
// domain D = { lambda T <= X <= lambda T + 2 r_g / (3 lambda^2) } by
// cos(theta) = lambda sqrt(r / r_g) and extended continuously outside:
// theta = 0 beyond the outer boundary of D, theta = pi/2 for X < lambda T.
#ifndef QWALK_SCHWARZSCHILD_HPP_
#define QWALK_SCHWARZSCHILD_HPP_

#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

struct SchwarzschildParams {
  double r_g;     // Schwarzschild radius, lattice units
  double lambda;  // coordinate scaling, > 0

  // Throws ConfigError unless r_g > 0 and lambda > 0.
  void validate() const;
};

// r(T, X). Throws std::domain_error for X < lambda T.
double bh_radius(const SchwarzschildParams& p, double t, double x);

// cos(theta) as a total function: the metric value inside D, clamped to 1
// beyond the outer boundary and to 0 for X < lambda T.
double bh_cos_angle(const SchwarzschildParams& p, double t, double x);

// theta(T, X) in [0, pi/2], total by the same clamping.
double coin_angle_bh(const SchwarzschildParams& p, double t, double x);

// d(theta)/dX. Analytic inside D where r > 0; 0 outside (the one-sided
// exterior limit is used on the seams themselves).
double bh_angle_dx(const SchwarzschildParams& p, double t, double x);

bool in_domain_d(const SchwarzschildParams& p, double t, double x);

// Reference lines in (T, X) coordinates.
double singularity_position(const SchwarzschildParams& p, double t);     // lambda T
double horizon_position(const SchwarzschildParams& p, double t);         // r = r_g
double domain_boundary_position(const SchwarzschildParams& p, double t); // outer edge of D

enum class GeodesicEnd { kReachedSingularity, kLeftGrid, kMaxTime };

// Polyline sample of a null geodesic, dX/dT = sign * cos(theta).
struct GeodesicTrack {
  int sign = +1;
  std::vector<double> t;
  std::vector<double> x;
  GeodesicEnd end = GeodesicEnd::kMaxTime;

  std::size_t size() const { return t.size(); }
};

struct GeodesicWindow {
  double x_min;
  double x_max;
  GeodesicWindow();  // unbounded
};

// Classical RK4 with fixed step dt on dX/dT = sign * cos(theta). Terminates
// within dt of the singularity crossing (X - lambda T < lambda dt), when
// leaving the window, or at t_max (with one shortened final step so the last
// sample lands on t_max). Throws std::invalid_argument for dt <= 0.
GeodesicTrack integrate_null_geodesic(const SchwarzschildParams& p, double t0,
                                      double x0, int sign, double dt,
                                      double t_max,
                                      const GeodesicWindow& window = {});

// Coin-angle field of kind schwarzschild wrapping coin_angle_bh.
CoinAngleField make_bh_field(const SchwarzschildParams& p);

}  // namespace qwalk

#endif  // QWALK_SCHWARZSCHILD_HPP_
