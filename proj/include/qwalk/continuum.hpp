// qwalk - continuum oracle: eigenbasis rotation, transport PDE, metric/diad
//
// The two-step dynamics has the formal limit
//
//   Psi_T + cos(theta) P Psi_X = Q Psi                            (LR basis)
//
// which decouples in the eigenbasis (b_minus, b_plus) of P into
//
//   psi-_T - cos(theta) psi-_X + (theta_X / 2) sin(theta) psi- = 0
//   psi+_T + cos(theta) psi+_X - (theta_X / 2) sin(theta) psi+ = 0.
//
// This module evolves the decoupled form with a first-order upwind scheme (a
// deliberately simple oracle with a known order) and provides the LR-basis
// residual as an independent consistency witness.
#ifndef QWALK_CONTINUUM_HPP_
#define QWALK_CONTINUUM_HPP_

#include <functional>
#include <utility>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/mat2.hpp"

namespace qwalk {

// Change of basis from (b_L, b_R) to the P eigenbasis. Columns are
//   b_minus = i cos(theta/2) b_L - sin(theta/2) b_R   (eigenvalue -1)
//   b_plus  = i sin(theta/2) b_L + cos(theta/2) b_R   (eigenvalue +1)
struct SpinBasisRotation {
  double theta;
  Mat2c matrix;  // [b_minus | b_plus] in LR coordinates

  explicit SpinBasisRotation(double theta_value);
};

// P as represented in the LR basis (same entries as the coin matrix).
Mat2c coin_p_matrix(double theta);

// Q of the LR-basis limit equation.
Mat2c coin_q_matrix(double theta, double theta_t, double theta_x);

// Components of a spinor in the eigenbasis: applies the adjoint of the
// rotation. Norm preserving.
Vec2c to_eigenbasis(const Vec2c& lr, double theta);
Vec2c from_eigenbasis(const Vec2c& pm, double theta);

// Lorentzian metric G = diag(1, -1/cos^2 theta) tied to a coin-angle field.
struct Metric2D {
  CoinAngleField field;

  double g_tt(double, double) const { return 1.0; }
  double g_xx(double t, double x) const;
  double det(double t, double x) const;            // G
  double volume_weight(double t, double x) const;  // sqrt(-G) = 1/cos(theta)
};

// Orthonormal frame e_0 = e_T, e_1 = cos(theta) e_X and the constant gamma
// matrices of the 2-D Dirac form.
struct Diad {
  CoinAngleField field;

  // Coordinate components (e_a^T, e_a^X).
  std::pair<double, double> e0(double t, double x) const;
  std::pair<double, double> e1(double t, double x) const;

  static Mat2c gamma0();
  static Mat2c gamma1();
};

// max |G(e_a, e_b) - diag(1,-1)| over the sample points; pins the index
// conventions. Requires cos(theta) > 0 at the samples.
double diad_orthonormality_check(
    const CoinAngleField& field,
    const std::vector<std::pair<double, double>>& points);

struct ContinuumGrid {
  double x_min = 0.0;
  double h = 0.0;  // spacing
  int point_count = 0;

  double position(int i) const { return x_min + h * static_cast<double>(i); }
  double x_max() const { return position(point_count - 1); }
};

// psi-/psi+ arrays on a uniform grid at one time.
struct ContinuumState {
  ContinuumGrid grid;
  double time = 0.0;
  std::vector<Complex> psi_minus;
  std::vector<Complex> psi_plus;

  static ContinuumState zero(const ContinuumGrid& grid, double time = 0.0);
};

// Same Gaussian profile as the walk initializer, expressed in the eigenbasis
// of theta(0, X) and normalized so the trapezoid-rule probability is 1.
ContinuumState init_gaussian_continuum(
    const ContinuumGrid& grid, double x0, double sigma,
    const CoinAngleField& field,
    Vec2c spin_mix = {Complex(1.0, 0.0), Complex(0.0, 1.0)});

// integral dX (|psi-|^2 + |psi+|^2), trapezoid rule.
double continuum_probability(const ContinuumState& state);

// integral D_G X |Phi|^2 with Phi = Psi sqrt(cos theta); equals the plain
// probability identically. Throws std::domain_error if cos(theta) <= 0 at any
// grid point.
double dirac_norm(const ContinuumState& state, const CoinAngleField& field);

// First-order upwind transport with the source integrated via a
// midpoint-sampled integrating factor. Requires dt <= h (CflError) and
// dt > 0, steps >= 0 (std::invalid_argument). Zero inflow at the ends.
ContinuumState evolve_pde(const ContinuumState& state,
                          const CoinAngleField& field, double dt,
                          std::int64_t steps);

// LR-basis residual Psi_T + cos(theta) P Psi_X - Q Psi at (t, x), with
// central differences of step h for the Psi derivatives and analytic theta
// derivatives. O(h^2) for an exact solution. Throws std::invalid_argument
// for h <= 0.
Vec2c pde_residual_lr(const std::function<Vec2c(double, double)>& psi,
                      const CoinAngleField& field, double t, double x,
                      double h);

}  // namespace qwalk

#endif  // QWALK_CONTINUUM_HPP_
