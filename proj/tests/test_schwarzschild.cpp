#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qwalk/errors.hpp"
#include "qwalk/schwarzschild.hpp"
#include "oracles.hpp"

using namespace qwalk;

TEST_CASE("radius at the reference points") {
  const SchwarzschildParams p{150.0, 1.0};
  // on the horizon: u = r_g, r = r_g
  CHECK(bh_radius(p, 0.0, 100.0) == doctest::Approx(150.0).epsilon(1e-14));
  // at the singularity seam
  CHECK(bh_radius(p, 7.0, 7.0) == 0.0);
  // X / lambda invariance
  const SchwarzschildParams p2{150.0, 2.0};
  CHECK(bh_radius(p2, 0.0, 200.0) == doctest::Approx(150.0).epsilon(1e-14));
  CHECK_THROWS_AS(bh_radius(p, 1.0, 0.5), std::domain_error);
}

TEST_CASE("coin angle at the reference points") {
  const SchwarzschildParams p{150.0, 1.0};
  // outer boundary of D: cos(theta) = 1
  CHECK(coin_angle_bh(p, 0.0, 100.0) == 0.0);
  // singularity: theta = pi/2
  CHECK(coin_angle_bh(p, 3.0, 3.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  // r = 37.5: cos(theta) = 1/2, theta = pi/3 (u = 18.75 -> X = T + 12.5)
  CHECK(bh_radius(p, 0.0, 12.5) == doctest::Approx(37.5).epsilon(1e-13));
  CHECK(coin_angle_bh(p, 0.0, 12.5) ==
        doctest::Approx(std::numbers::pi / 3).epsilon(1e-13));
}

TEST_CASE("domain membership") {
  const SchwarzschildParams p{150.0, 1.0};
  CHECK(in_domain_d(p, 0.0, 100.0));   // boundary point (the horizon here)
  CHECK(!in_domain_d(p, 0.0, 101.0));
  CHECK(in_domain_d(p, 5.0, 5.0));     // singularity edge
  CHECK(!in_domain_d(p, 5.0, 4.9));
}

TEST_CASE("reference lines") {
  const SchwarzschildParams p{150.0, 0.5};
  CHECK(singularity_position(p, 10.0) == doctest::Approx(5.0));
  CHECK(horizon_position(p, 10.0) == doctest::Approx(5.0 + 50.0));
  CHECK(domain_boundary_position(p, 10.0) == doctest::Approx(5.0 + 400.0));
}

TEST_CASE("scaling identity r(T, X; lambda) = r(T, X/lambda; 1)") {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 200; ++k) {
    const double lambda = oracle::uniform(rng, 0.2, 3.0);
    const double rg = oracle::uniform(rng, 10.0, 400.0);
    const double t = oracle::uniform(rng, 0.0, 50.0);
    const double x = lambda * t + oracle::uniform(rng, 0.0, 300.0);
    const double r_scaled = bh_radius({rg, lambda}, t, x);
    const double r_unit = bh_radius({rg, 1.0}, t, x / lambda);
    CHECK(r_scaled == doctest::Approx(r_unit).epsilon(1e-12));
  }
}

TEST_CASE("clamped angle is continuous across the seams") {
  // The extension is continuous but has root-type cusps: theta ~
  // sqrt(d / r_boundary) just inside the outer edge of D and pi/2 - theta ~
  // (1.5 d / (lambda^2 r_g))^(1/3) just inside the singularity seam. The scan
  // checks the jumps against those rates and that they shrink accordingly.
  const SchwarzschildParams p{150.0, 1.2};
  auto jump_at = [&](double seam_x, double off) {
    return std::abs(coin_angle_bh(p, 10.0, seam_x + off) -
                    coin_angle_bh(p, 10.0, seam_x - off));
  };
  SUBCASE("outer boundary of D") {
    const double edge = domain_boundary_position(p, 10.0);
    const double r_edge = p.r_g / (p.lambda * p.lambda);
    const double j6 = jump_at(edge, 1e-6);
    const double j10 = jump_at(edge, 1e-10);
    CHECK(j6 < 2.0 * std::sqrt(1e-6 / r_edge));
    CHECK(j10 < 2.0 * std::sqrt(1e-10 / r_edge));
    CHECK(j10 < 0.02 * j6);  // sqrt cusp: factor 100 in offset gives 10 in jump
    // at the seam itself only rounding of the cbrt argument remains
    CHECK(coin_angle_bh(p, 10.0, edge) < 1e-6);
    CHECK(coin_angle_bh(p, 10.0, edge + 5.0) == 0.0);
  }
  SUBCASE("singularity seam") {
    const double seam = singularity_position(p, 10.0);
    auto cusp = [&](double off) {
      return std::cbrt(1.5 * off / (p.lambda * p.lambda * p.r_g));
    };
    const double j6 = jump_at(seam, 1e-6);
    const double j9 = jump_at(seam, 1e-9);
    CHECK(j6 < 2.0 * p.lambda * cusp(1e-6));
    CHECK(j9 < 2.0 * p.lambda * cusp(1e-9));
    CHECK(j9 < 0.2 * j6);  // cube-root cusp: factor 1000 gives 10
    CHECK(coin_angle_bh(p, 10.0, seam - 5.0) ==
          doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  }
}

TEST_CASE("bh field angle_dx matches finite differences inside D") {
  const SchwarzschildParams p{150.0, 0.9};
  const CoinAngleField field = make_bh_field(p);
  std::mt19937_64 rng(43);
  for (int k = 0; k < 100; ++k) {
    const double t = oracle::uniform(rng, 0.0, 40.0);
    // stay well inside D, away from both seams
    const double x = singularity_position(p, t) +
                     oracle::uniform(rng, 5.0, 0.9 * (domain_boundary_position(p, t) -
                                                      singularity_position(p, t)));
    const double h = 1e-5;
    const double fd = (field.angle(t, x + h) - field.angle(t, x - h)) / (2.0 * h);
    CHECK(field.angle_dx(t, x) == doctest::Approx(fd).epsilon(1e-6));
    CHECK(field.angle_dt(t, x) ==
          doctest::Approx(-p.lambda * field.angle_dx(t, x)).epsilon(1e-13));
  }
}

TEST_CASE("horizon-start geodesic rides the horizon") {
  const SchwarzschildParams p{150.0, 1.0};
  const double x0 = horizon_position(p, 0.0);
  const GeodesicTrack track = integrate_null_geodesic(p, 0.0, x0, +1, 0.05, 200.0);
  CHECK(track.end == GeodesicEnd::kMaxTime);
  double worst = 0.0;
  for (std::size_t k = 0; k < track.size(); ++k) {
    worst = std::max(worst,
                     std::abs(track.x[k] - horizon_position(p, track.t[k])));
  }
  CHECK(worst < 1e-9 * 200.0);
}

TEST_CASE("ingoing geodesic falls onto the singularity monotonically") {
  const SchwarzschildParams p{150.0, 1.0};
  const GeodesicTrack track = integrate_null_geodesic(p, 0.0, 60.0, -1, 0.05, 1000.0);
  CHECK(track.end == GeodesicEnd::kReachedSingularity);
  for (std::size_t k = 1; k < track.size(); ++k) {
    const double y_prev = track.x[k - 1] - singularity_position(p, track.t[k - 1]);
    const double y_cur = track.x[k] - singularity_position(p, track.t[k]);
    CHECK(y_cur < y_prev);
  }
}

TEST_CASE("clamped exterior region gives straight speed-1 lines") {
  const SchwarzschildParams p{150.0, 1.0};
  const double x0 = domain_boundary_position(p, 0.0) + 50.0;
  const GeodesicTrack track = integrate_null_geodesic(p, 0.0, x0, +1, 0.1, 30.0);
  CHECK(track.end == GeodesicEnd::kMaxTime);
  for (std::size_t k = 0; k < track.size(); ++k) {
    CHECK(std::abs(track.x[k] - (x0 + track.t[k])) < 1e-12 * (1.0 + track.t[k]));
  }
}

TEST_CASE("geodesic speed never exceeds 1") {
  std::mt19937_64 rng(44);
  const SchwarzschildParams p{150.0, 0.7};
  for (int trial = 0; trial < 10; ++trial) {
    const double x0 = oracle::uniform(rng, 10.0, 400.0);
    const int sign = trial % 2 == 0 ? +1 : -1;
    const GeodesicTrack track = integrate_null_geodesic(p, 0.0, x0, sign, 0.05, 100.0);
    for (std::size_t k = 1; k < track.size(); ++k) {
      const double dt = track.t[k] - track.t[k - 1];
      CHECK(std::abs(track.x[k] - track.x[k - 1]) <= dt * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("RK4 endpoint agrees with a fine Euler oracle") {
  const SchwarzschildParams p{150.0, 1.0};
  const double x0 = 80.0;  // inside D, off the horizon
  const double t_max = 40.0;
  const GeodesicTrack track = integrate_null_geodesic(p, 0.0, x0, -1, 0.05, t_max);
  REQUIRE(track.end == GeodesicEnd::kMaxTime);
  auto f = [&](double t, double x) { return -bh_cos_angle(p, t, x); };
  const double euler = oracle::euler_endpoint(f, 0.0, x0, 1e-5, t_max);
  CHECK(track.x.back() == doctest::Approx(euler).epsilon(1e-6));
}

TEST_CASE("halving the step moves the endpoint at fourth order") {
  const SchwarzschildParams p{150.0, 1.0};
  const double x0 = 80.0;
  const double t_max = 40.0;
  const double e1 = integrate_null_geodesic(p, 0.0, x0, -1, 0.1, t_max).x.back();
  const double e2 = integrate_null_geodesic(p, 0.0, x0, -1, 0.05, t_max).x.back();
  const double e3 = integrate_null_geodesic(p, 0.0, x0, -1, 0.025, t_max).x.back();
  const double d12 = std::abs(e1 - e2);
  const double d23 = std::abs(e2 - e3);
  CHECK(d23 < 1e-8);
  if (d23 > 1e-15) {
    CHECK(d12 / d23 > 8.0);  // at least what a 4th-order step ratio implies
  }
}

TEST_CASE("geodesic input validation and window termination") {
  const SchwarzschildParams p{150.0, 1.0};
  CHECK_THROWS_AS(integrate_null_geodesic(p, 0.0, 50.0, +1, 0.0, 10.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_null_geodesic(p, 0.0, 50.0, +1, -0.1, 10.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_null_geodesic(p, 0.0, 50.0, 2, 0.1, 10.0),
                  std::invalid_argument);

  // t_max = t0: single sample
  const GeodesicTrack single = integrate_null_geodesic(p, 0.0, 50.0, +1, 0.1, 0.0);
  CHECK(single.size() == 1);
  CHECK(single.end == GeodesicEnd::kMaxTime);

  GeodesicWindow window;
  window.x_max = 120.0;
  const GeodesicTrack clipped =
      integrate_null_geodesic(p, 0.0, 110.0, +1, 0.1, 1000.0, window);
  CHECK(clipped.end == GeodesicEnd::kLeftGrid);
  CHECK(clipped.x.back() >= 120.0);
}

TEST_CASE("make_bh_field wraps the clamped angle") {
  const SchwarzschildParams p{150.0, 1.0};
  const CoinAngleField field = make_bh_field(p);
  CHECK(field.kind() == AngleFieldKind::kSchwarzschild);
  CHECK(field.angle(0.0, 100.0) == 0.0);                       // horizon point
  CHECK(field.angle(10.0, 5.0) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));  // X < lambda T
  CHECK(field.angle(0.0, 100.0) == coin_angle_bh(p, 0.0, 100.0));
}

TEST_CASE("params are validated") {
  CHECK_THROWS_AS((SchwarzschildParams{-1.0, 1.0}).validate(), ConfigError);
  CHECK_THROWS_AS((SchwarzschildParams{150.0, 0.0}).validate(), ConfigError);
}
