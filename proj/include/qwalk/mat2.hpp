// qwalk - minimal 2x2 complex matrix / 2-vector helpers
#ifndef QWALK_MAT2_HPP_
#define QWALK_MAT2_HPP_

#include <algorithm>
#include <cmath>
#include <complex>

namespace qwalk {

using Complex = std::complex<double>;

struct Vec2c {
  Complex a{}, b{};

  double norm_sq() const { return std::norm(a) + std::norm(b); }
};

struct Mat2c {
  Complex m00{}, m01{}, m10{}, m11{};

  static Mat2c identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Vec2c apply(const Vec2c& v) const {
    return {m00 * v.a + m01 * v.b, m10 * v.a + m11 * v.b};
  }

  Mat2c mul(const Mat2c& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
  }

  Mat2c adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }

  Complex det() const { return m00 * m11 - m01 * m10; }
};

inline Mat2c operator-(const Mat2c& x, const Mat2c& y) {
  return {x.m00 - y.m00, x.m01 - y.m01, x.m10 - y.m10, x.m11 - y.m11};
}

inline Mat2c operator+(const Mat2c& x, const Mat2c& y) {
  return {x.m00 + y.m00, x.m01 + y.m01, x.m10 + y.m10, x.m11 + y.m11};
}

// Largest entry magnitude; handy for "within N epsilons" checks.
inline double max_abs(const Mat2c& m) {
  return std::max(std::max(std::abs(m.m00), std::abs(m.m01)),
                  std::max(std::abs(m.m10), std::abs(m.m11)));
}

inline double max_abs(const Vec2c& v) {
  return std::max(std::abs(v.a), std::abs(v.b));
}

}  // namespace qwalk

#endif  // QWALK_MAT2_HPP_
