#pragma once

#include <cmath>

namespace hypercurv {

// Truncated second-order Taylor number a + b e1 + c e2 + d e1e2 with
// e1^2 = e2^2 = 0. Seeding u_i along e1 and u_j along e2 yields f, df/du_i,
// df/du_j and d2f/du_i du_j from a single evaluation.
struct HyperDual {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d12 = 0.0;

  constexpr HyperDual() = default;
  constexpr HyperDual(double value) : v(value) {}  // NOLINT: implicit lift of constants
  constexpr HyperDual(double value, double e1, double e2, double e12)
      : v(value), d1(e1), d2(e2), d12(e12) {}

  HyperDual& operator+=(const HyperDual& o) {
    v += o.v;
    d1 += o.d1;
    d2 += o.d2;
    d12 += o.d12;
    return *this;
  }
  HyperDual& operator-=(const HyperDual& o) {
    v -= o.v;
    d1 -= o.d1;
    d2 -= o.d2;
    d12 -= o.d12;
    return *this;
  }
  HyperDual& operator*=(const HyperDual& o) { return *this = *this * o; }
  HyperDual& operator/=(const HyperDual& o) { return *this = *this / o; }

  friend HyperDual operator-(const HyperDual& a) { return {-a.v, -a.d1, -a.d2, -a.d12}; }
  friend HyperDual operator+(HyperDual a, const HyperDual& b) { return a += b; }
  friend HyperDual operator-(HyperDual a, const HyperDual& b) { return a -= b; }
  friend HyperDual operator*(const HyperDual& a, const HyperDual& b) {
    return {a.v * b.v, a.v * b.d1 + a.d1 * b.v, a.v * b.d2 + a.d2 * b.v,
            a.v * b.d12 + a.d1 * b.d2 + a.d2 * b.d1 + a.d12 * b.v};
  }
  friend HyperDual operator/(const HyperDual& a, const HyperDual& b) {
    return a * reciprocal(b);
  }

  // Chain rule for a scalar function with value f, first derivative fp and
  // second derivative fpp at v.
  HyperDual apply(double f, double fp, double fpp) const {
    return {f, fp * d1, fp * d2, fp * d12 + fpp * d1 * d2};
  }

  friend HyperDual reciprocal(const HyperDual& a) {
    const double r = 1.0 / a.v;
    return a.apply(r, -r * r, 2.0 * r * r * r);
  }
};

inline HyperDual sin(const HyperDual& a) {
  const double s = std::sin(a.v), c = std::cos(a.v);
  return a.apply(s, c, -s);
}
inline HyperDual cos(const HyperDual& a) {
  const double s = std::sin(a.v), c = std::cos(a.v);
  return a.apply(c, -s, -c);
}
inline HyperDual sinh(const HyperDual& a) {
  const double s = std::sinh(a.v), c = std::cosh(a.v);
  return a.apply(s, c, s);
}
inline HyperDual cosh(const HyperDual& a) {
  const double s = std::sinh(a.v), c = std::cosh(a.v);
  return a.apply(c, s, c);
}
inline HyperDual exp(const HyperDual& a) {
  const double e = std::exp(a.v);
  return a.apply(e, e, e);
}
inline HyperDual log(const HyperDual& a) {
  const double r = 1.0 / a.v;
  return a.apply(std::log(a.v), r, -r * r);
}
inline HyperDual sqrt(const HyperDual& a) {
  const double s = std::sqrt(a.v);
  return a.apply(s, 0.5 / s, -0.25 / (s * a.v));
}

inline double value_of(double x) { return x; }
inline double value_of(const HyperDual& x) { return x.v; }

}  // namespace hypercurv
