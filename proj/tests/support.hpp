#pragma once

// Small helpers shared by the unit tests: a seeded generator, random
// symmetric matrices and vectors, and a few non-closed charts (plane,
// cylinder) that the shape catalog does not provide.

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hypercurv/jets.hpp"
#include "hypercurv/quadrature.hpp"
#include "hypercurv/shapes.hpp"

namespace testing_support {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * uniform());
  }

 private:
  std::mt19937_64 gen_;
};

inline Eigen::MatrixXd random_symmetric(Rng& rng, int n, double spread = 2.0) {
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = rng.uniform(-spread, spread);
  return 0.5 * (A + A.transpose());
}

inline Eigen::VectorXd random_vector(Rng& rng, int n, double spread = 3.0) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.uniform(-spread, spread);
  return v;
}

inline Eigen::VectorXd random_unit(Rng& rng, int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.normal();
  return v / v.norm();
}

// Random parameter point in the inner 98% of a chart's non-periodic axes.
inline std::vector<double> random_param(Rng& rng, const hypercurv::Chart& chart) {
  std::vector<double> u(static_cast<std::size_t>(chart.dim()));
  for (int a = 0; a < chart.dim(); ++a) {
    const double lo = chart.domain.lo[a], hi = chart.domain.hi[a];
    const double pad = chart.domain.periodic[a] ? 0.0 : 0.01 * (hi - lo);
    u[a] = rng.uniform(lo + pad, hi - pad);
  }
  return u;
}

// (u1, u2) -> (u1, u2, 0), oriented by +e3.
inline hypercurv::Chart plane_chart() {
  using hypercurv::HyperDual;
  hypercurv::Chart c;
  c.domain = {{-1.0, -1.0}, {1.0, 1.0}, {false, false}};
  c.ambient_dim = 3;
  c.map = [](std::span<const HyperDual> u, std::span<HyperDual> x) {
    x[0] = u[0];
    x[1] = u[1];
    x[2] = HyperDual(0.0);
  };
  c.reference = [](std::span<const double>) { return Eigen::Vector3d(0, 0, 1).eval(); };
  return c;
}

// Unit cylinder (phi, z) -> (cos phi, sin phi, z), outward reference.
inline hypercurv::Chart cylinder_chart() {
  using hypercurv::HyperDual;
  hypercurv::Chart c;
  c.domain = {{0.0, -1.0}, {6.283185307179586, 1.0}, {true, false}};
  c.ambient_dim = 3;
  c.map = [](std::span<const HyperDual> u, std::span<HyperDual> x) {
    x[0] = cos(u[0]);
    x[1] = sin(u[0]);
    x[2] = u[1];
  };
  c.reference = [](std::span<const double> u) { return Eigen::Vector3d(std::cos(u[0]), std::sin(u[0]), 0).eval(); };
  return c;
}

inline hypercurv::ShapeSpec spec(const std::string& name, int n = 2) {
  hypercurv::ShapeSpec s;
  s.name = name;
  s.n = n;
  return s;
}

}  // namespace testing_support
