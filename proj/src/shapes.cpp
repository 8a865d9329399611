#include "hypercurv/shapes.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hypercurv/errors.hpp"

namespace hypercurv {

namespace {

constexpr double kPi = std::numbers::pi;

// Unit sphere S^n from angles (theta_1..theta_{n-1}, phi). The first polar
// angle lands on the last coordinate: n = 2 gives
// (sin t cos p, sin t sin p, cos t).
template <class S>
void sphere_point(std::span<const S> angles, std::span<S> out) {
  using std::cos;
  using std::sin;
  const int n = static_cast<int>(angles.size());
  S s = 1.0;
  for (int a = 0; a < n - 1; ++a) {
    out[n - a] = s * cos(angles[a]);
    s = s * sin(angles[a]);
  }
  out[1] = s * sin(angles[n - 1]);
  out[0] = s * cos(angles[n - 1]);
}

std::vector<double> sphere_point_d(std::span<const double> angles) {
  std::vector<double> w(angles.size() + 1);
  sphere_point<double>(angles, w);
  return w;
}

// Domain of the sphere chart, optionally preceded by `leading` periodic axes.
ChartDomain sphere_domain(int n, int leading = 0) {
  ChartDomain d;
  for (int i = 0; i < leading; ++i) {
    d.lo.push_back(0.0);
    d.hi.push_back(2.0 * kPi);
    d.periodic.push_back(true);
  }
  for (int i = 0; i < n - 1; ++i) {
    d.lo.push_back(0.0);
    d.hi.push_back(kPi);
    d.periodic.push_back(false);
  }
  d.lo.push_back(0.0);
  d.hi.push_back(2.0 * kPi);
  d.periodic.push_back(true);
  return d;
}

ChartDomain torus_domain(int n) {
  ChartDomain d;
  for (int i = 0; i < n; ++i) {
    d.lo.push_back(0.0);
    d.hi.push_back(2.0 * kPi);
    d.periodic.push_back(true);
  }
  return d;
}

[[noreturn]] void bad_param(const std::string& shape, const std::string& what) {
  throw ParameterError(shape + ": " + what);
}

double sphere_euler(int n) { return n % 2 == 0 ? 2 : 0; }

double resolve_k(const ShapeSpec& spec, double natural) { return spec.k.value_or(natural); }

void require_flat(const ShapeSpec& spec) {
  if (resolve_k(spec, 0.0) != 0.0) bad_param(spec.name, "lives in Euclidean space, k must be 0");
}

void require_n(const ShapeSpec& spec, int lo) {
  if (spec.n < lo) bad_param(spec.name, "n must be at least " + std::to_string(lo));
}

Shape base(const ShapeSpec& spec, double k, int n) {
  Shape s;
  s.name = spec.name;
  s.spec = spec;
  s.spec.k = k;
  s.spec.n = n;
  s.form = SpaceForm(k, n);
  s.orientation = spec.flip ? -1 : 1;
  return s;
}

Shape make_sphere_rn(const ShapeSpec& spec) {
  require_flat(spec);
  require_n(spec, 2);
  if (!(spec.rho > 0.0)) bad_param(spec.name, "rho must be positive");
  const int n = spec.n;
  const double rho = spec.rho;
  Shape s = base(spec, 0.0, n);
  Chart c;
  c.domain = sphere_domain(n);
  c.ambient_dim = n + 1;
  c.map = [rho](std::span<const HyperDual> u, std::span<HyperDual> out) {
    sphere_point<HyperDual>(u, out);
    for (auto& v : out) v = rho * v;
  };
  c.reference = [](std::span<const double> u) {
    const auto w = sphere_point_d(u);
    return AmbientVector(Eigen::Map<const AmbientVector>(w.data(), static_cast<Eigen::Index>(w.size())));
  };
  s.charts.push_back(std::move(c));
  s.euler_characteristic = static_cast<int>(sphere_euler(n));
  s.reference_data["area"] = unit_sphere_volume(n) * std::pow(rho, n);
  s.reference_data["principal_curvature"] = -1.0 / rho;
  s.reference_data["curvature_magnitude"] = 1.0 / rho;
  return s;
}

Shape make_ellipsoid_rn(const ShapeSpec& spec) {
  require_flat(spec);
  require_n(spec, 2);
  const int n = spec.n;
  if (static_cast<int>(spec.axes.size()) != n + 1) bad_param(spec.name, "needs n+1 semi-axes");
  for (double a : spec.axes) {
    if (!(a > 0.0)) bad_param(spec.name, "semi-axes must be positive");
  }
  const std::vector<double> axes = spec.axes;
  Shape s = base(spec, 0.0, n);
  Chart c;
  c.domain = sphere_domain(n);
  c.ambient_dim = n + 1;
  c.map = [axes](std::span<const HyperDual> u, std::span<HyperDual> out) {
    sphere_point<HyperDual>(u, out);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = axes[i] * out[i];
  };
  c.reference = [axes](std::span<const double> u) {
    const auto w = sphere_point_d(u);
    AmbientVector ref(static_cast<Eigen::Index>(w.size()));
    for (std::size_t i = 0; i < w.size(); ++i) ref[static_cast<Eigen::Index>(i)] = w[i] / axes[i];
    return ref;
  };
  s.charts.push_back(std::move(c));
  s.euler_characteristic = static_cast<int>(sphere_euler(n));
  return s;
}

Shape make_torus_rev(const ShapeSpec& spec) {
  require_flat(spec);
  if (spec.n != 2) bad_param(spec.name, "is a surface, n must be 2");
  const double R = spec.R, r = spec.r;
  if (!(r > 0.0 && R > r)) bad_param(spec.name, "requires R > r > 0");
  Shape s = base(spec, 0.0, 2);
  Chart c;
  c.domain = torus_domain(2);
  c.ambient_dim = 3;
  c.map = [R, r](std::span<const HyperDual> u, std::span<HyperDual> out) {
    const HyperDual rad = R + r * cos(u[1]);
    out[0] = rad * cos(u[0]);
    out[1] = rad * sin(u[0]);
    out[2] = r * sin(u[1]);
  };
  c.reference = [](std::span<const double> u) {
    AmbientVector ref(3);
    ref << std::cos(u[1]) * std::cos(u[0]), std::cos(u[1]) * std::sin(u[0]), std::sin(u[1]);
    return ref;
  };
  s.charts.push_back(std::move(c));
  s.euler_characteristic = 0;
  s.reference_data["area"] = 4.0 * kPi * kPi * R * r;
  return s;
}

// Tube of radius r around the unit circle in the (x0, x1)-plane of R^5.
Shape make_tube_r5(const ShapeSpec& spec) {
  require_flat(spec);
  if (spec.n != 4) bad_param(spec.name, "is a hypersurface of R^5, n must be 4");
  const double r = spec.r;
  if (!(r > 0.0 && r < 1.0)) bad_param(spec.name, "tube radius must lie in (0, 1)");
  Shape s = base(spec, 0.0, 4);
  Chart c;
  c.domain = sphere_domain(3, 1);
  c.ambient_dim = 5;
  c.map = [r](std::span<const HyperDual> u, std::span<HyperDual> out) {
    HyperDual w[4];
    sphere_point<HyperDual>(u.subspan(1), std::span<HyperDual>(w, 4));
    const HyperDual rad = 1.0 + r * w[0];
    out[0] = rad * cos(u[0]);
    out[1] = rad * sin(u[0]);
    out[2] = r * w[1];
    out[3] = r * w[2];
    out[4] = r * w[3];
  };
  c.reference = [](std::span<const double> u) {
    const auto w = sphere_point_d(u.subspan(1));
    AmbientVector ref(5);
    ref << w[0] * std::cos(u[0]), w[0] * std::sin(u[0]), w[1], w[2], w[3];
    return ref;
  };
  s.charts.push_back(std::move(c));
  s.euler_characteristic = 0;
  s.reference_data["area"] = 4.0 * std::pow(kPi, 3) * r * r * r;
  return s;
}

Shape make_geodesic_sphere_s(const ShapeSpec& spec) {
  const double k = resolve_k(spec, 1.0);
  if (!(k > 0.0)) bad_param(spec.name, "requires k > 0");
  require_n(spec, 2);
  const double sk = std::sqrt(k);
  const double t = sk * spec.rho;
  if (!(t > 0.0 && t < kPi)) bad_param(spec.name, "rho must lie in (0, pi/sqrt(k))");
  const int n = spec.n;
  const double c0 = std::cos(t) / sk, s0 = std::sin(t) / sk;
  Shape s = base(spec, k, n);
  Chart c;
  c.domain = sphere_domain(n);
  c.ambient_dim = n + 2;
  c.map = [c0, s0](std::span<const HyperDual> u, std::span<HyperDual> out) {
    sphere_point<HyperDual>(u, out.subspan(1));
    out[0] = HyperDual(c0);
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = s0 * out[i];
  };
  const double ct = std::cos(t), st = std::sin(t);
  c.reference = [ct, st](std::span<const double> u) {
    const auto w = sphere_point_d(u);
    AmbientVector ref(static_cast<Eigen::Index>(w.size() + 1));
    ref[0] = -st;
    for (std::size_t i = 0; i < w.size(); ++i) ref[static_cast<Eigen::Index>(i + 1)] = ct * w[i];
    return ref;
  };
  s.charts.push_back(std::move(c));
  s.euler_characteristic = static_cast<int>(sphere_euler(n));
  s.reference_data["area"] = unit_sphere_volume(n) * std::pow(s0, n);
  s.reference_data["principal_curvature"] = -sk * ct / st;
  s.reference_data["curvature_magnitude"] = std::abs(sk * ct / st);
  return s;
}

Shape make_geodesic_sphere_h(const ShapeSpec& spec) {
  const double k = resolve_k(spec, -1.0);
  if (!(k < 0.0)) bad_param(spec.name, "requires k < 0");
  require_n(spec, 2);
  if (!(spec.rho > 0.0)) bad_param(spec.name, "rho must be positive");
  const double sk = std::sqrt(-k);
  const double t = sk * spec.rho;
  const int n = spec.n;
  const double c0 = std::cosh(t) / sk, s0 = std::sinh(t) / sk;
  Shape s = base(spec, k, n);
  Chart c;
  c.domain = sphere_domain(n);
  c.ambient_dim = n + 2;
  c.map = [c0, s0](std::span<const HyperDual> u, std::span<HyperDual> out) {
    sphere_point<HyperDual>(u, out.subspan(1));
    out[0] = HyperDual(c0);
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = s0 * out[i];
  };
  const double ct = std::cosh(t), st = std::sinh(t);
  c.reference = [ct, st](std::span<const double> u) {
    const auto w = sphere_point_d(u);
    AmbientVector ref(static_cast<Eigen::Index>(w.size() + 1));
    ref[0] = st;
    for (std::size_t i = 0; i < w.size(); ++i) ref[static_cast<Eigen::Index>(i + 1)] = ct * w[i];
    return ref;
  };
  s.charts.push_back(std::move(c));
  s.euler_characteristic = static_cast<int>(sphere_euler(n));
  s.reference_data["area"] = unit_sphere_volume(n) * std::pow(s0, n);
  s.reference_data["principal_curvature"] = -sk * ct / st;
  s.reference_data["curvature_magnitude"] = sk * ct / st;
  return s;
}

Shape make_clifford_torus(const ShapeSpec& spec) {
  const double k = resolve_k(spec, 1.0);
  if (!(k > 0.0)) bad_param(spec.name, "requires k > 0");
  if (spec.n != 2) bad_param(spec.name, "is a surface, n must be 2");
  const double a = spec.alpha;
  if (!(a > 0.0 && a < 0.5 * kPi)) bad_param(spec.name, "alpha must lie in (0, pi/2)");
  const double R = 1.0 / std::sqrt(k);
  const double ca = std::cos(a), sa = std::sin(a);
  Shape s = base(spec, k, 2);
  Chart c;
  c.domain = torus_domain(2);
  c.ambient_dim = 4;
  c.map = [R, ca, sa](std::span<const HyperDual> u, std::span<HyperDual> out) {
    out[0] = (R * ca) * cos(u[0]);
    out[1] = (R * ca) * sin(u[0]);
    out[2] = (R * sa) * cos(u[1]);
    out[3] = (R * sa) * sin(u[1]);
  };
  c.reference = [ca, sa](std::span<const double> u) {
    AmbientVector ref(4);
    ref << -sa * std::cos(u[0]), -sa * std::sin(u[0]), ca * std::cos(u[1]), ca * std::sin(u[1]);
    return ref;
  };
  s.charts.push_back(std::move(c));
  s.euler_characteristic = 0;
  s.reference_data["area"] = 4.0 * kPi * kPi * R * R * ca * sa;
  return s;
}

// S^1(cos a / sqrt k) x S^3(sin a / sqrt k) in S^5(k): the tube around a
// great circle, a non-umbilic validation shape for n = 4.
Shape make_tube_s5(const ShapeSpec& spec) {
  const double k = resolve_k(spec, 1.0);
  if (!(k > 0.0)) bad_param(spec.name, "requires k > 0");
  if (spec.n != 4) bad_param(spec.name, "is a hypersurface of S^5, n must be 4");
  const double a = spec.alpha;
  if (!(a > 0.0 && a < 0.5 * kPi)) bad_param(spec.name, "alpha must lie in (0, pi/2)");
  const double R = 1.0 / std::sqrt(k);
  const double ca = std::cos(a), sa = std::sin(a);
  Shape s = base(spec, k, 4);
  Chart c;
  c.domain = sphere_domain(3, 1);
  c.ambient_dim = 6;
  c.map = [R, ca, sa](std::span<const HyperDual> u, std::span<HyperDual> out) {
    out[0] = (R * ca) * cos(u[0]);
    out[1] = (R * ca) * sin(u[0]);
    sphere_point<HyperDual>(u.subspan(1), out.subspan(2));
    for (int i = 2; i < 6; ++i) out[i] = (R * sa) * out[i];
  };
  c.reference = [ca, sa](std::span<const double> u) {
    const auto w = sphere_point_d(u.subspan(1));
    AmbientVector ref(6);
    ref << -sa * std::cos(u[0]), -sa * std::sin(u[0]), ca * w[0], ca * w[1], ca * w[2], ca * w[3];
    return ref;
  };
  s.charts.push_back(std::move(c));
  s.euler_characteristic = 0;
  s.reference_data["area"] = 2.0 * kPi * R * ca * unit_sphere_volume(3) * std::pow(R * sa, 3);
  return s;
}

// Euclidean ellipsoid y = D w lifted vertically onto the space form:
// x = (sqrt(1/k - |y|^2), y) on the sphere, x = (sqrt(|y|^2 - 1/k), y) on the
// hyperboloid. A closed, non-umbilic hypersurface with chi = 1 + (-1)^n.
Shape make_lifted_ellipsoid(const ShapeSpec& spec) {
  const double k = resolve_k(spec, 0.0);
  if (k == 0.0) bad_param(spec.name, "requires k != 0 (use ellipsoid_rn for k = 0)");
  require_n(spec, 2);
  const int n = spec.n;
  if (static_cast<int>(spec.axes.size()) != n + 1) bad_param(spec.name, "needs n+1 semi-axes");
  for (double a : spec.axes) {
    if (!(a > 0.0)) bad_param(spec.name, "semi-axes must be positive");
    if (k > 0.0 && !(a < 1.0 / std::sqrt(k))) bad_param(spec.name, "semi-axes must be below 1/sqrt(k)");
  }
  const std::vector<double> axes = spec.axes;
  const double inv_k = 1.0 / k;
  const double sgn = k > 0.0 ? -1.0 : 1.0;  // x0^2 = 1/|k| + sgn |y|^2
  Shape s = base(spec, k, n);
  Chart c;
  c.domain = sphere_domain(n);
  c.ambient_dim = n + 2;
  c.map = [axes, inv_k, sgn](std::span<const HyperDual> u, std::span<HyperDual> out) {
    sphere_point<HyperDual>(u, out.subspan(1));
    HyperDual yy = 0.0;
    for (std::size_t i = 1; i < out.size(); ++i) {
      out[i] = axes[i - 1] * out[i];
      yy += out[i] * out[i];
    }
    out[0] = sqrt(std::abs(inv_k) + sgn * yy);
  };
  c.reference = [axes](std::span<const double> u) {
    const auto w = sphere_point_d(u);
    AmbientVector ref(static_cast<Eigen::Index>(w.size() + 1));
    ref[0] = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) ref[static_cast<Eigen::Index>(i + 1)] = w[i] / axes[i];
    return ref;
  };
  s.charts.push_back(std::move(c));
  s.euler_characteristic = static_cast<int>(sphere_euler(n));
  return s;
}

}  // namespace

double unit_sphere_volume(int n) {
  return 2.0 * std::pow(kPi, 0.5 * (n + 1)) / std::tgamma(0.5 * (n + 1));
}

const std::vector<CatalogEntry>& shape_catalog() {
  static const std::vector<CatalogEntry> catalog = {
      {"sphere_rn", "round sphere of radius rho in R^{n+1} (chi = 2 for even n)"},
      {"ellipsoid_rn", "axis-aligned ellipsoid in R^{n+1}, semi-axes --axes (chi = 2 for even n)"},
      {"torus_rev_r3", "torus of revolution in R^3, radii R > r > 0 (chi = 0); alias torus_rev"},
      {"tube_r5", "tube of radius r < 1 around the unit circle in R^5, S^1 x S^3 (chi = 0)"},
      {"geodesic_sphere_s", "geodesic sphere of intrinsic radius rho in S^{n+1}(k), k > 0 (chi = 2)"},
      {"geodesic_sphere_h", "geodesic sphere of radius rho in H^{n+1}(k), k < 0 (chi = 2)"},
      {"clifford_torus_s3", "flat torus with radii (cos alpha, sin alpha)/sqrt(k) in S^3(k) (chi = 0)"},
      {"tube_s5", "S^1 x S^3 with radii (cos alpha, sin alpha)/sqrt(k) in S^5(k) (chi = 0)"},
      {"lifted_ellipsoid", "ellipsoid lifted vertically onto S^{n+1}(k) or H^{n+1}(k) (chi = 2)"},
  };
  return catalog;
}

int default_dimension(const std::string& name) {
  return name == "tube_r5" || name == "tube_s5" ? 4 : 2;
}

std::vector<ShapeSpec> catalog_instances() {
  std::vector<ShapeSpec> out;
  auto add = [&out](ShapeSpec s) { out.push_back(std::move(s)); };
  ShapeSpec s;
  s = {};
  s.name = "sphere_rn";
  s.n = 2;
  add(s);
  s.n = 4;
  s.rho = 2.0;
  add(s);
  s = {};
  s.name = "ellipsoid_rn";
  s.axes = {1.0, 1.0, 2.0};
  add(s);
  s.n = 4;
  s.axes = {1.0, 1.2, 0.8, 1.5, 1.1};
  add(s);
  s = {};
  s.name = "torus_rev_r3";
  add(s);
  s = {};
  s.name = "tube_r5";
  s.n = 4;
  s.r = 0.5;
  add(s);
  s = {};
  s.name = "geodesic_sphere_s";
  s.k = 1.0;
  s.rho = kPi / 4.0;
  add(s);
  s.n = 4;
  s.rho = kPi / 3.0;
  add(s);
  s = {};
  s.name = "geodesic_sphere_h";
  s.k = -1.0;
  add(s);
  s.n = 4;
  add(s);
  s = {};
  s.name = "clifford_torus_s3";
  s.k = 1.0;
  add(s);
  s = {};
  s.name = "tube_s5";
  s.n = 4;
  s.k = 1.0;
  s.alpha = kPi / 5.0;
  add(s);
  s = {};
  s.name = "lifted_ellipsoid";
  s.k = 1.0;
  s.axes = {0.3, 0.4, 0.5};
  add(s);
  s.k = -1.0;
  s.axes = {0.5, 0.8, 1.1};
  add(s);
  s.n = 4;
  s.axes = {0.5, 0.6, 0.7, 0.8, 0.9};
  add(s);
  return out;
}

Shape make_shape(const ShapeSpec& spec) {
  const std::string& name = spec.name;
  if (name == "sphere_rn") return make_sphere_rn(spec);
  if (name == "ellipsoid_rn") return make_ellipsoid_rn(spec);
  if (name == "torus_rev_r3" || name == "torus_rev") {
    ShapeSpec canonical = spec;
    canonical.name = "torus_rev_r3";
    return make_torus_rev(canonical);
  }
  if (name == "tube_r5") return make_tube_r5(spec);
  if (name == "geodesic_sphere_s") return make_geodesic_sphere_s(spec);
  if (name == "geodesic_sphere_h") return make_geodesic_sphere_h(spec);
  if (name == "clifford_torus_s3") return make_clifford_torus(spec);
  if (name == "tube_s5") return make_tube_s5(spec);
  if (name == "lifted_ellipsoid") return make_lifted_ellipsoid(spec);
  throw ParameterError("unknown shape '" + name + "'");
}

}  // namespace hypercurv
