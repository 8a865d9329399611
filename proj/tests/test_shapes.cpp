#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <set>

#include "hypercurv/errors.hpp"
#include "hypercurv/quadrature.hpp"
#include "hypercurv/shapes.hpp"
#include "support.hpp"

using namespace hypercurv;
using std::numbers::pi;
using testing_support::spec;

namespace {
double area_of(const Shape& s) {
  return integrate(s, [](const SurfaceSample&) { return 1.0; }, GridSpec{});
}
}  // namespace

TEST_CASE("catalog contents") {
  std::set<std::string> names;
  for (const auto& e : shape_catalog()) names.insert(e.name);
  for (const char* required : {"sphere_rn", "ellipsoid_rn", "torus_rev_r3", "tube_r5", "geodesic_sphere_s",
                               "geodesic_sphere_h", "clifford_torus_s3"})
    CHECK(names.count(required) == 1);
  CHECK(make_shape(spec("torus_rev")).name == "torus_rev_r3");
  CHECK_THROWS_AS(make_shape(spec("klein_bottle")), ParameterError);
}

TEST_CASE("Euler characteristics") {
  CHECK(euler_characteristic(make_shape(spec("sphere_rn", 4))) == 2);
  CHECK(euler_characteristic(make_shape(spec("sphere_rn", 2))) == 2);
  ShapeSpec tube = spec("tube_r5", 4);
  tube.r = 0.5;
  CHECK(euler_characteristic(make_shape(tube)) == 0);
  CHECK(euler_characteristic(make_shape(spec("clifford_torus_s3"))) == 0);
  CHECK(euler_characteristic(make_shape(spec("torus_rev_r3"))) == 0);
  CHECK(euler_characteristic(make_shape(spec("tube_s5", 4))) == 0);
  CHECK(euler_characteristic(make_shape(spec("geodesic_sphere_h", 4))) == 2);
  CHECK(euler_characteristic(make_shape(spec("sphere_rn", 3))) == 0);
}

TEST_CASE("reference data of the geodesic spheres") {
  ShapeSpec s = spec("geodesic_sphere_s");
  s.k = 1.0;
  s.rho = pi / 4;
  const Shape gs = make_shape(s);
  CHECK(gs.reference_data.at("area") == doctest::Approx(2 * pi).epsilon(1e-15));
  CHECK(gs.reference_data.at("curvature_magnitude") == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(area_of(gs) / (2 * pi) - 1.0) < 1e-8);

  ShapeSpec h = spec("geodesic_sphere_h");
  h.k = -1.0;
  h.rho = 1.0;
  const Shape gh = make_shape(h);
  const double area = 4 * pi * std::sinh(1.0) * std::sinh(1.0);
  CHECK(gh.reference_data.at("area") == doctest::Approx(area).epsilon(1e-15));
  CHECK(gh.reference_data.at("curvature_magnitude") == doctest::Approx(1.0 / std::tanh(1.0)).epsilon(1e-15));
  CHECK(std::abs(area_of(gh) / area - 1.0) < 1e-8);

  const Shape torus = make_shape(spec("torus_rev_r3"));
  CHECK(torus.reference_data.at("area") == doctest::Approx(8 * pi * pi));
}

TEST_CASE("integrated areas match the reference data") {
  for (const auto& sp : catalog_instances()) {
    const Shape s = make_shape(sp);
    const auto it = s.reference_data.find("area");
    if (it == s.reference_data.end()) continue;
    CAPTURE(s.name);
    CAPTURE(s.form.n);
    CHECK(std::abs(area_of(s) / it->second - 1.0) < 1e-8);
  }
}

TEST_CASE("umbilic shapes have zero principal-curvature spread at every node") {
  for (const auto& sp : catalog_instances()) {
    if (sp.name != "sphere_rn" && sp.name != "geodesic_sphere_s" && sp.name != "geodesic_sphere_h") continue;
    const Shape s = make_shape(sp);
    CAPTURE(s.name);
    CAPTURE(s.form.n);
    const double expected = s.reference_data.at("principal_curvature");
    double spread = 0.0, off = 0.0;
    integrate(
        s,
        [&](const SurfaceSample& smp) {
          spread = std::max(spread, smp.principal.front() - smp.principal.back());
          off = std::max(off, std::abs(smp.principal.front() - expected));
          return 0.0;
        },
        GridSpec{});
    CHECK(spread < 1e-8);
    CHECK(off < 1e-8);
  }
}

TEST_CASE("parameter validation") {
  ShapeSpec t = spec("torus_rev_r3");
  t.R = 1.0;
  t.r = 1.0;
  CHECK_THROWS_AS(make_shape(t), ParameterError);
  ShapeSpec g = spec("geodesic_sphere_s");
  g.k = 1.0;
  g.rho = 4.0;  // beyond pi / sqrt(k)
  CHECK_THROWS_AS(make_shape(g), ParameterError);
  g.k = -1.0;
  CHECK_THROWS_AS(make_shape(g), ParameterError);
  ShapeSpec h = spec("geodesic_sphere_h");
  h.rho = -1.0;
  CHECK_THROWS_AS(make_shape(h), ParameterError);
  ShapeSpec tube = spec("tube_r5", 4);
  tube.r = 1.5;
  CHECK_THROWS_AS(make_shape(tube), ParameterError);
  ShapeSpec e = spec("ellipsoid_rn");
  e.axes = {1.0, 2.0};
  CHECK_THROWS_AS(make_shape(e), ParameterError);
  e.axes = {1.0, -2.0, 1.0};
  CHECK_THROWS_AS(make_shape(e), ParameterError);
  ShapeSpec c = spec("clifford_torus_s3");
  c.alpha = 2.0;
  CHECK_THROWS_AS(make_shape(c), ParameterError);
  ShapeSpec sp = spec("sphere_rn");
  sp.k = 1.0;
  CHECK_THROWS_AS(make_shape(sp), ParameterError);
  ShapeSpec lifted = spec("lifted_ellipsoid");
  lifted.k = 1.0;
  lifted.axes = {0.5, 1.2, 0.5};  // leaves the unit hemisphere
  CHECK_THROWS_AS(make_shape(lifted), ParameterError);
}

TEST_CASE("space forms of the catalog shapes") {
  ShapeSpec tube = spec("tube_r5", 4);
  tube.r = 0.5;
  CHECK(make_shape(tube).form.ambient_dim() == 5);
  ShapeSpec c = spec("clifford_torus_s3");
  const Shape cl = make_shape(c);
  CHECK(cl.form.k == 1.0);
  CHECK(cl.form.ambient_dim() == 4);
  const Shape h = make_shape(spec("geodesic_sphere_h", 4));
  CHECK(h.form.k < 0.0);
  CHECK(h.form.signature.negatives == 1);
  CHECK(h.form.ambient_dim() == 6);
  CHECK(unit_sphere_volume(2) == doctest::Approx(4 * pi));
  CHECK(unit_sphere_volume(4) == doctest::Approx(8 * pi * pi / 3));
}
