// Acceptance suite: one PASS/FAIL line per criterion. Exit status is 0 only
// when every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "app.hpp"
#include "hypercurv/curvature.hpp"
#include "hypercurv/identities.hpp"
#include "support.hpp"

using namespace hypercurv;
using std::numbers::pi;
using testing_support::Rng;

namespace {

// Pinned tolerances.
constexpr double kGrotemeyerRel = 1e-8;
constexpr double kGrotemeyerSeconds = 2.0;
constexpr double kFrameSumRel = 1e-8;
constexpr double kSurfaceRel = 1e-6;
constexpr double kFourDimRel = 1e-4;
constexpr int kFourDimNodes = 24;
constexpr double kMomentSeconds = 60.0;
constexpr double kClosedFormFlatRel = 1e-8;
constexpr double kCalibrationAbs = 1e-6;
constexpr double kTransferRel = 1e-3;
constexpr double kAlgebraRel = 1e-10;
constexpr int kAlgebraSamples = 1000;
constexpr double kAlgebraSeconds = 30.0;
constexpr double kPointwiseSurface = 1e-8;
constexpr double kPointwiseFourDim = 1e-6;
constexpr int kPointwiseSamples = 200;
constexpr int kManyThreads = 8;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  bool ok = true;
  std::vector<std::string> detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail.push_back(what);
    }
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string label(const IdentityReport& r) {
  std::ostringstream os;
  os << r.identity_id << " on " << r.shape.name << " (n=" << r.shape.n;
  if (r.shape.k) os << ", k=" << *r.shape.k;
  if (r.m >= 0) os << ", m=" << r.m;
  os << ")";
  return os.str();
}

// Two-sided residual measured against the largest term.
double residual_over_scale(const IdentityReport& r) { return r.abs_err / r.scale; }

ShapeSpec make_spec(const std::string& name, int n, std::optional<double> k = std::nullopt, double rho = 1.0) {
  ShapeSpec s;
  s.name = name;
  s.n = n;
  s.k = k;
  s.rho = rho;
  return s;
}

AmbientVector seeded_direction(const Shape& shape, int seed) {
  return app::parse_direction("random-seed:" + std::to_string(seed), shape.form);
}

AmbientVector axis(int dim, int i) {
  AmbientVector e = AmbientVector::Zero(dim);
  e[i] = 1.0;
  return e;
}

// --- criteria ---------------------------------------------------------------

Criterion grotemeyer_baseline() {
  Criterion c;
  const Shape sphere = make_shape(make_spec("sphere_rn", 2));
  const CheckOptions opts;
  std::vector<AmbientVector> dirs;
  for (int i = 0; i < 3; ++i) dirs.push_back(axis(3, i));
  for (int s = 0; s < 5; ++s) dirs.push_back(seeded_direction(sphere, 100 + s));
  const double exact = 4 * pi / 3;
  for (const auto& a : dirs) {
    const auto t0 = Clock::now();
    const auto r = check_grotemeyer(sphere, a, opts);
    const double dt = seconds_since(t0);
    c.require(r.nodes_per_axis == 96, "sphere check not at 96 nodes per axis");
    c.require(std::abs(r.lhs - exact) / exact < kGrotemeyerRel, "sphere lhs off 4pi/3: " + fmt("%.3e", r.lhs));
    c.require(r.pass, "sphere report failed");
    c.require(dt < kGrotemeyerSeconds, "sphere check took " + fmt("%.2f s", dt));
  }
  ShapeSpec ts = make_spec("torus_rev_r3", 2);
  const Shape torus = make_shape(ts);
  for (int s = 0; s < 3; ++s) {
    const auto r = check_grotemeyer(torus, seeded_direction(torus, 200 + s), opts);
    c.require(std::abs(r.lhs) < kGrotemeyerRel * 8 * pi * pi, "torus |lhs| = " + fmt("%.3e", std::abs(r.lhs)));
    c.require(r.rhs == 0.0 && r.pass, "torus report failed");
  }
  return c;
}

Criterion frame_sum_gauss_bonnet() {
  Criterion c;
  ShapeSpec ell = make_spec("ellipsoid_rn", 2);
  ell.axes = {1.0, 1.3, 2.0};
  for (const auto& sp : {make_spec("sphere_rn", 2), ell}) {
    const Shape s = make_shape(sp);
    const auto r = check_frame_sum(s, CheckOptions{});
    const double target = 2 * pi * s.euler_characteristic;
    c.require(std::abs(r.lhs - target) / target < kFrameSumRel, s.name + " frame sum " + fmt("%.12g", r.lhs));
    c.require(r.pass, s.name + " frame-sum report failed");
  }
  return c;
}

std::vector<ShapeSpec> space_form_surfaces() {
  std::vector<ShapeSpec> out;
  for (double k : {1.0, 4.0})
    for (double rho : {pi / 6, pi / 4, pi / 3}) out.push_back(make_spec("geodesic_sphere_s", 2, k, rho));
  for (double rho : {0.5, 1.0}) out.push_back(make_spec("geodesic_sphere_h", 2, -1.0, rho));
  out.push_back(make_spec("clifford_torus_s3", 2, 1.0));
  return out;
}

Criterion space_form_surface_identity() {
  Criterion c;
  int seed = 300;
  for (const auto& sp : space_form_surfaces()) {
    const Shape s = make_shape(sp);
    const auto r = check_corollary2(s, seeded_direction(s, seed++), CheckOptions{});
    c.require(residual_over_scale(r) < kSurfaceRel && r.pass,
              label(r) + " residual/scale " + fmt("%.3e", residual_over_scale(r)));
  }
  return c;
}

struct ShapeSet {
  std::vector<ShapeSpec> surfaces;
  std::vector<ShapeSpec> four_dim;
};

ShapeSet moment_shapes() {
  ShapeSet set;
  ShapeSpec ell = make_spec("ellipsoid_rn", 2);
  ell.axes = {1.0, 1.3, 2.0};
  set.surfaces = {ell, make_spec("geodesic_sphere_s", 2, 1.0, pi / 4), make_spec("geodesic_sphere_h", 2, -1.0, 0.8),
                  make_spec("clifford_torus_s3", 2, 1.0)};
  ShapeSpec tube_r5 = make_spec("tube_r5", 4);
  tube_r5.r = 0.5;
  ShapeSpec tube_s5 = make_spec("tube_s5", 4, 1.0);
  tube_s5.alpha = pi / 5;
  set.four_dim = {make_spec("sphere_rn", 4), tube_r5, tube_s5, make_spec("geodesic_sphere_s", 4, 1.0, pi / 3)};
  return set;
}

// Runs `check` for every shape of the set and m in `orders`, applying the
// surface or four-dimensional tolerance.
Criterion over_shape_set(const std::vector<int>& orders,
                         const std::function<IdentityReport(const Shape&, const AmbientVector&, int, const CheckOptions&)>& check,
                         bool timed) {
  Criterion c;
  const ShapeSet set = moment_shapes();
  int seed = 400;
  for (int pass = 0; pass < 2; ++pass) {
    const auto& specs = pass == 0 ? set.surfaces : set.four_dim;
    const double tol = pass == 0 ? kSurfaceRel : kFourDimRel;
    CheckOptions opts;
    if (pass == 1) {
      opts.grid.nodes = kFourDimNodes;
      opts.tol_rel = kFourDimRel;
    }
    for (const auto& sp : specs) {
      const Shape s = make_shape(sp);
      const AmbientVector a = seeded_direction(s, seed++);
      for (int m : orders) {
        const auto t0 = Clock::now();
        const auto r = check(s, a, m, opts);
        const double dt = seconds_since(t0);
        c.require(residual_over_scale(r) < tol && r.pass,
                  label(r) + " residual/scale " + fmt("%.3e", residual_over_scale(r)));
        if (timed) c.require(dt < kMomentSeconds, label(r) + " took " + fmt("%.1f s", dt));
      }
    }
  }
  return c;
}

Criterion moment_family() {
  return over_shape_set({1, 2, 3, 4}, check_moment_identity, true);
}

Criterion vector_and_bivens() {
  Criterion v = over_shape_set({0, 1, 2, 3}, check_vector_identity, false);
  Criterion b = over_shape_set(
      {0}, [](const Shape& s, const AmbientVector& a, int, const CheckOptions& o) { return check_bivens(s, a, o); },
      false);
  v.ok = v.ok && b.ok;
  v.detail.insert(v.detail.end(), b.detail.begin(), b.detail.end());
  return v;
}

Criterion closed_forms() {
  Criterion c;
  const CheckOptions opts;
  const Shape sphere = make_shape(make_spec("sphere_rn", 2));
  const auto r4 = check_closed_form(sphere, seeded_direction(sphere, 500), 4, opts);
  const double exact = 4 * pi / 5;
  c.require(std::abs(r4.lhs - exact) / exact < kClosedFormFlatRel, "unit sphere int q^4 G = " + fmt("%.15g", r4.lhs));
  c.require(std::abs(r4.rhs - exact) / exact < 1e-15, "double-factorial rhs " + fmt("%.15g", r4.rhs));

  ShapeSpec ell = make_spec("ellipsoid_rn", 2);
  ell.axes = {1.0, 1.3, 2.0};
  const Shape e = make_shape(ell);
  for (int m : {1, 3, 5}) {
    const auto r = check_closed_form(e, seeded_direction(e, 510 + m), m, opts);
    c.require(r.rhs == 0.0 && std::abs(r.lhs) < kClosedFormFlatRel * r.scale,
              label(r) + " |lhs|/scale " + fmt("%.3e", std::abs(r.lhs) / r.scale));
  }
  for (int m : {2, 4}) {
    const auto r = check_closed_form(e, seeded_direction(e, 520 + m), m, opts);
    c.require(r.abs_err < kClosedFormFlatRel * r.scale, label(r) + " residual " + fmt("%.3e", r.abs_err));
  }

  ShapeSpec lifted = make_spec("lifted_ellipsoid", 2, -1.0);
  lifted.axes = {0.5, 0.8, 1.1};
  std::vector<ShapeSpec> curved = space_form_surfaces();
  curved.push_back(lifted);
  int seed = 530;
  for (const auto& sp : curved) {
    const Shape s = make_shape(sp);
    for (int m = 1; m <= 4; ++m) {
      const auto r = check_closed_form(s, seeded_direction(s, seed++), m, opts);
      c.require(residual_over_scale(r) < kSurfaceRel && r.pass,
                label(r) + " residual/scale " + fmt("%.3e", residual_over_scale(r)));
    }
  }
  return c;
}

Criterion calibration() {
  Criterion c;
  const auto s2 = calibrate_gb_constants(2, 1.0, {pi / 6, pi / 3});
  c.require(std::abs(s2.constants.c[0] - 1.0) < kCalibrationAbs, "k=1: c1 = " + fmt("%.12g", s2.constants.c[0]));
  const auto h2 = calibrate_gb_constants(2, -1.0, {0.5, 1.0});
  c.require(std::abs(h2.constants.c[0] - 1.0) < kCalibrationAbs, "k=-1: c1 = " + fmt("%.12g", h2.constants.c[0]));

  CalibrationOptions calib;
  calib.validate = false;
  const auto s4 = calibrate_gb_constants(4, 1.0, {pi / 6, pi / 4, pi / 3}, calib);
  CheckOptions opts;
  opts.constants = s4.constants;
  ShapeSpec tube = make_spec("tube_s5", 4, 1.0);
  tube.alpha = pi / 5;
  for (const auto& sp : {make_spec("geodesic_sphere_h", 4, -1.0, 0.8), tube}) {
    const auto r = check_gauss_bonnet(make_shape(sp), opts);
    c.require(residual_over_scale(r) < kTransferRel,
              "transfer to " + label(r) + " residual/scale " + fmt("%.3e", residual_over_scale(r)));
  }
  return c;
}

double rel(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

double mat_rel(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
}

Criterion algebraic_layer() {
  Criterion c;
  const auto t0 = Clock::now();
  Rng rng(8);
  for (int n = 2; n <= 5; ++n) {
    double worst = 0.0;
    for (int trial = 0; trial < kAlgebraSamples; ++trial) {
      const auto B = testing_support::random_symmetric(rng, n);
      const auto pack = curvature_pack(B);
      const auto alt = newton_tensors_alternating(B);
      const double bn = std::pow(std::max(1.0, B.norm()), n);
      for (int r = 0; r <= n; ++r) {
        worst = std::max(worst, mat_rel(pack.T[r], alt[r]));
        worst = std::max(worst, rel(pack.K[r], kr_via_delta(B, r)));
        worst = std::max(worst, mat_rel(pack.T[r], tr_via_delta(B, r)) * (r == n ? 1.0 / bn : 1.0));
        worst = std::max(worst, rel(pack.T[r].trace(), (n - r) * pack.K[r]));
        if (r < n) worst = std::max(worst, rel((B * pack.T[r]).trace(), (r + 1) * pack.K[r + 1]));
      }
      worst = std::max(worst, pack.T[n].cwiseAbs().maxCoeff() / bn);
    }
    c.require(worst < kAlgebraRel, "n=" + std::to_string(n) + " worst relative disagreement " + fmt("%.3e", worst));
  }
  const double dt = seconds_since(t0);
  c.require(dt < kAlgebraSeconds, "algebra layer took " + fmt("%.1f s", dt));
  return c;
}

Criterion pointwise_geometry() {
  Criterion c;
  std::uint64_t seed = 900;
  for (const auto& sp : catalog_instances()) {
    const Shape s = make_shape(sp);
    const double threshold = s.form.n <= 2 ? kPointwiseSurface : kPointwiseFourDim;
    const auto r = app::scan_shape(s, kPointwiseSamples, seed++, threshold);
    const double worst = std::max({r.gauss_formula, r.weingarten, r.reilly_position});
    c.require(r.pass, s.name + " (n=" + std::to_string(s.form.n) + ") worst residual " + fmt("%.3e", worst));
  }
  return c;
}

Criterion determinism() {
  Criterion c;
  std::vector<app::RunConfig> configs;
  {
    app::RunConfig v;
    v.command = "verify";
    v.shape.name = "sphere_rn";
    v.shape_given = true;
    v.identities = {"grotemeyer", "closed_form"};
    v.directions = {"random-seed:11", "0,0,1"};
    v.m_values = {3, 4};
    configs.push_back(v);
  }
  {
    app::RunConfig v;
    v.command = "verify";
    v.shape.name = "geodesic_sphere_h";
    v.shape.k = -1.0;
    v.shape.rho = 0.8;
    v.shape_given = true;
    v.identities = {"moment", "vector", "frame_sum"};
    v.directions = {"random-seed:12"};
    v.m_values = {1, 2};
    configs.push_back(v);
  }
  {
    app::RunConfig v;
    v.command = "verify";
    v.shape.name = "tube_s5";
    v.shape.n = 4;
    v.shape.k = 1.0;
    v.shape.alpha = pi / 5;
    v.shape_given = true;
    v.identities = {"moment"};
    v.directions = {"random-seed:13"};
    v.m_values = {2};
    configs.push_back(v);
  }
  {
    app::RunConfig v;
    v.command = "scan";
    v.samples = 50;
    v.seed = 14;
    configs.push_back(v);
  }
  {
    app::RunConfig v;
    v.command = "calibrate";
    v.shape.n = 2;
    v.shape.k = 1.0;
    v.radii = {0.5, 1.0};
    configs.push_back(v);
  }
  for (auto cfg : configs) {
    std::vector<std::string> texts;
    for (int threads : {1, kManyThreads, 1, kManyThreads}) {
      cfg.threads = threads;
      std::ostringstream out, err;
      const int code = app::run(cfg, out, err);
      c.require(code == app::kExitPass, cfg.command + " exited with " + std::to_string(code));
      texts.push_back(out.str());
    }
    bool same = true;
    for (const auto& t : texts) same = same && t == texts[0];
    c.require(same && !texts[0].empty(), cfg.command + " report differs between runs or thread counts");
  }
  omp_set_num_threads(1);
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Criterion()> run;
  };
  const std::vector<Entry> entries = {
      {"Grotemeyer baseline on the unit sphere and torus", grotemeyer_baseline},
      {"frame-sum Gauss-Bonnet on sphere and ellipsoid", frame_sum_gauss_bonnet},
      {"space-form surface identity on geodesic spheres and Clifford torus", space_form_surface_identity},
      {"moment family m = 1..4, n = 2 and n = 4", moment_family},
      {"vector and bivens identities", vector_and_bivens},
      {"closed forms with double-factorial coefficients", closed_forms},
      {"Gauss-Bonnet constant calibration and transfer", calibration},
      {"Newton tensor algebra on random symmetric matrices", algebraic_layer},
      {"pointwise Gauss, Weingarten and Reilly residuals", pointwise_geometry},
      {"byte-identical reports across runs and thread counts", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto t0 = Clock::now();
    Criterion c;
    try {
      c = entries[i].run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail.push_back(std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    std::printf("criterion %2zu: %s  %s  (%.1f s)\n", i + 1, c.ok ? "PASS" : "FAIL", entries[i].name, dt);
    for (const auto& d : c.detail) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(entries.size()) - failures, entries.size());
  return failures == 0 ? 0 : 1;
}
