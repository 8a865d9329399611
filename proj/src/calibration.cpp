#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/SVD>

#include "hypercurv/errors.hpp"
#include "hypercurv/identities.hpp"

namespace hypercurv {

namespace {

constexpr double kPi = std::numbers::pi;

ShapeSpec geodesic_sphere(int n, double k, double rho) {
  ShapeSpec spec;
  spec.name = k > 0.0 ? "geodesic_sphere_s" : "geodesic_sphere_h";
  spec.n = n;
  spec.k = k;
  spec.rho = rho;
  return spec;
}

// Non-umbilic closed hypersurface of the same space form for validation.
ShapeSpec non_umbilic_validation_shape(int n, double k) {
  ShapeSpec spec;
  spec.n = n;
  spec.k = k;
  if (k > 0.0 && n == 2) {
    spec.name = "clifford_torus_s3";
    spec.alpha = kPi / 5.0;
  } else if (k > 0.0 && n == 4) {
    spec.name = "tube_s5";
    spec.alpha = kPi / 5.0;
  } else {
    spec.name = "lifted_ellipsoid";
    const double R = 1.0 / std::sqrt(std::abs(k));
    for (int i = 0; i <= n; ++i) spec.axes.push_back(R * (0.35 + 0.15 * i / std::max(1, n)));
  }
  return spec;
}

}  // namespace

std::vector<double> default_calibration_radii(int n, double k) {
  const int count = n / 2 + 1;
  std::vector<double> radii;
  const double R = 1.0 / std::sqrt(std::abs(k));
  for (int i = 0; i < count; ++i) {
    const double f = (i + 1.0) / (count + 1.0);
    radii.push_back(k > 0.0 ? R * kPi * (1.0 / 6.0 + f / 3.0) : R * (0.5 + 1.0 * f));
  }
  return radii;
}

CalibrationResult calibrate_gb_constants(int n, double k, std::vector<double> radii, const CalibrationOptions& opts) {
  if (n < 2 || n % 2 != 0) throw ContractViolation("calibration needs even n >= 2");
  if (k == 0.0) throw ContractViolation("calibration needs k != 0 (no constants enter when k = 0)");
  const int unknowns = n / 2;
  std::sort(radii.begin(), radii.end());
  if (std::adjacent_find(radii.begin(), radii.end()) != radii.end()) {
    throw ContractViolation("calibration radii must be distinct");
  }
  if (static_cast<int>(radii.size()) < unknowns) {
    throw ContractViolation("calibration needs at least n/2 radii");
  }

  const double half_vol = 0.5 * unit_sphere_volume(n);
  Eigen::MatrixXd A(static_cast<Eigen::Index>(radii.size()), unknowns);
  Eigen::VectorXd b(static_cast<Eigen::Index>(radii.size()));
  const Integrand terms = [n](const SurfaceSample& s, std::span<double> out) {
    out[0] = s.K[static_cast<std::size_t>(n)];
    for (int i = 1; i <= n / 2; ++i) out[static_cast<std::size_t>(i)] = s.K[static_cast<std::size_t>(n - 2 * i)];
  };
  for (std::size_t j = 0; j < radii.size(); ++j) {
    const Shape shape = make_shape(geodesic_sphere(n, k, radii[j]));
    const auto in = integrate_terms(shape, terms, unknowns + 1, opts.grid.resolve(n), opts.grid.max_points);
    const auto row = static_cast<Eigen::Index>(j);
    for (int i = 1; i <= unknowns; ++i) A(row, i - 1) = std::pow(k, i) * in.value[static_cast<std::size_t>(i)];
    b(row) = half_vol * shape.euler_characteristic - in.value[0];
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double condition = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
  if (!(condition <= opts.max_condition)) {
    std::ostringstream os;
    os << "calibration system is ill-conditioned (condition " << condition << "); choose more widely spread radii";
    throw CalibrationError(os.str());
  }
  const Eigen::VectorXd c = svd.solve(b);

  CalibrationResult result;
  result.n = n;
  result.k = k;
  result.radii = radii;
  result.condition = condition;
  result.constants.n = n;
  result.constants.k_independent = true;
  result.constants.c.assign(c.data(), c.data() + c.size());
  const Eigen::VectorXd res = A * c - b;
  for (Eigen::Index j = 0; j < res.size(); ++j) result.fit_residuals.push_back(res(j) / (2.0 * half_vol));

  result.pass = true;
  if (opts.validate) {
    CheckOptions check;
    check.grid = opts.grid;
    check.tol_rel = opts.validation_tol_rel;
    check.constants = result.constants;
    std::vector<ShapeSpec> held_out;
    for (std::size_t j = 0; j + 1 < radii.size(); ++j) {
      held_out.push_back(geodesic_sphere(n, k, 0.5 * (radii[j] + radii[j + 1])));
    }
    held_out.push_back(non_umbilic_validation_shape(n, k));
    for (const auto& spec : held_out) {
      auto rep = check_gauss_bonnet(make_shape(spec), check);
      result.pass = result.pass && rep.pass && rep.rel_err < opts.validation_tol_rel;
      result.validation.push_back(std::move(rep));
    }
  }
  return result;
}

}  // namespace hypercurv
