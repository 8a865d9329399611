#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypercurv/ambient.hpp"
#include "hypercurv/quadrature.hpp"
#include "hypercurv/shapes.hpp"

namespace hypercurv {

enum class IdentityId {
  grotemeyer,       // int q^2 G = (2 pi / 3) chi, surfaces in R^3
  corollary2,       // surfaces in N^3(k)
  moment,           // moment family in m >= 1
  vector,           // vector form of the moment family, m >= 0
  bivens,           // int [n q G - k p K_{n-1}] = 0
  theorem2_direct,  // m = 1 moment identity solved for int q^2 G (no Gauss-Bonnet input)
  theorem2,         // same with int G replaced by the Gauss-Bonnet right-hand side
  gauss_bonnet,
  frame_sum,        // signature-weighted sum over a coordinate frame
  recursion,        // int q^m G in terms of order m-2 and m-1 integrals
  closed_form,      // fully unrolled recursion with double-factorial coefficients
};

std::string to_string(IdentityId id);
std::optional<IdentityId> parse_identity(const std::string& name);
const std::vector<IdentityId>& all_identities();

/// Constants c_1..c_{n/2} of the space-form Gauss-Bonnet formula
///   int G dv = (vol S^n / 2) chi - sum_i c_i k^i int K_{n-2i} dv.
struct GaussBonnetConstants {
  int n = 0;
  bool k_independent = true;
  std::vector<double> c;
};

/// c_1 = 1 for surfaces (int G = 2 pi chi - k area).
GaussBonnetConstants surface_constants();

struct CheckOptions {
  GridSpec grid;
  double tol_rel = 1e-6;
  std::optional<GaussBonnetConstants> constants;
  bool allow_timelike = false;
};

/// Outcome of one identity check.
///
/// pass <=> abs_err <= max(tol_rel * scale, 3 * quadrature_error_proxy),
/// where scale is the largest |coefficient| * int |integrand| dv over the
/// terms of the identity (and |constant| for constant terms).
struct IdentityReport {
  std::string identity_id;
  ShapeSpec shape;
  AmbientVector a;
  double a_norm = 0.0;  // <a,a> after normalization: +1 spacelike, -1 timelike
  int m = -1;           // -1 when the identity has no moment order
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double scale = 0.0;
  double quadrature_error_proxy = 0.0;
  int nodes_per_axis = 0;
  int coarse_nodes_per_axis = 0;
  std::size_t total_nodes = 0;
  double tol_rel = 0.0;
  bool pass = false;
  std::vector<std::pair<std::string, double>> extras;
  std::vector<std::string> notes;
};

IdentityReport check_grotemeyer(const Shape& shape, const AmbientVector& a, const CheckOptions& opts);
IdentityReport check_corollary2(const Shape& shape, const AmbientVector& a, const CheckOptions& opts);
IdentityReport check_moment_identity(const Shape& shape, const AmbientVector& a, int m, const CheckOptions& opts);
IdentityReport check_vector_identity(const Shape& shape, const AmbientVector& a, int m, const CheckOptions& opts);
IdentityReport check_bivens(const Shape& shape, const AmbientVector& a, const CheckOptions& opts);
IdentityReport check_theorem2_direct(const Shape& shape, const AmbientVector& a, const CheckOptions& opts);
IdentityReport check_theorem2(const Shape& shape, const AmbientVector& a, const CheckOptions& opts);
IdentityReport check_gauss_bonnet(const Shape& shape, const CheckOptions& opts);
IdentityReport check_frame_sum(const Shape& shape, const CheckOptions& opts);
IdentityReport check_recursion(const Shape& shape, const AmbientVector& a, int m, const CheckOptions& opts);
IdentityReport check_closed_form(const Shape& shape, const AmbientVector& a, int m, const CheckOptions& opts);

/// Dispatch by id. `m` is ignored by identities without a moment order.
IdentityReport run_identity(IdentityId id, const Shape& shape, const AmbientVector& a, int m,
                            const CheckOptions& opts);

/// Componentwise residual (lhs - rhs) of the vector moment identity on the fine grid.
AmbientVector vector_identity_residual(const Shape& shape, const AmbientVector& a, int m, const CheckOptions& opts);

/// Coefficients of the unrolled moment recursion:
///   int q^m G = base * B + sum_j p2[j] int q^j p^2 G + sum_j pk[j] int q^j p K_{n-1},
/// with B = int G for even m (and base = 0 for odd m). `aa` is <a,a>.
struct ClosedFormCoefficients {
  double base = 0.0;
  std::vector<double> p2;  // indexed by power j of q, size m
  std::vector<double> pk;  // indexed by power j of q, size m
};
ClosedFormCoefficients closed_form_coefficients(int n, int m, double k, double aa = 1.0);

// --- Calibration of the Gauss-Bonnet constants ----------------------------

struct CalibrationOptions {
  GridSpec grid;
  double validation_tol_rel = 1e-3;
  bool validate = true;
  double max_condition = 1e8;
};

struct CalibrationResult {
  GaussBonnetConstants constants;
  int n = 0;
  double k = 0.0;
  std::vector<double> radii;
  double condition = 0.0;
  std::vector<double> fit_residuals;  // per radius, scaled by vol S^n
  std::vector<IdentityReport> validation;
  bool pass = false;
};

/// Least-squares fit of c_1..c_{n/2} over geodesic spheres of the given
/// radii, validated on held-out radii and one non-umbilic shape.
CalibrationResult calibrate_gb_constants(int n, double k, std::vector<double> radii,
                                         const CalibrationOptions& opts = {});

/// n/2 + 1 default radii spread over the admissible range.
std::vector<double> default_calibration_radii(int n, double k);

}  // namespace hypercurv
