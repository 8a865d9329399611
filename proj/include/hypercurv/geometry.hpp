#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hypercurv/ambient.hpp"
#include "hypercurv/curvature.hpp"
#include "hypercurv/jets.hpp"

namespace hypercurv {

/// Fixes the sign of the unit normal: the normal is chosen with positive
/// inner product against `reference`, then multiplied by `sign`.
struct Orientation {
  AmbientVector reference;
  int sign = 1;
};

/// Extrinsic geometry at one chart point.
///
/// Sign convention: h_ij = <d_i d_j x, normal> and d_i normal = -S^j_i d_j x.
/// With the outward normal on a round sphere this gives h = -g and all
/// principal curvatures negative.
struct PointGeometry {
  Jet2 jet;
  Eigen::MatrixXd g;
  Eigen::MatrixXd g_inv;
  Eigen::MatrixXd h;
  Eigen::MatrixXd S;  // shape operator g^{-1} h, S(j, i) = S^j_i
  AmbientVector normal;
  std::vector<double> christoffel;  // christoffel[(k*n + i)*n + j] = Gamma^k_ij
  double density = 0.0;
  /// d_i normal, filled only when requested from point_geometry.
  std::vector<AmbientVector> normal_derivatives;

  int dim() const { return static_cast<int>(g.rows()); }
  double gamma(int k, int i, int j) const {
    const int n = dim();
    return christoffel[static_cast<std::size_t>((k * n + i) * n + j)];
  }
};

PointGeometry point_geometry(const Jet2& jet, const SpaceForm& form, const Orientation& orientation,
                             bool with_normal_derivatives = false);

/// Eigenvalues of h v = lambda g v, descending.
std::vector<double> principal_curvatures(const PointGeometry& pt);

/// Second fundamental form in the orthonormal frame e = L^{-1} d x, where g = L L^T.
Eigen::MatrixXd frame_second_form(const PointGeometry& pt);

/// Converts a frame tensor T_ab to contravariant coordinates T^{ij}.
Eigen::MatrixXd frame_to_contravariant(const PointGeometry& pt, const Eigen::MatrixXd& T);

/// Covariant Hessian of the position, x_ij = d_i d_j x - Gamma^k_ij d_k x.
AmbientVector position_hessian(const PointGeometry& pt, int i, int j);

double check_gauss_formula(const PointGeometry& pt, const SpaceForm& form);
double check_weingarten(const PointGeometry& pt);
double check_reilly_position(const PointGeometry& pt, int r, const SpaceForm& form);

}  // namespace hypercurv
