#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace hypercurv {

/// r-th mean curvatures K_0..K_n and Newton tensors T_0..T_n at a point,
/// expressed in an orthonormal tangent frame.
struct CurvaturePack {
  std::vector<double> K;
  std::vector<Eigen::MatrixXd> T;

  int dim() const { return static_cast<int>(K.size()) - 1; }
  double gauss_kronecker() const { return K.back(); }
};

/// Unnormalized elementary symmetric polynomials e_0..e_n of the principal
/// curvatures (K_1 is the plain sum, K_n the Gauss-Kronecker curvature).
std::vector<double> mean_curvatures(std::span<const double> principal);

/// Eigenvalues of a symmetric matrix, descending.
std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& B);

/// Newton tensors by the recursion T_r = K_r I - B T_{r-1}, with K_r taken
/// from the eigenvalues of B. Throws ContractViolation if B is not symmetric.
std::vector<Eigen::MatrixXd> newton_tensors(const Eigen::MatrixXd& B);

/// Newton tensors by the alternating power sum K_r I - K_{r-1} B + ... + (-1)^r B^r.
std::vector<Eigen::MatrixXd> newton_tensors_alternating(const Eigen::MatrixXd& B);

CurvaturePack curvature_pack(const Eigen::MatrixXd& B);

// Brute-force oracles. These sum the generalized Kronecker delta expansion
// term by term and are only meant for small n in tests.

/// Generalized Kronecker delta: +1/-1 when J is an even/odd permutation of
/// the distinct indices I, 0 otherwise.
int gen_kronecker(std::span<const int> I, std::span<const int> J);

inline constexpr int kMaxOracleDim = 5;

/// K_r = (1/r!) sum delta^{J}_{I} h_{i1 j1} ... h_{ir jr}.
double kr_via_delta(const Eigen::MatrixXd& B, int r);

/// T^r_{ij} = (1/r!) sum delta^{j1..jr j}_{i1..ir i} h_{i1 j1} ... h_{ir jr}.
Eigen::MatrixXd tr_via_delta(const Eigen::MatrixXd& B, int r);

}  // namespace hypercurv
