#pragma once

#include <Eigen/Dense>

namespace hypercurv {

/// Coordinates in the ambient linear space L_{n+1}(k).
using AmbientVector = Eigen::VectorXd;

/// Signature of the ambient linear space. At most one negative sign, always
/// on coordinate 0.
struct Signature {
  int dim = 0;
  int negatives = 0;

  /// Weight of coordinate i in the inner product (+1 or -1).
  double weight(int i) const { return (negatives == 1 && i == 0) ? -1.0 : 1.0; }
  bool operator==(const Signature&) const = default;
};

/// Simply connected space form of sectional curvature k, of hypersurface
/// dimension n, standardly embedded in its linear space.
struct SpaceForm {
  double k = 0.0;
  int n = 2;
  Signature signature;

  SpaceForm() = default;
  SpaceForm(double curvature, int dimension);

  int ambient_dim() const { return signature.dim; }
  bool flat() const { return k == 0.0; }
};

Signature signature_for(double k, int n);

double inner_product(const AmbientVector& u, const AmbientVector& v, const Signature& sig);

/// True iff x satisfies the embedding constraint <x,x> = 1/k (and lies on
/// the upper sheet when k < 0). Always true for k = 0.
bool validate_point(const AmbientVector& x, const SpaceForm& form, double tol);

/// Rescales a so that |<a,a>| = 1. Returns the achieved <a,a> (+1 or -1).
/// Throws ContractViolation for null or mis-sized a.
double normalize_direction(AmbientVector& a, const Signature& sig);

}  // namespace hypercurv
