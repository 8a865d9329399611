#include "hypercurv/ambient.hpp"

#include <cmath>
#include <string>

#include "hypercurv/errors.hpp"

namespace hypercurv {

Signature signature_for(double k, int n) {
  if (n < 1) throw ContractViolation("hypersurface dimension must be positive");
  Signature sig;
  sig.dim = (k == 0.0) ? n + 1 : n + 2;
  sig.negatives = (k < 0.0) ? 1 : 0;
  return sig;
}

SpaceForm::SpaceForm(double curvature, int dimension)
    : k(curvature), n(dimension), signature(signature_for(curvature, dimension)) {}

double inner_product(const AmbientVector& u, const AmbientVector& v, const Signature& sig) {
  if (u.size() != sig.dim || v.size() != sig.dim) {
    throw ContractViolation("inner_product: vector length " + std::to_string(u.size()) + "/" +
                            std::to_string(v.size()) + " does not match signature dimension " +
                            std::to_string(sig.dim));
  }
  double s = u.dot(v);
  if (sig.negatives == 1) s -= 2.0 * u[0] * v[0];
  return s;
}

bool validate_point(const AmbientVector& x, const SpaceForm& form, double tol) {
  if (x.size() != form.ambient_dim()) return false;
  if (!x.allFinite()) return false;
  if (form.k == 0.0) return true;
  const double xx = inner_product(x, x, form.signature);
  if (std::abs(xx - 1.0 / form.k) > tol) return false;
  if (form.k < 0.0 && !(x[0] > 0.0)) return false;
  return true;
}

double normalize_direction(AmbientVector& a, const Signature& sig) {
  const double aa = inner_product(a, a, sig);
  if (!std::isfinite(aa) || std::abs(aa) <= 1e-12 * a.squaredNorm()) {
    throw ContractViolation("direction vector a is null or lightlike (<a,a> = 0)");
  }
  a /= std::sqrt(std::abs(aa));
  return aa > 0.0 ? 1.0 : -1.0;
}

}  // namespace hypercurv
