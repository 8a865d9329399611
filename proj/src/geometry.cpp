#include "hypercurv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "hypercurv/errors.hpp"
#include "hypercurv/hyperdual.hpp"

namespace hypercurv {

namespace {

constexpr double kMaxImmersionCondition = 1e12;

template <class S>
using Vec = std::vector<S>;

template <class S>
S signed_dot(const Vec<S>& u, const Vec<S>& v, const Signature& sig) {
  S s = 0.0;
  for (int c = 0; c < sig.dim; ++c) s += sig.weight(c) * (u[c] * v[c]);
  return s;
}

// Unit normal to span(basis) under the signed inner product, by modified
// Gram-Schmidt followed by projecting the best-conditioned coordinate axis.
// Instantiated with HyperDual to differentiate the normal along the chart;
// all branch decisions use value parts only, so both instantiations agree.
template <class S>
Vec<S> unit_normal(std::vector<Vec<S>> basis, const Signature& sig, const AmbientVector& reference,
                   int sign) {
  const int m = sig.dim;
  std::vector<S> norms;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    for (std::size_t j = 0; j < b; ++j) {
      const S coef = signed_dot(basis[b], basis[j], sig) / norms[j];
      for (int c = 0; c < m; ++c) basis[b][c] -= coef * basis[j][c];
    }
    norms.push_back(signed_dot(basis[b], basis[b], sig));
    if (value_of(norms.back()) == 0.0) throw DegenerateImmersion("tangent frame is degenerate");
  }

  Vec<S> best;
  double best_norm = -1.0;
  S best_rr = 0.0;
  for (int axis = 0; axis < m; ++axis) {
    Vec<S> r(static_cast<std::size_t>(m), S(0.0));
    r[axis] = 1.0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const S coef = signed_dot(r, basis[j], sig) / norms[j];
      for (int c = 0; c < m; ++c) r[c] -= coef * basis[j][c];
    }
    const S rr = signed_dot(r, r, sig);
    if (value_of(rr) > best_norm) {
      best_norm = value_of(rr);
      best_rr = rr;
      best = std::move(r);
    }
  }
  if (!(best_norm > 1e-12)) throw NumericalDegeneracy("normal direction is not spacelike");

  using std::sqrt;
  const S len = sqrt(best_rr);
  for (auto& c : best) c = c / len;

  double alignment = 0.0;
  for (int c = 0; c < m; ++c) alignment += sig.weight(c) * value_of(best[c]) * reference[c];
  if (alignment == 0.0 || !std::isfinite(alignment)) {
    throw NumericalDegeneracy("orientation reference is tangent to the hypersurface");
  }
  if ((alignment < 0.0) != (sign < 0)) {
    for (auto& c : best) c = -c;
  }
  return best;
}

Vec<double> to_vec(const AmbientVector& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

PointGeometry point_geometry(const Jet2& jet, const SpaceForm& form, const Orientation& orientation,
                             bool with_normal_derivatives) {
  const int n = jet.dim();
  const auto& sig = form.signature;
  if (n != form.n) throw ContractViolation("jet dimension does not match the space form");
  if (jet.x.size() != sig.dim) throw ContractViolation("jet ambient dimension does not match the space form");
  if (orientation.reference.size() != sig.dim) throw ContractViolation("orientation reference has wrong size");

  PointGeometry pt;
  pt.jet = jet;
  pt.g.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      pt.g(i, j) = pt.g(j, i) = inner_product(jet.dx[i], jet.dx[j], sig);
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> geig(pt.g, Eigen::EigenvaluesOnly);
  const double lmin = geig.eigenvalues().minCoeff();
  const double lmax = geig.eigenvalues().maxCoeff();
  if (!(lmin > 0.0) || !std::isfinite(lmax)) {
    throw DegenerateImmersion("first fundamental form is not positive definite (rank-deficient dx)");
  }
  if (std::sqrt(lmax / lmin) > kMaxImmersionCondition) {
    throw NumericalDegeneracy("immersion condition number exceeds 1e12");
  }

  Eigen::LLT<Eigen::MatrixXd> llt(pt.g);
  if (llt.info() != Eigen::Success) throw DegenerateImmersion("Cholesky of first fundamental form failed");
  pt.g_inv = llt.solve(Eigen::MatrixXd::Identity(n, n));
  pt.g_inv = 0.5 * (pt.g_inv + pt.g_inv.transpose()).eval();
  const Eigen::MatrixXd L = llt.matrixL();
  pt.density = L.diagonal().prod();

  std::vector<Vec<double>> basis;
  for (int i = 0; i < n; ++i) basis.push_back(to_vec(jet.dx[i]));
  if (!form.flat()) basis.push_back(to_vec(jet.x));
  const auto nv = unit_normal<double>(basis, sig, orientation.reference, orientation.sign);
  pt.normal = Eigen::Map<const AmbientVector>(nv.data(), static_cast<Eigen::Index>(nv.size()));

  pt.h.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      pt.h(i, j) = pt.h(j, i) = inner_product(jet.second(i, j), pt.normal, sig);
    }
  }
  pt.S = pt.g_inv * pt.h;

  // dg[(k*n + i)*n + j] = d_k g_ij
  std::vector<double> dg(static_cast<std::size_t>(n * n * n));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        dg[static_cast<std::size_t>((k * n + i) * n + j)] =
            inner_product(jet.second(k, i), jet.dx[j], sig) + inner_product(jet.dx[i], jet.second(k, j), sig);
      }
    }
  }
  auto d = [&](int k, int i, int j) { return dg[static_cast<std::size_t>((k * n + i) * n + j)]; };
  pt.christoffel.assign(static_cast<std::size_t>(n * n * n), 0.0);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l) s += pt.g_inv(k, l) * (d(i, j, l) + d(j, i, l) - d(l, i, j));
        pt.christoffel[static_cast<std::size_t>((k * n + i) * n + j)] = 0.5 * s;
      }
    }
  }

  if (with_normal_derivatives) {
    const int m = sig.dim;
    for (int l = 0; l < n; ++l) {
      std::vector<Vec<HyperDual>> dual_basis;
      for (int a = 0; a < n; ++a) {
        Vec<HyperDual> t(static_cast<std::size_t>(m));
        for (int c = 0; c < m; ++c) t[c] = HyperDual(jet.dx[a][c], jet.second(l, a)[c], 0.0, 0.0);
        dual_basis.push_back(std::move(t));
      }
      if (!form.flat()) {
        Vec<HyperDual> t(static_cast<std::size_t>(m));
        for (int c = 0; c < m; ++c) t[c] = HyperDual(jet.x[c], jet.dx[l][c], 0.0, 0.0);
        dual_basis.push_back(std::move(t));
      }
      const auto dn = unit_normal<HyperDual>(dual_basis, sig, orientation.reference, orientation.sign);
      AmbientVector v(m);
      for (int c = 0; c < m; ++c) v[c] = dn[c].d1;
      pt.normal_derivatives.push_back(std::move(v));
    }
  }
  return pt;
}

std::vector<double> principal_curvatures(const PointGeometry& pt) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(pt.h, pt.g, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalDegeneracy("generalized eigen-solver did not converge");
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Eigen::MatrixXd frame_second_form(const PointGeometry& pt) {
  Eigen::LLT<Eigen::MatrixXd> llt(pt.g);
  const Eigen::MatrixXd L = llt.matrixL();
  const Eigen::MatrixXd X = L.triangularView<Eigen::Lower>().solve(pt.h);
  const Eigen::MatrixXd B = L.triangularView<Eigen::Lower>().solve(X.transpose()).transpose();
  return 0.5 * (B + B.transpose());
}

Eigen::MatrixXd frame_to_contravariant(const PointGeometry& pt, const Eigen::MatrixXd& T) {
  Eigen::LLT<Eigen::MatrixXd> llt(pt.g);
  const Eigen::MatrixXd U = llt.matrixU();  // L^T
  const Eigen::MatrixXd Y = U.triangularView<Eigen::Upper>().solve(T);
  return U.triangularView<Eigen::Upper>().solve(Y.transpose()).transpose();
}

AmbientVector position_hessian(const PointGeometry& pt, int i, int j) {
  AmbientVector v = pt.jet.second(i, j);
  for (int k = 0; k < pt.dim(); ++k) v -= pt.gamma(k, i, j) * pt.jet.dx[k];
  return v;
}

double check_gauss_formula(const PointGeometry& pt, const SpaceForm& form) {
  double worst = 0.0;
  const int n = pt.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const AmbientVector r = position_hessian(pt, i, j) - pt.h(i, j) * pt.normal + form.k * pt.g(i, j) * pt.jet.x;
      worst = std::max(worst, r.norm());
    }
  }
  return worst;
}

double check_weingarten(const PointGeometry& pt) {
  const int n = pt.dim();
  if (static_cast<int>(pt.normal_derivatives.size()) != n) {
    throw ContractViolation("check_weingarten needs normal derivatives (point_geometry with_normal_derivatives)");
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    AmbientVector r = pt.normal_derivatives[i];
    for (int j = 0; j < n; ++j) r += pt.S(j, i) * pt.jet.dx[j];
    worst = std::max(worst, r.norm());
  }
  return worst;
}

double check_reilly_position(const PointGeometry& pt, int r, const SpaceForm& form) {
  const int n = pt.dim();
  if (r < 0 || r > n - 1) throw ContractViolation("check_reilly_position: r must lie in 0..n-1");
  const auto pack = curvature_pack(frame_second_form(pt));
  const Eigen::MatrixXd Tup = frame_to_contravariant(pt, pack.T[r]);
  AmbientVector lx = AmbientVector::Zero(pt.normal.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) lx += Tup(i, j) * position_hessian(pt, i, j);
  }
  const AmbientVector expected = (r + 1) * pack.K[r + 1] * pt.normal - (n - r) * form.k * pack.K[r] * pt.jet.x;
  return (lx - expected).norm();
}

}  // namespace hypercurv
