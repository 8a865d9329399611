#include "hypercurv/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hypercurv/errors.hpp"

namespace hypercurv {

std::vector<double> mean_curvatures(std::span<const double> principal) {
  // Coefficients of prod_i (t + k_i), highest power first.
  const std::size_t n = principal.size();
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = i + 1; r >= 1; --r) e[r] += principal[i] * e[r - 1];
  }
  return e;
}

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& B) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(B, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalDegeneracy("symmetric eigen-solver did not converge");
  std::vector<double> ev(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

namespace {

void require_symmetric(const Eigen::MatrixXd& B) {
  if (B.rows() != B.cols()) throw ContractViolation("matrix is not square");
  const double scale = std::max(1.0, B.cwiseAbs().maxCoeff());
  if ((B - B.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw ContractViolation("matrix is not symmetric");
  }
}

void require_oracle_size(const Eigen::MatrixXd& B, int r) {
  if (B.rows() != B.cols()) throw ContractViolation("matrix is not square");
  if (B.rows() > kMaxOracleDim) {
    throw ContractViolation("delta oracle refuses n = " + std::to_string(B.rows()) +
                            " (limit " + std::to_string(kMaxOracleDim) + ")");
  }
  if (r < 0 || r > B.rows()) throw ContractViolation("r out of range for delta oracle");
}

double factorial(int r) {
  double f = 1.0;
  for (int i = 2; i <= r; ++i) f *= i;
  return f;
}

// Calls visit(I) for every ordered r-tuple of distinct indices in 0..n-1.
// Tuples with a repeated index have delta = 0 for every J and are skipped.
template <class Visit>
void for_each_distinct_tuple(int n, int r, std::vector<int>& tuple, int depth, Visit&& visit) {
  if (depth == r) {
    visit(tuple);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (std::find(tuple.begin(), tuple.begin() + depth, v) != tuple.begin() + depth) continue;
    tuple[depth] = v;
    for_each_distinct_tuple(n, r, tuple, depth + 1, visit);
  }
}

}  // namespace

std::vector<Eigen::MatrixXd> newton_tensors(const Eigen::MatrixXd& B) {
  require_symmetric(B);
  const int n = static_cast<int>(B.rows());
  const auto ev = symmetric_eigenvalues(B);
  const auto K = mean_curvatures(ev);
  std::vector<Eigen::MatrixXd> T;
  T.reserve(n + 1);
  T.push_back(Eigen::MatrixXd::Identity(n, n));
  for (int r = 1; r <= n; ++r) {
    T.push_back(K[r] * Eigen::MatrixXd::Identity(n, n) - B * T.back());
  }
  return T;
}

std::vector<Eigen::MatrixXd> newton_tensors_alternating(const Eigen::MatrixXd& B) {
  require_symmetric(B);
  const int n = static_cast<int>(B.rows());
  const auto K = mean_curvatures(symmetric_eigenvalues(B));
  std::vector<Eigen::MatrixXd> powers{Eigen::MatrixXd::Identity(n, n)};
  for (int p = 1; p <= n; ++p) powers.push_back(B * powers.back());
  std::vector<Eigen::MatrixXd> T;
  for (int r = 0; r <= n; ++r) {
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
    double sign = 1.0;
    for (int p = 0; p <= r; ++p) {
      t += sign * K[r - p] * powers[p];
      sign = -sign;
    }
    T.push_back(t);
  }
  return T;
}

CurvaturePack curvature_pack(const Eigen::MatrixXd& B) {
  CurvaturePack pack;
  pack.K = mean_curvatures(symmetric_eigenvalues(B));
  pack.T = newton_tensors(B);
  return pack;
}

int gen_kronecker(std::span<const int> I, std::span<const int> J) {
  if (I.size() != J.size()) throw ContractViolation("gen_kronecker: multi-index length mismatch");
  const std::size_t q = I.size();
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = a + 1; b < q; ++b) {
      if (I[a] == I[b]) return 0;
    }
  }
  // position[a] = index of J[a] within I; J must use every entry of I once.
  std::vector<std::size_t> position(q);
  std::vector<bool> used(q, false);
  for (std::size_t a = 0; a < q; ++a) {
    const auto it = std::find(I.begin(), I.end(), J[a]);
    if (it == I.end()) return 0;
    const auto p = static_cast<std::size_t>(it - I.begin());
    if (used[p]) return 0;
    used[p] = true;
    position[a] = p;
  }
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = a + 1; b < q; ++b) {
      if (position[a] > position[b]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

double kr_via_delta(const Eigen::MatrixXd& B, int r) {
  require_oracle_size(B, r);
  const int n = static_cast<int>(B.rows());
  if (r == 0) return 1.0;
  double sum = 0.0;
  std::vector<int> I(r);
  for_each_distinct_tuple(n, r, I, 0, [&](const std::vector<int>& idx) {
    std::vector<int> J = idx;
    std::sort(J.begin(), J.end());
    do {
      const int d = gen_kronecker(idx, J);
      if (d == 0) continue;
      double prod = d;
      for (int a = 0; a < r; ++a) prod *= B(idx[a], J[a]);
      sum += prod;
    } while (std::next_permutation(J.begin(), J.end()));
  });
  return sum / factorial(r);
}

Eigen::MatrixXd tr_via_delta(const Eigen::MatrixXd& B, int r) {
  require_oracle_size(B, r);
  const int n = static_cast<int>(B.rows());
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  std::vector<int> head(r);
  for_each_distinct_tuple(n, r, head, 0, [&](const std::vector<int>& idx) {
    for (int i = 0; i < n; ++i) {
      if (std::find(idx.begin(), idx.end(), i) != idx.end()) continue;
      std::vector<int> upper = idx;
      upper.push_back(i);
      std::vector<int> lower = upper;
      std::sort(lower.begin(), lower.end());
      do {
        const int d = gen_kronecker(upper, lower);
        if (d == 0) continue;
        double prod = d;
        for (int a = 0; a < r; ++a) prod *= B(idx[a], lower[a]);
        T(i, lower[r]) += prod;
      } while (std::next_permutation(lower.begin(), lower.end()));
    }
  });
  return T / factorial(r);
}

}  // namespace hypercurv
