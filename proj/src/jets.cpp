#include "hypercurv/jets.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hypercurv/errors.hpp"

namespace hypercurv {

bool ChartDomain::contains(std::span<const double> u) const {
  if (static_cast<int>(u.size()) != dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    if (!std::isfinite(u[i])) return false;
    if (periodic[i]) {
      if (u[i] < lo[i] || u[i] > hi[i]) return false;
    } else if (!(u[i] > lo[i] && u[i] < hi[i])) {
      return false;
    }
  }
  return true;
}

double ChartDomain::volume() const {
  double v = 1.0;
  for (int i = 0; i < dim(); ++i) v *= hi[i] - lo[i];
  return v;
}

namespace {

void require_inside(const Chart& chart, std::span<const double> u) {
  if (!chart.domain.contains(u)) {
    std::ostringstream os;
    os << "parameter point (";
    for (std::size_t i = 0; i < u.size(); ++i) os << (i ? ", " : "") << u[i];
    os << ") is outside the chart domain";
    throw DomainError(os.str());
  }
}

void run_map(const Chart& chart, std::span<const HyperDual> u, std::span<HyperDual> out) {
  chart.map(u, out);
  for (const auto& c : out) {
    if (!std::isfinite(c.v) || !std::isfinite(c.d1) || !std::isfinite(c.d2) ||
        !std::isfinite(c.d12)) {
      throw EvaluationError("chart map returned a non-finite value");
    }
  }
}

}  // namespace

AmbientVector eval_point(const Chart& chart, std::span<const double> u) {
  require_inside(chart, u);
  std::vector<HyperDual> hu(u.begin(), u.end());
  std::vector<HyperDual> out(static_cast<std::size_t>(chart.ambient_dim));
  run_map(chart, hu, out);
  AmbientVector x(chart.ambient_dim);
  for (int c = 0; c < chart.ambient_dim; ++c) x[c] = out[c].v;
  return x;
}

Jet2 eval_jet2(const Chart& chart, std::span<const double> u) {
  require_inside(chart, u);
  const int n = chart.dim();
  const int m = chart.ambient_dim;
  Jet2 jet;
  jet.x = AmbientVector::Zero(m);
  jet.dx.assign(n, AmbientVector::Zero(m));
  jet.d2x.assign(static_cast<std::size_t>(n * n), AmbientVector::Zero(m));

  std::vector<HyperDual> hu(static_cast<std::size_t>(n));
  std::vector<HyperDual> out(static_cast<std::size_t>(m));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int a = 0; a < n; ++a) hu[a] = HyperDual(u[a]);
      hu[i].d1 = 1.0;
      hu[j].d2 = 1.0;
      run_map(chart, hu, out);
      AmbientVector second(m);
      for (int c = 0; c < m; ++c) second[c] = out[c].d12;
      if (i == j) {
        for (int c = 0; c < m; ++c) jet.dx[i][c] = out[c].d1;
        if (i == 0) {
          for (int c = 0; c < m; ++c) jet.x[c] = out[c].v;
        }
      }
      jet.d2x[static_cast<std::size_t>(i * n + j)] = second;
      jet.d2x[static_cast<std::size_t>(j * n + i)] = second;
    }
  }
  return jet;
}

Jet2 eval_jet2_fd(const Chart& chart, std::span<const double> u, double scale) {
  require_inside(chart, u);
  const int n = chart.dim();
  const int m = chart.ambient_dim;
  const double eps = std::numeric_limits<double>::epsilon();
  const double h1 = std::cbrt(eps) * scale;
  const double h2 = std::pow(eps, 0.25) * scale;

  std::vector<HyperDual> hu(static_cast<std::size_t>(n));
  std::vector<HyperDual> out(static_cast<std::size_t>(m));
  auto f = [&](std::span<const double> shift) {
    for (int a = 0; a < n; ++a) hu[a] = HyperDual(u[a] + shift[a]);
    run_map(chart, hu, out);
    AmbientVector x(m);
    for (int c = 0; c < m; ++c) x[c] = out[c].v;
    return x;
  };

  std::vector<double> s(static_cast<std::size_t>(n), 0.0);
  Jet2 jet;
  jet.x = f(s);
  jet.dx.assign(n, AmbientVector::Zero(m));
  jet.d2x.assign(static_cast<std::size_t>(n * n), AmbientVector::Zero(m));
  for (int i = 0; i < n; ++i) {
    s.assign(n, 0.0);
    s[i] = h1;
    const AmbientVector fp = f(s);
    s[i] = -h1;
    const AmbientVector fm = f(s);
    jet.dx[i] = (fp - fm) / (2.0 * h1);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      AmbientVector d2(m);
      if (i == j) {
        s.assign(n, 0.0);
        s[i] = h2;
        const AmbientVector fp = f(s);
        s[i] = -h2;
        const AmbientVector fm = f(s);
        d2 = (fp - 2.0 * jet.x + fm) / (h2 * h2);
      } else {
        auto corner = [&](double si, double sj) {
          s.assign(n, 0.0);
          s[i] = si * h2;
          s[j] = sj * h2;
          return f(s);
        };
        d2 = (corner(1, 1) - corner(1, -1) - corner(-1, 1) + corner(-1, -1)) / (4.0 * h2 * h2);
      }
      jet.d2x[static_cast<std::size_t>(i * n + j)] = d2;
      jet.d2x[static_cast<std::size_t>(j * n + i)] = d2;
    }
  }
  return jet;
}

}  // namespace hypercurv
