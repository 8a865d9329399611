#include "hypercurv/quadrature.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>

#include <omp.h>

#include "hypercurv/errors.hpp"

namespace hypercurv {

AxisRule gauss_legendre(int count, double a, double b) {
  if (count < 1) throw ContractViolation("gauss_legendre needs at least one node");
  AxisRule rule;
  rule.rule = Rule::gauss_legendre;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const int pairs = (count + 1) / 2;
  for (int i = 0; i < pairs; ++i) {
    // Newton on P_count starting from the Tricomi estimate of the i-th root.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= count; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = count * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    {
      // One more evaluation at the converged root for the weight.
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= count; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = count * (z * p0 - p1) / (z * z - 1.0);
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = mid - half * z;
    rule.nodes[count - 1 - i] = mid + half * z;
    rule.weights[i] = rule.weights[count - 1 - i] = half * w;
  }
  if (count % 2 == 1) rule.nodes[count / 2] = mid;
  return rule;
}

AxisRule trapezoid_periodic(int count, double a, double b) {
  if (count < 1) throw ContractViolation("trapezoid_periodic needs at least one node");
  AxisRule rule;
  rule.rule = Rule::trapezoid_periodic;
  const double h = (b - a) / count;
  for (int i = 0; i < count; ++i) {
    rule.nodes.push_back(a + h * i);
    rule.weights.push_back(h);
  }
  return rule;
}

std::size_t QuadratureGrid::size() const {
  std::size_t total = 1;
  for (const auto& axis : axes) total *= axis.nodes.size();
  return total;
}

double QuadratureGrid::node(std::size_t index, std::span<double> u) const {
  double w = 1.0;
  for (int a = dim() - 1; a >= 0; --a) {
    const std::size_t count = axes[a].nodes.size();
    const std::size_t i = index % count;
    index /= count;
    u[a] = axes[a].nodes[i];
    w *= axes[a].weights[i];
  }
  return w;
}

std::vector<QuadratureGrid::Point> QuadratureGrid::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    Point p;
    p.u.resize(axes.size());
    p.weight = node(i, p.u);
    out.push_back(std::move(p));
  }
  return out;
}

QuadratureGrid build_grid(const Chart& chart, std::span<const int> nodes_per_axis, std::size_t max_points) {
  const int n = chart.dim();
  if (static_cast<int>(nodes_per_axis.size()) != n) {
    throw ContractViolation("build_grid: need one node count per chart axis");
  }
  double total = 1.0;
  for (int c : nodes_per_axis) {
    if (c < 2) throw ContractViolation("build_grid: at least 2 nodes per axis");
    total *= c;
  }
  if (total > static_cast<double>(max_points)) {
    std::ostringstream os;
    os << "quadrature grid of " << total << " points exceeds the budget of " << max_points;
    throw BudgetError(os.str());
  }
  QuadratureGrid grid;
  grid.nodes_per_axis.assign(nodes_per_axis.begin(), nodes_per_axis.end());
  for (int a = 0; a < n; ++a) {
    const double lo = chart.domain.lo[a], hi = chart.domain.hi[a];
    grid.axes.push_back(chart.domain.periodic[a] ? trapezoid_periodic(nodes_per_axis[a], lo, hi)
                                                 : gauss_legendre(nodes_per_axis[a], lo, hi));
  }
  return grid;
}

QuadratureGrid build_grid(const Chart& chart, int nodes_per_axis, std::size_t max_points) {
  const std::vector<int> counts(static_cast<std::size_t>(chart.dim()), nodes_per_axis);
  return build_grid(chart, counts, max_points);
}

int default_nodes(int n) {
  if (n <= 2) return 96;
  if (n == 3) return 48;
  if (n == 4) return 24;
  return 12;
}

PointGeometry node_geometry(const Shape& shape, const Chart& chart, std::span<const double> u,
                            bool with_normal_derivatives) {
  const Jet2 jet = eval_jet2(chart, u);
  Orientation orientation{chart.reference(u), shape.orientation};
  return point_geometry(jet, shape.form, orientation, with_normal_derivatives);
}

namespace {

constexpr std::size_t kBlock = 256;

// Accumulates weighted integrand values at one node into value/magnitude.
class NodeEvaluator {
 public:
  NodeEvaluator(const Shape& shape, const Integrand& integrand, int count)
      : shape_(shape), integrand_(integrand), out_(static_cast<std::size_t>(count)) {}

  void accumulate(std::size_t chart_index, const QuadratureGrid& grid, std::size_t node, double* value,
                  double* magnitude) {
    const Chart& chart = shape_.charts[chart_index];
    u_.resize(static_cast<std::size_t>(grid.dim()));
    const double w = grid.node(node, u_);
    const double cw = chart.weight_at(u_);
    if (cw == 0.0) return;
    const PointGeometry pt = node_geometry(shape_, chart, u_);
    const auto principal = principal_curvatures(pt);
    const auto K = mean_curvatures(principal);
    SurfaceSample sample{pt, principal, K, shape_.form};
    std::fill(out_.begin(), out_.end(), 0.0);
    integrand_(sample, out_);
    const double scale = w * cw * pt.density;
    for (std::size_t t = 0; t < out_.size(); ++t) {
      if (!std::isfinite(out_[t])) {
        std::ostringstream os;
        os << "non-finite integrand value (term " << t << ") on shape " << shape_.name << ", chart "
           << chart_index << ", node " << node;
        throw EvaluationError(os.str());
      }
      value[t] += scale * out_[t];
      magnitude[t] += scale * std::abs(out_[t]);
    }
  }

 private:
  const Shape& shape_;
  const Integrand& integrand_;
  std::vector<double> out_;
  std::vector<double> u_;
};

// Pairwise sum of block partials [lo, hi), each of width `stride`.
void pairwise(const std::vector<double>& partials, std::size_t stride, std::size_t lo, std::size_t hi,
              double* out) {
  if (hi - lo == 1) {
    for (std::size_t t = 0; t < stride; ++t) out[t] = partials[lo * stride + t];
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  std::vector<double> left(stride), right(stride);
  pairwise(partials, stride, lo, mid, left.data());
  pairwise(partials, stride, mid, hi, right.data());
  for (std::size_t t = 0; t < stride; ++t) out[t] = left[t] + right[t];
}

std::vector<QuadratureGrid> grids_for(const Shape& shape, int nodes_per_axis, std::size_t max_points) {
  std::vector<QuadratureGrid> grids;
  std::size_t total = 0;
  for (const auto& chart : shape.charts) {
    grids.push_back(build_grid(chart, nodes_per_axis, max_points));
    total += grids.back().size();
  }
  if (total > max_points) throw BudgetError("quadrature grids exceed the point budget");
  return grids;
}

}  // namespace

Integrals integrate_terms(const Shape& shape, const Integrand& integrand, int count, int nodes_per_axis,
                          std::size_t max_points) {
  const auto grids = grids_for(shape, nodes_per_axis, max_points);
  const std::size_t stride = 2 * static_cast<std::size_t>(count);

  // Flat block table over all charts: (chart, first node, last node).
  struct Block {
    std::size_t chart, begin, end;
  };
  std::vector<Block> blocks;
  std::size_t total_nodes = 0;
  for (std::size_t c = 0; c < grids.size(); ++c) {
    const std::size_t size = grids[c].size();
    total_nodes += size;
    for (std::size_t b = 0; b < size; b += kBlock) blocks.push_back({c, b, std::min(size, b + kBlock)});
  }

  Integrals result;
  result.value.assign(count, 0.0);
  result.magnitude.assign(count, 0.0);
  result.nodes = total_nodes;
  if (blocks.empty()) return result;

  std::vector<double> partials(blocks.size() * stride, 0.0);
  std::vector<std::exception_ptr> errors(blocks.size());
  const auto nblocks = static_cast<std::ptrdiff_t>(blocks.size());

#pragma omp parallel
  {
    NodeEvaluator eval(shape, integrand, count);
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
      const Block& blk = blocks[static_cast<std::size_t>(b)];
      double* value = &partials[static_cast<std::size_t>(b) * stride];
      double* magnitude = value + count;
      try {
        for (std::size_t node = blk.begin; node < blk.end; ++node) {
          eval.accumulate(blk.chart, grids[blk.chart], node, value, magnitude);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(b)] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<double> sum(stride);
  pairwise(partials, stride, 0, blocks.size(), sum.data());
  for (int t = 0; t < count; ++t) {
    result.value[t] = sum[t];
    result.magnitude[t] = sum[count + t];
  }
  return result;
}

Integrals integrate_terms_serial(const Shape& shape, const Integrand& integrand, int count, int nodes_per_axis,
                                 std::size_t max_points) {
  const auto grids = grids_for(shape, nodes_per_axis, max_points);
  Integrals result;
  result.value.assign(count, 0.0);
  result.magnitude.assign(count, 0.0);
  NodeEvaluator eval(shape, integrand, count);
  for (std::size_t c = 0; c < grids.size(); ++c) {
    for (std::size_t node = 0; node < grids[c].size(); ++node) {
      eval.accumulate(c, grids[c], node, result.value.data(), result.magnitude.data());
    }
    result.nodes += grids[c].size();
  }
  return result;
}

double integrate(const Shape& shape, const std::function<double(const SurfaceSample&)>& integrand,
                 const GridSpec& grid) {
  const Integrand wrapped = [&](const SurfaceSample& s, std::span<double> out) { out[0] = integrand(s); };
  return integrate_terms(shape, wrapped, 1, grid.resolve(shape.form.n), grid.max_points).value[0];
}

Estimate estimate_terms(const Shape& shape, const Integrand& integrand, int count, const GridSpec& grid) {
  Estimate e;
  e.fine_nodes = grid.resolve(shape.form.n);
  e.coarse_nodes = std::max(2, e.fine_nodes / 2);
  e.fine = integrate_terms(shape, integrand, count, e.fine_nodes, grid.max_points);
  e.coarse = integrate_terms(shape, integrand, count, e.coarse_nodes, grid.max_points);
  return e;
}

}  // namespace hypercurv
