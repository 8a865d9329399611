#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hypercurv/geometry.hpp"
#include "hypercurv/jets.hpp"
#include "hypercurv/shapes.hpp"

namespace hypercurv {

enum class Rule { gauss_legendre, trapezoid_periodic };

struct AxisRule {
  Rule rule = Rule::gauss_legendre;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Tensor-product rule over one chart domain.
struct QuadratureGrid {
  std::vector<int> nodes_per_axis;
  std::vector<AxisRule> axes;

  std::size_t size() const;
  int dim() const { return static_cast<int>(axes.size()); }
  /// Parameter point and weight of flat node index `index` (last axis fastest).
  double node(std::size_t index, std::span<double> u) const;

  struct Point {
    std::vector<double> u;
    double weight;
  };
  std::vector<Point> points() const;
};

inline constexpr std::size_t kDefaultMaxPoints = 10'000'000;

/// Gauss-Legendre rule with `count` nodes mapped onto (a, b).
AxisRule gauss_legendre(int count, double a, double b);
/// Equispaced rule on the periodic interval [a, b).
AxisRule trapezoid_periodic(int count, double a, double b);

QuadratureGrid build_grid(const Chart& chart, std::span<const int> nodes_per_axis,
                          std::size_t max_points = kDefaultMaxPoints);
QuadratureGrid build_grid(const Chart& chart, int nodes_per_axis, std::size_t max_points = kDefaultMaxPoints);

/// Node count per axis used when the caller does not choose one.
int default_nodes(int n);

/// Resolution of a surface integral. The coarse pass for the error proxy
/// uses nodes / 2 per axis.
struct GridSpec {
  int nodes = 0;  // 0 selects default_nodes(n)
  std::size_t max_points = kDefaultMaxPoints;

  int resolve(int n) const { return nodes > 0 ? nodes : default_nodes(n); }
};

/// Everything an integrand can see at one node.
struct SurfaceSample {
  const PointGeometry& geometry;
  std::span<const double> principal;  // descending
  std::span<const double> K;          // K_0..K_n
  const SpaceForm& form;
};

/// Writes `count` integrand values for one node into `out`.
using Integrand = std::function<void(const SurfaceSample&, std::span<double> out)>;

/// Integrals of several integrands over the same nodes, together with the
/// integrals of their absolute values.
struct Integrals {
  std::vector<double> value;
  std::vector<double> magnitude;
  std::size_t nodes = 0;
};

/// OpenMP kernel. Nodes are summed in fixed-size blocks that are then
/// combined by a pairwise tree, so results do not depend on thread count.
Integrals integrate_terms(const Shape& shape, const Integrand& integrand, int count, int nodes_per_axis,
                          std::size_t max_points = kDefaultMaxPoints);

/// Serial reference: plain node-order accumulation, no blocking.
Integrals integrate_terms_serial(const Shape& shape, const Integrand& integrand, int count, int nodes_per_axis,
                                 std::size_t max_points = kDefaultMaxPoints);

double integrate(const Shape& shape, const std::function<double(const SurfaceSample&)>& integrand,
                 const GridSpec& grid = {});

/// Fine and coarse integrals; |fine - coarse| is the error proxy.
struct Estimate {
  Integrals fine;
  Integrals coarse;
  int fine_nodes = 0;
  int coarse_nodes = 0;
};

Estimate estimate_terms(const Shape& shape, const Integrand& integrand, int count, const GridSpec& grid);

/// Geometry of one chart node, as used by the kernels.
PointGeometry node_geometry(const Shape& shape, const Chart& chart, std::span<const double> u,
                            bool with_normal_derivatives = false);

}  // namespace hypercurv
