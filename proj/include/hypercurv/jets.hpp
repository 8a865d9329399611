#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hypercurv/ambient.hpp"
#include "hypercurv/hyperdual.hpp"

namespace hypercurv {

/// Chart map u -> x(u). Writes ambient coordinates into `out` (length = ambient dim).
using ChartMap = std::function<void(std::span<const HyperDual> u, std::span<HyperDual> out)>;
using ParamFunction = std::function<double(std::span<const double> u)>;
using ParamVectorFunction = std::function<AmbientVector(std::span<const double> u)>;

/// Axis-aligned parameter box. Periodic axes are half-open [lo, hi).
struct ChartDomain {
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<bool> periodic;

  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(std::span<const double> u) const;
  double volume() const;
};

struct Chart {
  ChartDomain domain;
  int ambient_dim = 0;
  ChartMap map;
  /// Partition-of-unity weight; empty means 1 everywhere.
  ParamFunction weight;
  /// Vector field the oriented normal must have positive inner product with.
  ParamVectorFunction reference;

  int dim() const { return domain.dim(); }
  double weight_at(std::span<const double> u) const { return weight ? weight(u) : 1.0; }
};

/// Position with first and second partial derivatives of a chart map.
struct Jet2 {
  AmbientVector x;
  std::vector<AmbientVector> dx;   // dx[i] = d_i x
  std::vector<AmbientVector> d2x;  // row-major n x n, d2x[i*n+j] = d_i d_j x

  int dim() const { return static_cast<int>(dx.size()); }
  const AmbientVector& second(int i, int j) const { return d2x[static_cast<std::size_t>(i * dim() + j)]; }
};

/// Evaluates the chart map at u in plain double precision.
AmbientVector eval_point(const Chart& chart, std::span<const double> u);

/// Exact jet via hyper-dual arithmetic: one evaluation per unordered pair (i, j).
Jet2 eval_jet2(const Chart& chart, std::span<const double> u);

/// Central-difference jet for cross-checking eval_jet2. `scale` is the
/// characteristic parameter length.
Jet2 eval_jet2_fd(const Chart& chart, std::span<const double> u, double scale = 1.0);

}  // namespace hypercurv
