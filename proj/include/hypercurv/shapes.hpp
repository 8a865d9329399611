#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypercurv/ambient.hpp"
#include "hypercurv/jets.hpp"

namespace hypercurv {

/// Parameters selecting a catalog shape. Fields that a shape does not use
/// are ignored.
struct ShapeSpec {
  std::string name;
  int n = 2;
  std::optional<double> k;  // unset selects the shape's natural space form
  double rho = 1.0;            // radius (sphere_rn) or intrinsic radius (geodesic spheres)
  double R = 2.0;              // torus major radius
  double r = 1.0;              // torus minor radius / tube radius
  double alpha = 0.78539816339744830962;  // Clifford-type angle, radii (cos a, sin a)/sqrt(k)
  std::vector<double> axes;    // ellipsoid semi-axes
  bool flip = false;           // reverse the catalog orientation
};

/// Closed oriented hypersurface in a space form, covered by charts up to a
/// measure-zero set.
struct Shape {
  std::string name;
  ShapeSpec spec;
  SpaceForm form;
  std::vector<Chart> charts;
  int euler_characteristic = 0;
  int orientation = 1;
  std::map<std::string, double> reference_data;
};

/// Builds a catalog shape. Throws ParameterError for unknown names or
/// out-of-range parameters.
Shape make_shape(const ShapeSpec& spec);

inline int euler_characteristic(const Shape& shape) { return shape.euler_characteristic; }

struct CatalogEntry {
  std::string name;
  std::string description;
};
const std::vector<CatalogEntry>& shape_catalog();

/// One representative parameter set per catalog entry, for n = 2 and n = 4
/// where the entry supports both.
std::vector<ShapeSpec> catalog_instances();

/// Dimension used when none is given: 4 for the tube shapes, 2 otherwise.
int default_dimension(const std::string& name);

/// Volume of the unit sphere S^n.
double unit_sphere_volume(int n);

}  // namespace hypercurv
