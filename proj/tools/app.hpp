#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hypercurv/identities.hpp"
#include "hypercurv/shapes.hpp"

namespace hypercurv::app {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable that overrides the OpenMP thread count.
inline constexpr const char* kThreadsEnv = "HYPERCURV_THREADS";

struct RunConfig {
  std::string command;  // verify | calibrate | scan | list
  ShapeSpec shape;
  bool shape_given = false;
  std::vector<std::string> identities;
  std::vector<std::string> directions;  // "x0,x1,..." or "random-seed:<int>"
  std::vector<int> m_values{1};
  int nodes = 0;
  double tol = 0.0;  // 0 selects the command default
  std::string output;
  std::string report;  // calibrate: optional full diagnostics
  std::string constants_path;
  bool allow_timelike = false;
  // calibrate
  std::vector<double> radii;
  // scan
  int samples = 200;
  std::uint64_t seed = 0;
  int threads = 0;
};

/// Pointwise residual maxima over random chart points of one shape.
struct ScanResult {
  ShapeSpec shape;
  int samples = 0;
  double gauss_formula = 0.0;
  double weingarten = 0.0;
  double reilly_position = 0.0;
  double newton_top = 0.0;      // max |T_n| / max(1, |B|^n)
  double trace_identities = 0.0;  // relative
  double embedding = 0.0;       // max |<x,x> - 1/k|
  double threshold = 0.0;
  bool pass = false;
};

ScanResult scan_shape(const Shape& shape, int samples, std::uint64_t seed, double threshold);

/// Parses "x0,x1,..." or "random-seed:<int>" into an ambient direction.
/// Random draws are uniform on the Euclidean unit sphere of the ambient
/// coordinates; with a Minkowski signature they are redrawn until spacelike.
AmbientVector parse_direction(const std::string& text, const SpaceForm& form);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Usage errors return kExitUsage.
int main_entry(int argc, char** argv);

}  // namespace hypercurv::app
