#include "app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "hypercurv/curvature.hpp"
#include "hypercurv/errors.hpp"
#include "hypercurv/geometry.hpp"
#include "hypercurv/report.hpp"

namespace hypercurv::app {

namespace {

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementations.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Standard normal by Box-Muller on unit_draw.
double normal_draw(std::mt19937_64& rng) {
  double u1 = unit_draw(rng);
  while (u1 <= 0.0) u1 = unit_draw(rng);
  const double u2 = unit_draw(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParameterError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw ParameterError("not a number: '" + text + "'");
  return v;
}

bool needs_direction(IdentityId id) {
  return id != IdentityId::gauss_bonnet && id != IdentityId::frame_sum;
}

bool has_order(IdentityId id) {
  return id == IdentityId::moment || id == IdentityId::vector || id == IdentityId::recursion ||
         id == IdentityId::closed_form;
}

bool needs_constants(IdentityId id) {
  return id == IdentityId::theorem2 || id == IdentityId::gauss_bonnet || id == IdentityId::frame_sum ||
         id == IdentityId::closed_form;
}

// Whether `id` at order m makes sense on `shape`; used to filter "all".
bool applies(IdentityId id, const Shape& shape, int m, bool have_constants) {
  const int n = shape.form.n;
  switch (id) {
    case IdentityId::grotemeyer:
      return n == 2 && shape.form.flat();
    case IdentityId::corollary2:
      return n == 2;
    case IdentityId::moment:
      return m >= 1;
    case IdentityId::vector:
      return m >= 0;
    case IdentityId::recursion:
      return m >= 2;
    case IdentityId::closed_form:
      if (m < 1) return false;
      break;
    default:
      break;
  }
  if (needs_constants(id)) {
    if (id == IdentityId::closed_form && m % 2 == 1) return true;
    if (n % 2 != 0) return false;
    return shape.form.flat() || n == 2 || have_constants;
  }
  return true;
}

Json config_echo(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  if (c.shape_given) j["shape"] = to_json(c.shape);
  j["identities"] = c.identities;
  j["a"] = c.directions;
  j["m"] = c.m_values;
  j["nodes"] = c.nodes;
  j["tol"] = c.tol;
  j["constants"] = c.constants_path;
  j["allow_timelike"] = c.allow_timelike;
  if (c.command == "calibrate") j["radii"] = c.radii;
  if (c.command == "scan") {
    j["samples"] = c.samples;
    j["seed"] = c.seed;
  }
  return j;
}

Json envelope(const RunConfig& c) {
  Json j;
  j["tool"] = "hypercurv";
  j["version"] = kToolVersion;
  j["command"] = c.command;
  j["config"] = config_echo(c);
  return j;
}

void emit(const RunConfig& c, const Json& report, std::ostream& out) {
  const std::string text = dump_json(report) + "\n";
  if (c.output.empty() || c.output == "-") {
    out << text;
  } else {
    write_text_file(c.output, text);
  }
}

int run_list(std::ostream& out) {
  out << "shapes:\n";
  for (const auto& e : shape_catalog()) out << "  " << e.name << "  " << e.description << "\n";
  out << "identities:\n";
  for (IdentityId id : all_identities()) out << "  " << to_string(id) << "\n";
  return kExitPass;
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (!c.shape_given) throw ParameterError("verify needs --shape");
  const Shape shape = make_shape(c.shape);

  std::vector<IdentityId> ids;
  bool explicit_ids = true;
  if (c.identities.empty() || (c.identities.size() == 1 && c.identities[0] == "all")) {
    ids = all_identities();
    explicit_ids = false;
  } else {
    for (const auto& name : c.identities) {
      const auto id = parse_identity(name);
      if (!id) throw ParameterError("unknown identity '" + name + "'");
      ids.push_back(*id);
    }
  }

  CheckOptions opts;
  opts.grid.nodes = c.nodes;
  if (c.tol > 0.0) opts.tol_rel = c.tol;
  opts.allow_timelike = c.allow_timelike;
  if (!c.constants_path.empty()) opts.constants = read_constants_file(c.constants_path);

  std::vector<AmbientVector> directions;
  for (const auto& text : c.directions) directions.push_back(parse_direction(text, shape.form));
  if (directions.empty()) {
    AmbientVector a = AmbientVector::Zero(shape.form.ambient_dim());
    a[a.size() - 1] = 1.0;
    directions.push_back(a);
  }

  Json report = envelope(c);
  Json records = Json::array();
  bool all_pass = true;
  auto run_one = [&](IdentityId id, const AmbientVector& a, int m) {
    IdentityReport rep = run_identity(id, shape, a, m, opts);
    all_pass = all_pass && rep.pass;
    records.push_back(to_json(rep));
  };
  try {
    for (IdentityId id : ids) {
      const std::vector<int> orders = has_order(id) ? c.m_values : std::vector<int>{-1};
      for (int m : orders) {
        if (!explicit_ids && !applies(id, shape, m, opts.constants.has_value())) continue;
        if (needs_direction(id)) {
          for (const auto& a : directions) run_one(id, a, m);
        } else {
          run_one(id, directions.front(), m);
        }
      }
    }
  } catch (const ContractViolation&) {
    throw;
  } catch (const ParameterError&) {
    throw;
  } catch (const ConfigurationError&) {
    throw;
  } catch (const Error& e) {
    report["reports"] = records;
    report["error"] = e.what();
    report["all_pass"] = false;
    emit(c, report, out);
    err << "hypercurv: " << e.what() << "\n";
    return kExitFail;
  }
  report["reports"] = records;
  report["all_pass"] = all_pass;
  emit(c, report, out);
  return all_pass ? kExitPass : kExitFail;
}

int run_calibrate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const int n = c.shape.n;
  if (!c.shape.k) throw ParameterError("calibrate needs --k");
  const double k = *c.shape.k;
  CalibrationOptions opts;
  opts.grid.nodes = c.nodes;
  if (c.tol > 0.0) opts.validation_tol_rel = c.tol;
  std::vector<double> radii = c.radii.empty() ? default_calibration_radii(n, k) : c.radii;
  CalibrationResult result;
  try {
    result = calibrate_gb_constants(n, k, radii, opts);
  } catch (const ContractViolation&) {
    throw;
  } catch (const ParameterError&) {
    throw;
  } catch (const Error& e) {
    Json report = envelope(c);
    report["error"] = e.what();
    report["all_pass"] = false;
    if (!c.report.empty()) write_text_file(c.report, dump_json(report) + "\n");
    err << "hypercurv: " << e.what() << "\n";
    return kExitFail;
  }
  // --out receives the constants file; the full diagnostics go to --report
  // (or stdout when no --out is given).
  if (!c.output.empty() && c.output != "-") {
    write_text_file(c.output, dump_json(to_json(result.constants)) + "\n");
  }
  Json report = envelope(c);
  report["calibration"] = to_json(result);
  report["all_pass"] = result.pass;
  const std::string text = dump_json(report) + "\n";
  if (!c.report.empty()) {
    write_text_file(c.report, text);
  } else if (c.output.empty() || c.output == "-") {
    out << text;
  }
  return result.pass ? kExitPass : kExitFail;
}

Json to_json(const ScanResult& r) {
  Json j;
  j["shape"] = hypercurv::to_json(r.shape);
  j["samples"] = r.samples;
  j["gauss_formula"] = r.gauss_formula;
  j["weingarten"] = r.weingarten;
  j["reilly_position"] = r.reilly_position;
  j["newton_top"] = r.newton_top;
  j["trace_identities"] = r.trace_identities;
  j["embedding"] = r.embedding;
  j["threshold"] = r.threshold;
  j["pass"] = r.pass;
  return j;
}

int run_scan(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<ShapeSpec> specs;
  if (c.shape_given) {
    specs.push_back(c.shape);
  } else {
    specs = catalog_instances();
  }
  Json report = envelope(c);
  Json records = Json::array();
  bool all_pass = true;
  try {
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const Shape shape = make_shape(specs[i]);
      const double threshold = c.tol > 0.0 ? c.tol : (shape.form.n <= 3 ? 1e-8 : 1e-6);
      const ScanResult r = scan_shape(shape, c.samples, c.seed + i, threshold);
      all_pass = all_pass && r.pass;
      records.push_back(to_json(r));
    }
  } catch (const ParameterError&) {
    throw;
  } catch (const ContractViolation&) {
    throw;
  } catch (const Error& e) {
    report["reports"] = records;
    report["error"] = e.what();
    report["all_pass"] = false;
    emit(c, report, out);
    err << "hypercurv: " << e.what() << "\n";
    return kExitFail;
  }
  report["reports"] = records;
  report["all_pass"] = all_pass;
  emit(c, report, out);
  return all_pass ? kExitPass : kExitFail;
}

}  // namespace

AmbientVector parse_direction(const std::string& text, const SpaceForm& form) {
  const int dim = form.ambient_dim();
  const std::string prefix = "random-seed:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string seed_text = text.substr(prefix.size());
    std::uint64_t seed = 0;
    try {
      std::size_t used = 0;
      seed = std::stoull(seed_text, &used);
      if (used != seed_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParameterError("bad random seed in '" + text + "'");
    }
    std::mt19937_64 rng(seed);
    for (;;) {
      AmbientVector a(dim);
      for (int i = 0; i < dim; ++i) a[i] = normal_draw(rng);
      const double len = a.norm();
      if (len == 0.0) continue;
      a /= len;
      // Redraw until comfortably spacelike under a Minkowski signature.
      if (form.signature.negatives == 0 || inner_product(a, a, form.signature) > 0.1) return a;
    }
  }
  const auto parts = split(text, ',');
  if (static_cast<int>(parts.size()) != dim) {
    throw ParameterError("direction '" + text + "' needs " + std::to_string(dim) + " coordinates");
  }
  AmbientVector a(dim);
  for (int i = 0; i < dim; ++i) a[i] = parse_double(parts[static_cast<std::size_t>(i)]);
  return a;
}

ScanResult scan_shape(const Shape& shape, int samples, std::uint64_t seed, double threshold) {
  if (samples < 1) throw ParameterError("scan needs at least one sample");
  ScanResult res;
  res.shape = shape.spec;
  res.samples = samples;
  res.threshold = threshold;
  const int n = shape.form.n;
  std::mt19937_64 rng(seed);
  std::vector<double> u(static_cast<std::size_t>(n));
  for (int s = 0; s < samples; ++s) {
    const auto ci = static_cast<std::size_t>(rng() % shape.charts.size());
    const Chart& chart = shape.charts[ci];
    for (int a = 0; a < n; ++a) {
      const double lo = chart.domain.lo[a], hi = chart.domain.hi[a];
      const double t = unit_draw(rng);
      if (chart.domain.periodic[a]) {
        u[a] = lo + (hi - lo) * t;
      } else {
        const double pad = 0.01 * (hi - lo);
        u[a] = lo + pad + (hi - lo - 2.0 * pad) * t;
      }
    }
    const PointGeometry pt = node_geometry(shape, chart, u, true);

    double second = 1.0, first = 1.0;
    for (int i = 0; i < n; ++i) {
      first = std::max(first, pt.jet.dx[i].norm());
      for (int j = 0; j < n; ++j) second = std::max(second, pt.jet.second(i, j).norm());
    }
    res.gauss_formula = std::max(res.gauss_formula, check_gauss_formula(pt, shape.form) / second);

    double bmax = 1.0;
    for (double kappa : principal_curvatures(pt)) bmax = std::max(bmax, std::abs(kappa));
    res.weingarten = std::max(res.weingarten, check_weingarten(pt) / (bmax * first));

    const Eigen::MatrixXd B = frame_second_form(pt);
    const CurvaturePack pack = curvature_pack(B);
    const double xnorm = std::max(1.0, pt.jet.x.norm());
    for (int r = 0; r < n; ++r) {
      const double mag = 1.0 + (r + 1) * std::abs(pack.K[r + 1]) + (n - r) * std::abs(shape.form.k) *
                                                                        std::abs(pack.K[r]) * xnorm;
      res.reilly_position = std::max(res.reilly_position, check_reilly_position(pt, r, shape.form) / mag);
    }

    res.newton_top = std::max(res.newton_top, pack.T[n].norm() / std::pow(bmax, n));
    for (int r = 0; r <= n; ++r) {
      const double tr = pack.T[r].trace();
      const double scale_r = std::max(1.0, std::abs(pack.K[r])) * std::pow(bmax, 1);
      res.trace_identities = std::max(res.trace_identities, std::abs(tr - (n - r) * pack.K[r]) / scale_r);
      if (r < n) {
        const double tb = (B * pack.T[r]).trace();
        const double scale_b = std::max(1.0, std::abs(pack.K[r + 1])) * bmax;
        res.trace_identities =
            std::max(res.trace_identities, std::abs(tb - (r + 1) * pack.K[r + 1]) / scale_b);
      }
    }

    const double xx = inner_product(pt.jet.x, pt.jet.x, shape.form.signature);
    if (!shape.form.flat()) {
      const double target = 1.0 / shape.form.k;
      res.embedding = std::max(res.embedding, std::abs(xx - target) / std::abs(target));
    }
  }
  res.pass = res.gauss_formula < threshold && res.weingarten < threshold && res.reilly_position < threshold &&
             res.newton_top < threshold && res.trace_identities < threshold && res.embedding < threshold;
  return res;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.threads > 0) omp_set_num_threads(config.threads);
    if (config.tol < 0.0) throw ParameterError("tolerance must be positive");
    if (config.command == "list") return run_list(out);
    if (config.command == "verify") return run_verify(config, out, err);
    if (config.command == "calibrate") return run_calibrate(config, out, err);
    if (config.command == "scan") return run_scan(config, out, err);
    throw ParameterError("unknown command '" + config.command + "'");
  } catch (const ContractViolation& e) {
    err << "hypercurv: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "hypercurv: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigurationError& e) {
    err << "hypercurv: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "hypercurv: " << e.what() << "\n";
    return kExitFail;
  }
}

int main_entry(int argc, char** argv) {
  CLI::App cli{"Curvature integrals of closed hypersurfaces in space forms"};
  cli.require_subcommand(1);
  RunConfig c;
  std::string threads_env;
  if (const char* env = std::getenv(kThreadsEnv)) threads_env = env;

  double k_value = 0.0;
  std::string axes_text, radii_text;
  std::vector<std::string> m_texts;

  auto shape_flags = [&](CLI::App* sub) {
    sub->add_option("--shape", c.shape.name, "Shape name (see list)");
    sub->add_option("--n", c.shape.n, "Hypersurface dimension")->check(CLI::PositiveNumber);
    sub->add_option("--k", k_value, "Sectional curvature of the ambient space form");
    sub->add_option("--rho", c.shape.rho, "Radius");
    sub->add_option("--R", c.shape.R, "Major radius");
    sub->add_option("--r", c.shape.r, "Minor or tube radius");
    sub->add_option("--alpha", c.shape.alpha, "Clifford-type angle");
    sub->add_option("--axes", axes_text, "Comma-separated semi-axes");
    sub->add_flag("--flip", c.shape.flip, "Reverse the orientation");
    sub->add_option("--nodes", c.nodes, "Quadrature nodes per axis");
    sub->add_option("--tol", c.tol, "Relative tolerance");
    sub->add_option("--out", c.output, "Output file ('-' for stdout)");
    sub->add_option("--threads", c.threads, "OpenMP thread count");
  };

  auto* verify = cli.add_subcommand("verify", "Check integral identities on one shape");
  shape_flags(verify);
  verify->add_option("--identity", c.identities, "Identity id, repeatable, or 'all'");
  verify->add_option("--a", c.directions, "Direction: x0,x1,... or random-seed:<int>; repeatable");
  verify->add_option("--m", m_texts, "Moment orders, repeatable or comma-separated")->delimiter(',');
  verify->add_option("--constants", c.constants_path, "Gauss-Bonnet constants file");
  verify->add_flag("--allow-timelike", c.allow_timelike, "Accept timelike a in Minkowski space");

  auto* calibrate = cli.add_subcommand("calibrate", "Fit the Gauss-Bonnet constants c_i");
  shape_flags(calibrate);
  calibrate->add_option("--radii", radii_text, "Comma-separated geodesic radii");
  calibrate->add_option("--report", c.report, "Full calibration diagnostics file");

  auto* scan = cli.add_subcommand("scan", "Pointwise residuals at random chart points");
  shape_flags(scan);
  scan->add_option("--samples", c.samples, "Points per shape");
  scan->add_option("--seed", c.seed, "Random seed");

  cli.add_subcommand("list", "List shapes and identities");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  c.command = cli.get_subcommands().front()->get_name();
  auto* sub = cli.get_subcommands().front();
  auto given = [sub](const char* flag) {
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--k")) c.shape.k = k_value;
  if (!given("--n") && c.command != "calibrate") c.shape.n = default_dimension(c.shape.name);
  c.shape_given = !c.shape.name.empty();
  if (c.threads == 0 && !threads_env.empty()) {
    try {
      c.threads = std::stoi(threads_env);
    } catch (const std::exception&) {
      std::cerr << "hypercurv: ignoring non-numeric " << kThreadsEnv << "\n";
    }
  }
  try {
    if (!axes_text.empty()) {
      for (const auto& s : split(axes_text, ',')) c.shape.axes.push_back(parse_double(s));
    }
    if (!radii_text.empty()) {
      for (const auto& s : split(radii_text, ',')) c.radii.push_back(parse_double(s));
    }
    if (!m_texts.empty()) {
      c.m_values.clear();
      for (const auto& s : m_texts) c.m_values.push_back(static_cast<int>(parse_double(s)));
    }
  } catch (const ParameterError& e) {
    std::cerr << "hypercurv: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(c, std::cout, std::cerr);
}

}  // namespace hypercurv::app
