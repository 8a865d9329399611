#include "hypercurv/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "hypercurv/errors.hpp"

namespace hypercurv {

namespace {

constexpr double kPi = std::numbers::pi;

using ScalarFn = std::function<double(const SurfaceSample&)>;

enum Side { kLhs = 0, kRhs = 1 };

struct Term {
  Side side;
  double coef;
  ScalarFn f;
};

struct Constant {
  Side side;
  double value;
};

// An identity lhs = rhs written as coefficient-weighted surface integrals
// plus constants on either side.
struct Identity {
  std::vector<Term> terms;
  std::vector<Constant> constants;

  void integral(Side side, double coef, ScalarFn f) {
    if (coef != 0.0) terms.push_back({side, coef, std::move(f)});
  }
  void constant(Side side, double value) { constants.push_back({side, value}); }
};

struct Evaluated {
  double lhs = 0.0;
  double rhs = 0.0;
  double scale = 0.0;
};

struct GroupResult {
  std::vector<Evaluated> fine;
  std::vector<Evaluated> coarse;
  Estimate estimate;
};

Evaluated assemble(const Identity& id, const Integrals& in, std::size_t offset) {
  Evaluated e;
  for (std::size_t t = 0; t < id.terms.size(); ++t) {
    const Term& term = id.terms[t];
    const double v = term.coef * in.value[offset + t];
    (term.side == kLhs ? e.lhs : e.rhs) += v;
    e.scale = std::max(e.scale, std::abs(term.coef) * in.magnitude[offset + t]);
  }
  for (const Constant& c : id.constants) {
    (c.side == kLhs ? e.lhs : e.rhs) += c.value;
    e.scale = std::max(e.scale, std::abs(c.value));
  }
  return e;
}

// Integrates every term of every identity in one pass over the nodes.
GroupResult evaluate_group(const std::vector<Identity>& ids, const Shape& shape, const GridSpec& grid) {
  std::vector<const ScalarFn*> fns;
  for (const auto& id : ids) {
    for (const auto& t : id.terms) fns.push_back(&t.f);
  }
  const Integrand integrand = [&fns](const SurfaceSample& s, std::span<double> out) {
    for (std::size_t t = 0; t < fns.size(); ++t) out[t] = (*fns[t])(s);
  };
  GroupResult g;
  g.estimate = estimate_terms(shape, integrand, static_cast<int>(fns.size()), grid);
  std::size_t offset = 0;
  for (const auto& id : ids) {
    g.fine.push_back(assemble(id, g.estimate.fine, offset));
    g.coarse.push_back(assemble(id, g.estimate.coarse, offset));
    offset += id.terms.size();
  }
  return g;
}

void finish(IdentityReport& rep, const Evaluated& fine, const Evaluated& coarse, const Estimate& est,
            const CheckOptions& opts) {
  rep.lhs = fine.lhs;
  rep.rhs = fine.rhs;
  rep.abs_err = std::abs(fine.lhs - fine.rhs);
  rep.scale = fine.scale;
  const double denom = std::max({std::abs(fine.lhs), std::abs(fine.rhs), fine.scale});
  rep.rel_err = denom > 0.0 ? rep.abs_err / denom : rep.abs_err;
  rep.quadrature_error_proxy = std::max(std::abs(fine.lhs - coarse.lhs), std::abs(fine.rhs - coarse.rhs));
  rep.nodes_per_axis = est.fine_nodes;
  rep.coarse_nodes_per_axis = est.coarse_nodes;
  rep.total_nodes = est.fine.nodes;
  rep.tol_rel = opts.tol_rel;
  rep.pass = rep.abs_err <= std::max(opts.tol_rel * rep.scale, 3.0 * rep.quadrature_error_proxy);
}

IdentityReport run_single(const Identity& id, const Shape& shape, const CheckOptions& opts, IdentityReport rep) {
  const auto g = evaluate_group({id}, shape, opts.grid);
  finish(rep, g.fine[0], g.coarse[0], g.estimate, opts);
  return rep;
}

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

struct Direction {
  AmbientVector a;
  double aa = 1.0;
};

IdentityReport start_report(IdentityId id, const Shape& shape, int m) {
  IdentityReport rep;
  rep.identity_id = to_string(id);
  rep.shape = shape.spec;
  rep.m = m;
  if (shape.orientation < 0) rep.notes.push_back("orientation flipped");
  return rep;
}

Direction prepare_direction(const Shape& shape, const AmbientVector& a, const CheckOptions& opts,
                            IdentityReport& rep) {
  if (a.size() != shape.form.ambient_dim()) {
    throw ContractViolation("direction a has " + std::to_string(a.size()) + " coordinates, ambient space has " +
                            std::to_string(shape.form.ambient_dim()));
  }
  Direction d{a, 1.0};
  d.aa = normalize_direction(d.a, shape.form.signature);
  if (d.aa < 0.0) {
    if (!opts.allow_timelike) {
      throw ContractViolation("direction a is timelike; pass allow_timelike to check it");
    }
    rep.notes.push_back("a is timelike (<a,a> = -1); the <a,a> factor is kept explicitly");
  }
  rep.a = d.a;
  rep.a_norm = d.aa;
  return d;
}

// q = <a, normal>, p = <a, x>.
double q_of(const AmbientVector& a, const SurfaceSample& s) {
  return inner_product(a, s.geometry.normal, s.form.signature);
}
double p_of(const AmbientVector& a, const SurfaceSample& s) {
  return inner_product(a, s.geometry.jet.x, s.form.signature);
}

int dim_of(const SurfaceSample& s) { return static_cast<int>(s.K.size()) - 1; }
double G_of(const SurfaceSample& s) { return s.K.back(); }
double Kn1_of(const SurfaceSample& s) { return s.K[static_cast<std::size_t>(dim_of(s) - 1)]; }

// q^j p^e G
ScalarFn qpG(const AmbientVector& a, int j, int e) {
  return [a, j, e](const SurfaceSample& s) { return ipow(q_of(a, s), j) * ipow(p_of(a, s), e) * G_of(s); };
}
// q^j p^e K_{n-1}
ScalarFn qpK(const AmbientVector& a, int j, int e) {
  return [a, j, e](const SurfaceSample& s) { return ipow(q_of(a, s), j) * ipow(p_of(a, s), e) * Kn1_of(s); };
}
ScalarFn K_r(int r) {
  return [r](const SurfaceSample& s) { return s.K[static_cast<std::size_t>(r)]; };
}

void require_even(const Shape& shape, const char* what) {
  if (shape.form.n % 2 != 0) throw ContractViolation(std::string(what) + " requires even n");
}

const GaussBonnetConstants* resolve_constants(const Shape& shape, const CheckOptions& opts,
                                              GaussBonnetConstants& storage) {
  const int n = shape.form.n;
  if (opts.constants) {
    if (opts.constants->n != n || static_cast<int>(opts.constants->c.size()) != n / 2) {
      throw ConfigurationError("Gauss-Bonnet constants are for n = " + std::to_string(opts.constants->n) +
                               ", shape has n = " + std::to_string(n));
    }
    return &*opts.constants;
  }
  if (shape.form.k == 0.0) return nullptr;
  if (n == 2) {
    storage = surface_constants();
    return &storage;
  }
  throw ConfigurationError("Gauss-Bonnet constants c_i are required for n = " + std::to_string(n) +
                           " with k != 0 (run calibrate)");
}

// Adds weight * [(vol S^n / 2) chi - sum_i c_i k^i int K_{n-2i}] to `side`.
void add_gauss_bonnet_rhs(Identity& id, Side side, double weight, const Shape& shape,
                          const GaussBonnetConstants* constants) {
  const int n = shape.form.n;
  const double k = shape.form.k;
  id.constant(side, weight * 0.5 * unit_sphere_volume(n) * shape.euler_characteristic);
  if (k == 0.0 || constants == nullptr) return;
  for (int i = 1; i <= n / 2; ++i) {
    id.integral(side, -weight * constants->c[static_cast<std::size_t>(i - 1)] * std::pow(k, i), K_r(n - 2 * i));
  }
}

void record_constants(IdentityReport& rep, const GaussBonnetConstants* constants) {
  if (!constants) return;
  for (std::size_t i = 0; i < constants->c.size(); ++i) {
    rep.extras.emplace_back("c" + std::to_string(i + 1), constants->c[i]);
  }
}

}  // namespace

std::string to_string(IdentityId id) {
  switch (id) {
    case IdentityId::grotemeyer: return "grotemeyer";
    case IdentityId::corollary2: return "corollary2";
    case IdentityId::moment: return "moment";
    case IdentityId::vector: return "vector";
    case IdentityId::bivens: return "bivens";
    case IdentityId::theorem2_direct: return "theorem2_direct";
    case IdentityId::theorem2: return "theorem2";
    case IdentityId::gauss_bonnet: return "gauss_bonnet";
    case IdentityId::frame_sum: return "frame_sum";
    case IdentityId::recursion: return "recursion";
    case IdentityId::closed_form: return "closed_form";
  }
  return "unknown";
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = {
      IdentityId::grotemeyer,   IdentityId::corollary2, IdentityId::moment,
      IdentityId::vector,       IdentityId::bivens,     IdentityId::theorem2_direct,
      IdentityId::theorem2,     IdentityId::gauss_bonnet, IdentityId::frame_sum,
      IdentityId::recursion,    IdentityId::closed_form};
  return ids;
}

std::optional<IdentityId> parse_identity(const std::string& name) {
  for (IdentityId id : all_identities()) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

GaussBonnetConstants surface_constants() { return {2, true, {1.0}}; }

IdentityReport check_grotemeyer(const Shape& shape, const AmbientVector& a, const CheckOptions& opts) {
  if (shape.form.k != 0.0 || shape.form.n != 2) {
    throw ContractViolation("grotemeyer applies to closed surfaces in R^3 (k = 0, n = 2)");
  }
  auto rep = start_report(IdentityId::grotemeyer, shape, -1);
  const auto d = prepare_direction(shape, a, opts, rep);
  Identity id;
  id.integral(kLhs, 1.0, qpG(d.a, 2, 0));
  id.constant(kRhs, 2.0 * kPi / 3.0 * shape.euler_characteristic);
  return run_single(id, shape, opts, rep);
}

IdentityReport check_corollary2(const Shape& shape, const AmbientVector& a, const CheckOptions& opts) {
  if (shape.form.n != 2) throw ContractViolation("corollary2 applies to surfaces (n = 2)");
  auto rep = start_report(IdentityId::corollary2, shape, -1);
  const auto d = prepare_direction(shape, a, opts, rep);
  const double k = shape.form.k;
  Identity id;
  id.integral(kLhs, 1.0, qpG(d.a, 2, 0));
  id.constant(kRhs, d.aa * 2.0 * kPi / 3.0 * shape.euler_characteristic);
  id.integral(kRhs, -d.aa * k / 3.0, K_r(0));
  id.integral(kRhs, k / 3.0, qpK(d.a, 1, 1));
  id.integral(kRhs, -k / 3.0, qpG(d.a, 0, 2));
  return run_single(id, shape, opts, rep);
}

IdentityReport check_moment_identity(const Shape& shape, const AmbientVector& a, int m, const CheckOptions& opts) {
  if (m < 1) throw ContractViolation("moment identity needs m >= 1 (m = 0 is the bivens identity)");
  auto rep = start_report(IdentityId::moment, shape, m);
  const auto d = prepare_direction(shape, a, opts, rep);
  const int n = shape.form.n;
  const double k = shape.form.k;
  Identity id;
  id.integral(kLhs, n + m, qpG(d.a, m + 1, 0));
  id.integral(kRhs, m * d.aa, qpG(d.a, m - 1, 0));
  id.integral(kRhs, k, qpK(d.a, m, 1));
  id.integral(kRhs, -m * k, qpG(d.a, m - 1, 2));
  return run_single(id, shape, opts, rep);
}

namespace {

std::vector<Identity> vector_identities(const Shape& shape, const Direction& d, int m) {
  const int n = shape.form.n;
  const double k = shape.form.k;
  const AmbientVector a = d.a;
  std::vector<Identity> ids;
  for (int c = 0; c < shape.form.ambient_dim(); ++c) {
    Identity id;
    id.integral(kLhs, n + m, [a, m, c](const SurfaceSample& s) {
      return ipow(q_of(a, s), m) * G_of(s) * s.geometry.normal[c];
    });
    if (m > 0) {
      id.integral(kRhs, m * a[c], qpG(a, m - 1, 0));
      id.integral(kRhs, -m * k, [a, m, c](const SurfaceSample& s) {
        return ipow(q_of(a, s), m - 1) * p_of(a, s) * G_of(s) * s.geometry.jet.x[c];
      });
    }
    id.integral(kRhs, k, [a, m, c](const SurfaceSample& s) {
      return ipow(q_of(a, s), m) * Kn1_of(s) * s.geometry.jet.x[c];
    });
    ids.push_back(std::move(id));
  }
  return ids;
}

}  // namespace

IdentityReport check_vector_identity(const Shape& shape, const AmbientVector& a, int m, const CheckOptions& opts) {
  if (m < 0) throw ContractViolation("vector identity needs m >= 0");
  auto rep = start_report(IdentityId::vector, shape, m);
  const auto d = prepare_direction(shape, a, opts, rep);
  const auto ids = vector_identities(shape, d, m);
  const auto g = evaluate_group(ids, shape, opts.grid);

  // One report for the worst component, measured against the largest scale
  // over all components.
  double scale = 0.0;
  for (const auto& e : g.fine) scale = std::max(scale, e.scale);
  std::size_t worst = 0;
  double worst_err = -1.0;
  for (std::size_t c = 0; c < ids.size(); ++c) {
    const double err = std::abs(g.fine[c].lhs - g.fine[c].rhs);
    rep.extras.emplace_back("residual_" + std::to_string(c), g.fine[c].lhs - g.fine[c].rhs);
    if (err > worst_err) {
      worst_err = err;
      worst = c;
    }
  }
  Evaluated fine = g.fine[worst];
  fine.scale = scale;
  double proxy = 0.0;
  for (std::size_t c = 0; c < ids.size(); ++c) {
    proxy = std::max({proxy, std::abs(g.fine[c].lhs - g.coarse[c].lhs), std::abs(g.fine[c].rhs - g.coarse[c].rhs)});
  }
  finish(rep, fine, g.coarse[worst], g.estimate, opts);
  rep.quadrature_error_proxy = proxy;
  rep.pass = rep.abs_err <= std::max(opts.tol_rel * rep.scale, 3.0 * proxy);
  rep.notes.push_back("worst component " + std::to_string(worst));
  return rep;
}

AmbientVector vector_identity_residual(const Shape& shape, const AmbientVector& a, int m, const CheckOptions& opts) {
  IdentityReport scratch;
  const auto d = prepare_direction(shape, a, opts, scratch);
  const auto ids = vector_identities(shape, d, m);
  const auto g = evaluate_group(ids, shape, opts.grid);
  AmbientVector r(static_cast<Eigen::Index>(ids.size()));
  for (std::size_t c = 0; c < ids.size(); ++c) r[static_cast<Eigen::Index>(c)] = g.fine[c].lhs - g.fine[c].rhs;
  return r;
}

IdentityReport check_bivens(const Shape& shape, const AmbientVector& a, const CheckOptions& opts) {
  auto rep = start_report(IdentityId::bivens, shape, 0);
  const auto d = prepare_direction(shape, a, opts, rep);
  const int n = shape.form.n;
  Identity id;
  id.integral(kLhs, n, qpG(d.a, 1, 0));
  id.integral(kRhs, shape.form.k, qpK(d.a, 0, 1));
  return run_single(id, shape, opts, rep);
}

IdentityReport check_theorem2_direct(const Shape& shape, const AmbientVector& a, const CheckOptions& opts) {
  auto rep = start_report(IdentityId::theorem2_direct, shape, 1);
  const auto d = prepare_direction(shape, a, opts, rep);
  const int n = shape.form.n;
  const double k = shape.form.k;
  Identity id;
  id.integral(kLhs, 1.0, qpG(d.a, 2, 0));
  id.integral(kRhs, d.aa / (n + 1), qpG(d.a, 0, 0));
  id.integral(kRhs, k / (n + 1), qpK(d.a, 1, 1));
  id.integral(kRhs, -k / (n + 1), qpG(d.a, 0, 2));
  return run_single(id, shape, opts, rep);
}

IdentityReport check_theorem2(const Shape& shape, const AmbientVector& a, const CheckOptions& opts) {
  require_even(shape, "theorem2");
  auto rep = start_report(IdentityId::theorem2, shape, 1);
  const auto d = prepare_direction(shape, a, opts, rep);
  GaussBonnetConstants storage;
  const auto* constants = resolve_constants(shape, opts, storage);
  record_constants(rep, constants);
  const int n = shape.form.n;
  const double k = shape.form.k;
  Identity id;
  id.integral(kLhs, 1.0, qpG(d.a, 2, 0));
  add_gauss_bonnet_rhs(id, kRhs, d.aa / (n + 1), shape, constants);
  id.integral(kRhs, k / (n + 1), qpK(d.a, 1, 1));
  id.integral(kRhs, -k / (n + 1), qpG(d.a, 0, 2));
  return run_single(id, shape, opts, rep);
}

IdentityReport check_gauss_bonnet(const Shape& shape, const CheckOptions& opts) {
  require_even(shape, "gauss_bonnet");
  auto rep = start_report(IdentityId::gauss_bonnet, shape, -1);
  GaussBonnetConstants storage;
  const auto* constants = resolve_constants(shape, opts, storage);
  record_constants(rep, constants);
  Identity id;
  id.integral(kLhs, 1.0, [](const SurfaceSample& s) { return G_of(s); });
  add_gauss_bonnet_rhs(id, kRhs, 1.0, shape, constants);
  return run_single(id, shape, opts, rep);
}

IdentityReport check_frame_sum(const Shape& shape, const CheckOptions& opts) {
  require_even(shape, "frame_sum");
  auto rep = start_report(IdentityId::frame_sum, shape, 2);
  GaussBonnetConstants storage;
  const auto* constants = resolve_constants(shape, opts, storage);
  record_constants(rep, constants);
  const int n = shape.form.n;
  const double k = shape.form.k;
  const int dim = shape.form.ambient_dim();
  const Signature sig = shape.form.signature;

  // Main identity: sum_i eps_i int (E_i . n)^2 G against the Gauss-Bonnet rhs.
  Identity main;
  // Diagnostics: sum_i eps_i int (E_i.n)(E_i.x) K_{n-1} (= int <n,x> K_{n-1} = 0)
  // and the weighted sum of per-axis theorem2 residuals.
  Identity cross;
  Identity weighted;
  for (int i = 0; i < dim; ++i) {
    const double eps = sig.weight(i);
    AmbientVector e = AmbientVector::Zero(dim);
    e[i] = 1.0;
    main.integral(kLhs, eps, qpG(e, 2, 0));
    cross.integral(kLhs, eps, qpK(e, 1, 1));
    // eps_i * [lhs_i - rhs_i] of theorem2 with a = E_i, <E_i,E_i> = eps_i.
    weighted.integral(kLhs, eps, qpG(e, 2, 0));
    add_gauss_bonnet_rhs(weighted, kRhs, eps * eps / (n + 1), shape, constants);
    weighted.integral(kRhs, eps * k / (n + 1), qpK(e, 1, 1));
    weighted.integral(kRhs, -eps * k / (n + 1), qpG(e, 0, 2));
  }
  add_gauss_bonnet_rhs(main, kRhs, 1.0, shape, constants);
  cross.constant(kRhs, 0.0);

  const auto g = evaluate_group({main, cross, weighted}, shape, opts.grid);
  finish(rep, g.fine[0], g.coarse[0], g.estimate, opts);
  rep.extras.emplace_back("sum_eps_nx_K", g.fine[1].lhs);
  rep.extras.emplace_back("sum_eps_nx_K_scale", g.fine[1].scale);
  rep.extras.emplace_back("weighted_theorem2_residual", g.fine[2].lhs - g.fine[2].rhs);
  rep.extras.emplace_back("weighted_theorem2_scale", g.fine[2].scale);
  rep.extras.emplace_back("frame_size", dim);
  if (sig.negatives == 1) rep.notes.push_back("Minkowski frame: signature weights eps_0 = -1");
  return rep;
}

IdentityReport check_recursion(const Shape& shape, const AmbientVector& a, int m, const CheckOptions& opts) {
  if (m < 2) throw ContractViolation("recursion needs m >= 2");
  auto rep = start_report(IdentityId::recursion, shape, m);
  const auto d = prepare_direction(shape, a, opts, rep);
  const int n = shape.form.n;
  const double k = shape.form.k;
  const double lead = static_cast<double>(m - 1) / (n + m - 1);
  Identity id;
  id.integral(kLhs, 1.0, qpG(d.a, m, 0));
  id.integral(kRhs, lead * d.aa, qpG(d.a, m - 2, 0));
  id.integral(kRhs, -lead * k, qpG(d.a, m - 2, 2));
  id.integral(kRhs, lead * k / (m - 1), qpK(d.a, m - 1, 1));

  // Cross-check: the moment identity at order m-1 with the same integrals.
  Identity moment;
  moment.integral(kLhs, n + m - 1, qpG(d.a, m, 0));
  moment.integral(kRhs, (m - 1) * d.aa, qpG(d.a, m - 2, 0));
  moment.integral(kRhs, k, qpK(d.a, m - 1, 1));
  moment.integral(kRhs, -(m - 1) * k, qpG(d.a, m - 2, 2));

  const auto g = evaluate_group({id, moment}, shape, opts.grid);
  finish(rep, g.fine[0], g.coarse[0], g.estimate, opts);
  const double moment_rel = std::abs(g.fine[1].lhs - g.fine[1].rhs) / std::max(g.fine[1].scale, 1e-300);
  rep.extras.emplace_back("moment_identity_rel_err", moment_rel);
  const double discrepancy = std::abs((g.fine[0].lhs - g.fine[0].rhs) * (n + m - 1) - (g.fine[1].lhs - g.fine[1].rhs));
  rep.extras.emplace_back("printed_vs_moment_discrepancy", discrepancy);
  if (discrepancy > 1e-12 * std::max(1.0, g.fine[1].scale)) {
    rep.notes.push_back("printed recursion disagrees with the moment identity rearranged");
  }
  return rep;
}

ClosedFormCoefficients closed_form_coefficients(int n, int m, double k, double aa) {
  if (m < 1) throw ContractViolation("closed form needs m >= 1");
  ClosedFormCoefficients c;
  c.p2.assign(static_cast<std::size_t>(m), 0.0);
  c.pk.assign(static_cast<std::size_t>(m), 0.0);
  // A_j = c_j (aa A_{j-2} - k P_{j-2}) + k/(n+j-1) Q_{j-1},  c_j = (j-1)/(n+j-1)
  // A_1 = k/n Q_0
  double mult = 1.0;
  int cur = m;
  while (cur >= 2) {
    const double cj = static_cast<double>(cur - 1) / (n + cur - 1);
    c.p2[static_cast<std::size_t>(cur - 2)] += -mult * cj * k;
    c.pk[static_cast<std::size_t>(cur - 1)] += mult * k / (n + cur - 1);
    mult *= cj * aa;
    cur -= 2;
  }
  if (cur == 0) {
    c.base = mult;
  } else {
    c.pk[0] += mult * k / n;
  }
  return c;
}

IdentityReport check_closed_form(const Shape& shape, const AmbientVector& a, int m, const CheckOptions& opts) {
  require_even(shape, "closed_form");
  if (m < 1) throw ContractViolation("closed form needs m >= 1");
  auto rep = start_report(IdentityId::closed_form, shape, m);
  const auto d = prepare_direction(shape, a, opts, rep);
  const double k = shape.form.k;
  const auto coef = closed_form_coefficients(shape.form.n, m, k, d.aa);
  Identity id;
  id.integral(kLhs, 1.0, qpG(d.a, m, 0));
  if (m % 2 == 0) {
    GaussBonnetConstants storage;
    const auto* constants = resolve_constants(shape, opts, storage);
    record_constants(rep, constants);
    add_gauss_bonnet_rhs(id, kRhs, coef.base, shape, constants);
    rep.extras.emplace_back("topological_coefficient", coef.base);
  } else {
    rep.notes.push_back("odd m: no topological term");
  }
  for (int j = 0; j < m; ++j) {
    id.integral(kRhs, coef.p2[static_cast<std::size_t>(j)], qpG(d.a, j, 2));
    id.integral(kRhs, coef.pk[static_cast<std::size_t>(j)], qpK(d.a, j, 1));
  }
  return run_single(id, shape, opts, rep);
}

IdentityReport run_identity(IdentityId id, const Shape& shape, const AmbientVector& a, int m,
                            const CheckOptions& opts) {
  switch (id) {
    case IdentityId::grotemeyer: return check_grotemeyer(shape, a, opts);
    case IdentityId::corollary2: return check_corollary2(shape, a, opts);
    case IdentityId::moment: return check_moment_identity(shape, a, m, opts);
    case IdentityId::vector: return check_vector_identity(shape, a, m, opts);
    case IdentityId::bivens: return check_bivens(shape, a, opts);
    case IdentityId::theorem2_direct: return check_theorem2_direct(shape, a, opts);
    case IdentityId::theorem2: return check_theorem2(shape, a, opts);
    case IdentityId::gauss_bonnet: return check_gauss_bonnet(shape, opts);
    case IdentityId::frame_sum: return check_frame_sum(shape, opts);
    case IdentityId::recursion: return check_recursion(shape, a, m, opts);
    case IdentityId::closed_form: return check_closed_form(shape, a, m, opts);
  }
  throw ContractViolation("unknown identity");
}

}  // namespace hypercurv
