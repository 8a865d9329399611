#include "hypercurv/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hypercurv/errors.hpp"

namespace hypercurv {

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void dump_into(const Json& j, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        dump_into(it.value(), indent, depth + 1, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        dump_into(v, indent, depth + 1, out);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

Json vector_json(const AmbientVector& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_into(j, indent, 0, out);
  out += "\n";
  return out;
}

Json to_json(const ShapeSpec& spec) {
  Json j;
  j["name"] = spec.name;
  j["n"] = spec.n;
  if (spec.k) j["k"] = *spec.k;
  j["rho"] = spec.rho;
  j["R"] = spec.R;
  j["r"] = spec.r;
  j["alpha"] = spec.alpha;
  j["axes"] = spec.axes;
  j["flip"] = spec.flip;
  return j;
}

Json to_json(const IdentityReport& r) {
  Json j;
  j["identity_id"] = r.identity_id;
  j["shape"] = to_json(r.shape);
  j["a"] = vector_json(r.a);
  j["a_norm"] = r.a_norm;
  j["a_signature"] = r.a.size() == 0 ? "none" : (r.a_norm < 0.0 ? "timelike" : "spacelike");
  if (r.m >= 0) {
    j["m"] = r.m;
  } else {
    j["m"] = nullptr;
  }
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["abs_err"] = r.abs_err;
  j["rel_err"] = r.rel_err;
  j["scale"] = r.scale;
  j["quadrature_error_proxy"] = r.quadrature_error_proxy;
  j["nodes"] = {{"per_axis", r.nodes_per_axis}, {"coarse_per_axis", r.coarse_nodes_per_axis}, {"total", r.total_nodes}};
  j["tol_rel"] = r.tol_rel;
  j["pass"] = r.pass;
  Json extras = Json::object();
  for (const auto& [name, value] : r.extras) extras[name] = value;
  j["extras"] = extras;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const GaussBonnetConstants& c) {
  Json j;
  j["n"] = c.n;
  j["k-independent"] = c.k_independent;
  j["c"] = c.c;
  return j;
}

Json to_json(const CalibrationResult& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["radii"] = r.radii;
  j["constants"] = to_json(r.constants);
  j["condition"] = r.condition;
  j["fit_residuals"] = r.fit_residuals;
  Json v = Json::array();
  for (const auto& rep : r.validation) v.push_back(to_json(rep));
  j["validation"] = v;
  j["pass"] = r.pass;
  return j;
}

GaussBonnetConstants constants_from_json(const Json& j) {
  try {
    GaussBonnetConstants c;
    c.n = j.at("n").get<int>();
    c.k_independent = j.value("k-independent", true);
    c.c = j.at("c").get<std::vector<double>>();
    if (c.n < 2 || c.n % 2 != 0 || static_cast<int>(c.c.size()) != c.n / 2) {
      throw ConfigurationError("constants file: need even n and n/2 constants");
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError(std::string("constants file: ") + e.what());
  }
}

GaussBonnetConstants read_constants_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot open constants file " + path);
  try {
    return constants_from_json(Json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError("constants file " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigurationError("cannot write " + path);
  out << text;
}

}  // namespace hypercurv
