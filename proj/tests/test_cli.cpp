#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <omp.h>

#include "app.hpp"
#include "hypercurv/report.hpp"

using namespace hypercurv;
using namespace hypercurv::app;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hypercurv_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "hypercurv");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return main_entry(static_cast<int>(argv.size()), argv.data());
}

RunConfig verify(const std::string& shape) {
  RunConfig c;
  c.command = "verify";
  c.shape.name = shape;
  c.shape_given = true;
  return c;
}

}  // namespace

TEST_CASE("verify: sphere grotemeyer example") {
  const std::string out = temp_path("sphere.json");
  CHECK(run_args({"verify", "--shape", "sphere_rn", "--n", "2", "--k", "0", "--rho", "1", "--identity", "grotemeyer",
                  "--a", "0,0,1", "--out", out}) == kExitPass);
  const Json j = Json::parse(slurp(out));
  CHECK(j["tool"] == "hypercurv");
  CHECK(j["version"] == kToolVersion);
  CHECK(j["all_pass"] == true);
  const auto& r = j["reports"][0];
  CHECK(r["identity_id"] == "grotemeyer");
  CHECK(r["lhs"].get<double>() == doctest::Approx(4.18879).epsilon(1e-5));
  CHECK(r["rhs"].get<double>() == doctest::Approx(4.18879).epsilon(1e-5));
  for (const char* field : {"shape", "a", "a_norm", "m", "abs_err", "rel_err", "scale", "quadrature_error_proxy",
                            "nodes", "tol_rel", "pass"})
    CHECK(r.contains(field));
  std::remove(out.c_str());
}

TEST_CASE("verify: torus grotemeyer example") {
  const std::string out = temp_path("torus.json");
  CHECK(run_args({"verify", "--shape", "torus_rev", "--R", "2", "--r", "1", "--identity", "grotemeyer", "--out", out}) ==
        kExitPass);
  const Json j = Json::parse(slurp(out));
  CHECK(j["reports"][0]["rhs"].get<double>() == 0.0);
  std::remove(out.c_str());
}

TEST_CASE("calibrate example writes a constants file") {
  const std::string out = temp_path("c2.json");
  const std::string rep = temp_path("c2_report.json");
  CHECK(run_args({"calibrate", "--n", "2", "--k", "1", "--radii", "0.5,1.0", "--out", out, "--report", rep}) ==
        kExitPass);
  const auto c = read_constants_file(out);
  CHECK(c.n == 2);
  REQUIRE(c.c.size() == 1u);
  CHECK(c.c[0] == doctest::Approx(1.0).epsilon(1e-6));
  const Json r = Json::parse(slurp(rep));
  CHECK(r["calibration"]["validation"].size() >= 2u);
  std::remove(out.c_str());
  std::remove(rep.c_str());
}

TEST_CASE("usage errors exit with 2") {
  std::ostringstream out, err;
  RunConfig bad_shape = verify("dodecahedron");
  CHECK(run(bad_shape, out, err) == kExitUsage);
  RunConfig bad_id = verify("sphere_rn");
  bad_id.identities = {"pythagoras"};
  CHECK(run(bad_id, out, err) == kExitUsage);
  RunConfig bad_a = verify("sphere_rn");
  bad_a.identities = {"grotemeyer"};
  bad_a.directions = {"1,2"};
  CHECK(run(bad_a, out, err) == kExitUsage);
  RunConfig bad_tol = verify("sphere_rn");
  bad_tol.tol = -1.0;
  CHECK(run(bad_tol, out, err) == kExitUsage);
  RunConfig no_shape;
  no_shape.command = "verify";
  CHECK(run(no_shape, out, err) == kExitUsage);
  RunConfig missing_c = verify("geodesic_sphere_s");
  missing_c.shape.n = 4;
  missing_c.identities = {"gauss_bonnet"};
  missing_c.nodes = 4;
  CHECK(run(missing_c, out, err) == kExitUsage);
  RunConfig bad_cmd;
  bad_cmd.command = "frobnicate";
  CHECK(run(bad_cmd, out, err) == kExitUsage);
  CHECK(run_args({"verify", "--shape", "sphere_rn", "--bogus-flag"}) == kExitUsage);
  CHECK(run_args({"verify", "--shape", "sphere_rn", "--a", "random-seed:x"}) == kExitUsage);
  CHECK(!err.str().empty());
}

TEST_CASE("failing checks exit with 1 and still write the report") {
  const std::string cpath = temp_path("wrong_constants.json");
  write_text_file(cpath, R"({"n": 2, "k-independent": true, "c": [2.0]})");
  RunConfig c = verify("geodesic_sphere_s");
  c.shape.rho = 0.7;
  c.identities = {"gauss_bonnet"};
  c.constants_path = cpath;
  c.output = temp_path("fail.json");
  std::ostringstream out, err;
  CHECK(run(c, out, err) == kExitFail);
  const Json j = Json::parse(slurp(c.output));
  CHECK(j["all_pass"] == false);
  CHECK(j["reports"][0]["pass"] == false);
  std::remove(cpath.c_str());
  std::remove(c.output.c_str());
}

TEST_CASE("list and scan") {
  std::ostringstream out, err;
  RunConfig l;
  l.command = "list";
  CHECK(run(l, out, err) == kExitPass);
  CHECK(out.str().find("clifford_torus_s3") != std::string::npos);
  CHECK(out.str().find("closed_form") != std::string::npos);

  std::ostringstream sout;
  RunConfig s;
  s.command = "scan";
  s.shape.name = "torus_rev";
  s.shape_given = true;
  s.samples = 50;
  CHECK(run(s, sout, err) == kExitPass);
  const Json j = Json::parse(sout.str());
  CHECK(j["reports"][0]["samples"] == 50);
  CHECK(j["reports"][0]["gauss_formula"].get<double>() < 1e-8);
}

TEST_CASE("random directions are reproducible and spacelike in Minkowski space") {
  const SpaceForm h(-1.0, 2);
  for (int seed = 0; seed < 50; ++seed) {
    const std::string text = "random-seed:" + std::to_string(seed);
    const AmbientVector a = parse_direction(text, h);
    const AmbientVector b = parse_direction(text, h);
    CHECK(a == b);
    CHECK(a.norm() == doctest::Approx(1.0));
    CHECK(inner_product(a, a, h.signature) > 0.0);
  }
  CHECK(parse_direction("random-seed:1", SpaceForm(0.0, 2)) != parse_direction("random-seed:2", SpaceForm(0.0, 2)));
  const AmbientVector e = parse_direction("0,0.5,-2", SpaceForm(0.0, 2));
  CHECK(e[2] == -2.0);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  RunConfig c = verify("clifford_torus_s3");
  c.identities = {"moment", "frame_sum"};
  c.directions = {"random-seed:5"};
  c.m_values = {1, 2};
  c.nodes = 40;
  std::vector<std::string> texts;
  for (int threads : {1, 4, 1, 3}) {
    std::ostringstream out, err;
    c.threads = threads;
    CHECK(run(c, out, err) == kExitPass);
    texts.push_back(out.str());
  }
  for (const auto& t : texts) CHECK(t == texts[0]);
  CHECK(texts[0].find("threads") == std::string::npos);
}

TEST_CASE("thread count from the environment") {
  const int saved = omp_get_max_threads();
  setenv(kThreadsEnv, "3", 1);
  CHECK(run_args({"list"}) == kExitPass);
  CHECK(omp_get_max_threads() == 3);
  unsetenv(kThreadsEnv);
  omp_set_num_threads(saved);
}
