// SPDX-License-Identifier: Apache-2.0
// Runs the polycal executable and checks exit codes and outputs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

const fs::path kWork = fs::path(POLYCAL_TEST_WORKDIR) / "cli";

int run(const std::string& args) {
  fs::create_directories(kWork);
  const std::string cmd = std::string(POLYCAL_CLI) + " " + args + " 2>" + (kWork / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Json read(const fs::path& p) {
  std::ifstream in(p);
  return Json::parse(in);
}

std::string at(const std::string& name) { return (kWork / name).string(); }

const std::string kData = POLYCAL_TEST_DATA;

}  // namespace

TEST_CASE("demo then certify exits 0 with a calibrated minimizer") {
  REQUIRE(run("demo tetrahedral_cone --out " + at("tet.json")) == 0);
  CHECK(run("certify --in " + at("tet.json") + " --with-solver --out " + at("tet_cert.json")) == 0);
  CHECK(read(at("tet_cert.json"))["conclusion"] == "calibrated-minimizer");
}

TEST_CASE("stationarity on the L-shape exits 1 and reports sqrt 2") {
  CHECK(run("stationarity --in " + kData + "/l_shape.json --out " + at("l.json")) == 1);
  const Json r = read(at("l.json"));
  CHECK(std::abs(r["max_residual"].get<double>() - std::sqrt(2.0)) <= 1e-10);
  CHECK(run("certify --in " + kData + "/l_shape.json --out " + at("l_cert.json")) == 1);
  CHECK(run("deform --in " + kData + "/l_shape.json --out " + at("l_deform.json")) == 1);
}

TEST_CASE("groupnorm with generators 2 and 3") {
  CHECK(run("groupnorm --in " + kData + "/groupnorm_23.json --lambda 6 --out " + at("g.json")) == 0);
  const Json r = read(at("g.json"));
  CHECK(r["norm"].get<double>() == doctest::Approx(5.0));
  CHECK(r["integral"] == true);
}

TEST_CASE("every command on a catalog example") {
  REQUIRE(run("demo y_line --out " + at("y.json")) == 0);
  CHECK(run("validate --in " + at("y.json") + " --out " + at("y_valid.json")) == 0);
  CHECK(run("stationarity --in " + at("y.json") + " --out " + at("y_st.json")) == 0);
  CHECK(run("chainify --in " + at("y.json") + " --out " + at("y_chain.json")) == 0);
  CHECK(run("minimize --in " + at("y.json") + " --out " + at("y_min.json")) == 0);
  const Json m = read(at("y_min.json"));
  CHECK(m["result"]["objective"].get<double>() == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(run("minimize --in " + at("y_chain.json") + " --out " + at("y_min2.json")) == 0);
  CHECK(run("flatnorm --in " + at("y_chain.json") + " --out " + at("y_flat.json")) == 0);
  CHECK(read(at("y_flat.json"))["value"].get<double>() <= 3.0 + 1e-12);
  CHECK(run("certify --in " + at("y_chain.json") + " --out " + at("y_chain_cert.json")) == 0);
  CHECK(run("deform --in " + at("y.json") + " --trials 20 --seed 3 --out " + at("y_def1.json")) == 0);
  CHECK(run("deform --in " + at("y.json") + " --trials 20 --seed 3 --out " + at("y_def2.json")) == 0);
  CHECK(read(at("y_def1.json")) == read(at("y_def2.json")));
  // solver config from a file
  {
    std::ofstream cfg(at("cfg.json"));
    cfg << R"({"max_iter": 5000, "primal_tol": 1e-8, "obj_tol": 1e-10, "seed": 2})";
  }
  CHECK(run("minimize --in " + at("y.json") + " --solver-config " + at("cfg.json") + " --out " + at("y_min3.json")) ==
        0);
}

TEST_CASE("outputs parse back through the library") {
  REQUIRE(run("demo plane_disk --out " + at("disk.json")) == 0);
  // chainify output carries the complex, so it can be fed straight back
  REQUIRE(run("chainify --in " + at("disk.json") + " --out " + at("disk_chain.json")) == 0);
  CHECK(run("certify --in " + at("disk_chain.json") + " --out " + at("disk_cert.json")) == 0);
}

TEST_CASE("input errors exit 2") {
  CHECK(run("frobnicate") == 2);
  CHECK(run("stationarity --in " + at("does_not_exist.json")) == 2);
  {
    std::ofstream bad(at("bad.json"));
    bad << "{ this is not json";
  }
  CHECK(run("validate --in " + at("bad.json")) == 2);
  {
    std::ofstream nocx(at("nocomplex.json"));
    nocx << R"({"varifold": {"dimension": 1, "weights": []}})";
  }
  CHECK(run("stationarity --in " + at("nocomplex.json")) == 2);
  CHECK(run("demo sphere") == 2);
  CHECK(run("stationarity --in " + kData + "/l_shape.json --tol abc") == 2);
}
