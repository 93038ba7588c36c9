#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "curvlab/gallery.hpp"
#include "curvlab/json_io.hpp"

using curvlab::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* cli_bin() {
  const char* bin = std::getenv("CURVLAB_BIN");
  REQUIRE(bin != nullptr);
  return bin;
}

// run the binary through the shell with redirected stdio; `env_prefix` allows
// things like "CURVLAB_TOL=10 "
CliResult run_cli(const std::string& args, const std::string& stdin_data = "",
                  const std::string& env_prefix = "") {
  static int counter = 0;
  const std::string base =
      "/tmp/curvlab_cli_" + std::to_string(getpid()) + "_" + std::to_string(counter++);
  {
    std::ofstream in(base + ".in");
    in << stdin_data;
  }
  const std::string cmd = env_prefix + "'" + cli_bin() + "' " + args + " < " + base +
                          ".in > " + base + ".out 2> " + base + ".err";
  const int rc = std::system(cmd.c_str());
  CliResult res;
  res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  res.out = slurp(base + ".out");
  res.err = slurp(base + ".err");
  std::remove((base + ".in").c_str());
  std::remove((base + ".out").c_str());
  std::remove((base + ".err").c_str());
  return res;
}

}  // namespace

TEST_CASE("gallery pipes into check") {
  const CliResult gal = run_cli("gallery sphere --n 5 -f json");
  CHECK(gal.exit_code == 0);
  const CliResult chk = run_cli("check --p 1 -f json", gal.out);
  CHECK(chk.exit_code == 0);
  const json rep = json::parse(chk.out);
  CHECK(rep["verdict"] == "vanishing");
  CHECK(rep["partial_sum"].get<double>() == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(rep["l"] == 4);
  CHECK(rep["weight_route"] == "hessian");
}

TEST_CASE("json output is byte-identical across runs") {
  const std::string args = "gallery random --n 4 --seed 5 -f json";
  CHECK(run_cli(args).out == run_cli(args).out);
  const std::string ver =
      "verify --check hg-general-oracle --check json-roundtrip --trials 5 --seed 3 "
      "--dims 3..4 -f json";
  const CliResult v1 = run_cli(ver);
  const CliResult v2 = run_cli(ver);
  CHECK(v1.exit_code == 0);
  CHECK(v1.out == v2.out);
  CHECK_FALSE(v1.out.empty());
}

TEST_CASE("emitted tensors re-ingest exactly") {
  const CliResult gal = run_cli("gallery random --n 4 --seed 9 -f json");
  const json j = json::parse(gal.out);
  const curvlab::DenseTensor parsed = curvlab::tensor_from_json(j["curvature"], "curvature");
  const curvlab::GalleryExample direct = curvlab::gallery("random", curvlab::Space(4), 9);
  curvlab::DenseTensor diff = parsed;
  diff -= direct.curvature.tensor();
  CHECK(curvlab::max_abs(diff) <= 1e-15);

  // and they survive a decompose round through the CLI
  const CliResult dec = run_cli("decompose -f json", gal.out);
  CHECK(dec.exit_code == 0);
  const json dj = json::parse(dec.out);
  const curvlab::DenseTensor weyl = curvlab::tensor_from_json(dj["weyl"], "weyl");
  CHECK(weyl.order() == 4);
  CHECK(weyl.dim() == 4);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("decompose", "this is not json").exit_code == 2);
  CHECK(run_cli("gallery nope --n 4").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("gallery sphere --n 2").exit_code == 2);
  CHECK(run_cli("check --p 1", "{}").exit_code == 2);

  const CliResult hyp = run_cli("gallery hyperbolic --n 4 -f json");
  CHECK(run_cli("check --p 1", hyp.out).exit_code == 1);

  // tensors that fail validation are input errors
  json bad = curvlab::tensor_to_json(curvlab::DenseTensor(curvlab::Space(3), 4));
  bad["components"][2] = 0.5;
  const CliResult sym = run_cli("spectrum", bad.dump());
  CHECK(sym.exit_code == 2);
  CHECK(sym.err.find("antisymmetry") != std::string::npos);
}

TEST_CASE("middle degree points to the mu route") {
  const CliResult gauss = run_cli("gallery gaussian --n 4 -f json");
  const CliResult blocked = run_cli("check --p 2", gauss.out);
  CHECK(blocked.exit_code == 2);
  CHECK(blocked.err.find("--route mu") != std::string::npos);

  const CliResult mu = run_cli("check --p 2 --route mu -f json", gauss.out);
  CHECK(mu.exit_code == 0);
  const json rep = json::parse(mu.out);
  CHECK(rep["weight_route"] == "mu");
  CHECK(rep["partial_sum"].get<double>() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("check options") {
  const CliResult gauss = run_cli("gallery gaussian --n 5 -f json");

  // explicit laplacian disagreeing with the trace is an input error
  CHECK(run_cli("check --p 1 --laplacian 7", gauss.out).exit_code == 2);
  CHECK(run_cli("check --p 1 --laplacian 5", gauss.out).exit_code == 0);
  CHECK(run_cli("check --p 1 --laplacian what", gauss.out).exit_code == 2);

  // strict demands positivity: flat space passes lax, fails strict
  const CliResult flat = run_cli("gallery flat --n 5 -f json");
  CHECK(run_cli("check --p 1", flat.out).exit_code == 0);
  CHECK(run_cli("check --p 1 --strict", flat.out).exit_code == 1);

  // CURVLAB_TOL widens the verdict band (hyperbolic partial sum is -3 here)
  const CliResult hyp = run_cli("gallery hyperbolic --n 4 -f json");
  CHECK(run_cli("check --p 1", hyp.out).exit_code == 1);
  CHECK(run_cli("check --p 1", hyp.out, "CURVLAB_TOL=10 ").exit_code == 0);
  CHECK(run_cli("check --p 1", hyp.out, "CURVLAB_TOL=bogus ").exit_code == 2);

  // explicit mu list in the input drives the mu route
  json with_mu = json::parse(run_cli("gallery sphere --n 4 -f json").out);
  with_mu["mu"] = {0.5, 0.5, 0.5, 0.5};
  const CliResult mu = run_cli("check --p 1 --route mu -f json", with_mu.dump());
  CHECK(mu.exit_code == 0);
  CHECK(json::parse(mu.out)["verdict"] == "vanishing");
  with_mu["mu"] = {2.0, 1.0, 0.5, 0.5};
  CHECK(run_cli("check --p 1 --route mu", with_mu.dump()).exit_code == 2);
}

TEST_CASE("output formats") {
  const CliResult gal = run_cli("gallery sphere --n 4 -f json");

  const CliResult dec_csv = run_cli("decompose -f csv", gal.out);
  CHECK(dec_csv.exit_code == 0);
  CHECK(dec_csv.out.rfind("part,index,value", 0) == 0);
  const CliResult dec_txt = run_cli("decompose", gal.out);
  CHECK(dec_txt.out.find("scal: 12") != std::string::npos);

  const CliResult spec = run_cli("spectrum -f json", gal.out);
  const json sj = json::parse(spec.out);
  CHECK(sj["eigenvalues"].size() == 6);
  CHECK(sj["eigenvalues"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  const CliResult spec_csv = run_cli("spectrum -f csv", gal.out);
  CHECK(spec_csv.out.rfind("index,eigenvalue,partial_sum", 0) == 0);

  const CliResult chk_csv = run_cli("check --p 1 -f csv", gal.out);
  CHECK(chk_csv.out.find("vanishing") != std::string::npos);
}

TEST_CASE("listing helpers") {
  const CliResult names = run_cli("gallery --list");
  CHECK(names.exit_code == 0);
  CHECK(names.out.find("sphere\n") != std::string::npos);
  CHECK(names.out.find("gaussian\n") != std::string::npos);

  const CliResult checks = run_cli("verify --list");
  CHECK(checks.exit_code == 0);
  CHECK(checks.out.find("hg-general-oracle\n") != std::string::npos);
  CHECK(checks.out.find("weyl-remark-sphere-pairing\n") != std::string::npos);

  // descriptions stay honest about what an algebraic check can conclude
  const CliResult hyp = run_cli("gallery hyperbolic --n 4");
  CHECK(hyp.out.find("etti") == std::string::npos);
}

TEST_CASE("verify reports failures through the exit code") {
  // an absurdly tight override forces residual > tolerance somewhere
  const CliResult tight = run_cli(
      "verify --check spectrum-reconstruction --trials 3 --dims 4..4 --tol 1e-300 -f json");
  CHECK(tight.exit_code == 1);
  const json j = json::parse(tight.out);
  CHECK(j["all_pass"] == false);

  CHECK(run_cli("verify --check no-such-check --trials 1").exit_code == 2);
  CHECK(run_cli("verify --dims 9..3 --trials 1").exit_code == 2);
}
