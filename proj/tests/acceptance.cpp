// End-to-end acceptance run. Each numbered line covers one gate the build has
// to clear: closed forms against the contraction oracle, the algebraic
// identities, the weighted end-to-end checks, and the CLI contract. Exit code
// 0 only if every line passes.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "curvlab/gallery.hpp"
#include "curvlab/json_io.hpp"
#include "curvlab/verify.hpp"

using curvlab::json;

namespace {

bool g_all = true;

void line(int id, bool pass, const std::string& label, const std::string& detail) {
  std::printf("[%s] %02d %s (%s)\n", pass ? "PASS" : "FAIL", id, label.c_str(),
              detail.c_str());
  if (!pass) g_all = false;
}

curvlab::CheckResult acc(const char* name, int trials, int lo, int hi, double tol) {
  curvlab::SuiteConfig cfg;
  cfg.trials = trials;
  cfg.seed = 42;
  cfg.dim_lo = lo;
  cfg.dim_hi = hi;
  cfg.tol_override = tol;
  return curvlab::run_check(name, cfg);
}

std::string detail_of(const curvlab::CheckResult& r) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d trials, max residual %.2e vs %.0e, %.2fs", r.trials,
                r.max_residual, r.tolerance, r.wall_ms / 1000.0);
  return buf;
}

struct CliRun {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string g_cli;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliRun cli(const std::string& args, const std::string& stdin_data = "") {
  static int counter = 0;
  const std::string base = "/tmp/curvlab_acceptance_" + std::to_string(getpid()) + "_" +
                           std::to_string(counter++);
  {
    std::ofstream in(base + ".in");
    in << stdin_data;
  }
  const std::string cmd = "'" + g_cli + "' " + args + " < " + base + ".in > " + base +
                          ".out 2> " + base + ".err";
  const int rc = std::system(cmd.c_str());
  CliRun res;
  res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  res.out = slurp(base + ".out");
  res.err = slurp(base + ".err");
  std::remove((base + ".in").c_str());
  std::remove((base + ".out").c_str());
  std::remove((base + ".err").c_str());
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];

  {
    // 100 random (h, T) pairs for every dimension 3..7 and order 1..4
    const auto r = acc("hg-general-oracle", 400, 3, 7, 1e-10);
    line(1, r.pass && r.wall_ms < 60000.0,
         "general h^g closed form matches the contraction oracle", detail_of(r));
  }
  {
    const auto s = acc("hg-sym2-oracle", 100, 3, 7, 1e-10);
    const auto p = acc("hg-pform-oracle", 100, 3, 7, 1e-10);
    const auto c = acc("hg-curv-oracle", 100, 4, 7, 1e-10);
    const double worst = std::max({s.max_residual, p.max_residual, c.max_residual});
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d trials, max residual %.2e vs 1e-10",
                  s.trials + p.trials + c.trials, worst);
    line(2, s.pass && p.pass && c.pass,
         "specialized closed forms (sym2, p-form, curvature) match the oracle", buf);
  }
  {
    const auto r = acc("sphere-weitzenboeck", 35, 2, 8, 1e-12);
    line(3, r.pass, "unit sphere curvature term scales every p-form by p(n-p)",
         detail_of(r));
  }
  {
    const auto r = acc("form-weight-identity", 167, 3, 8, 1e-10);
    line(4, r.pass, "degree-p weight collapses the form curvature term to -<S w, w>",
         detail_of(r));
  }
  {
    const auto r = acc("sym2-weight-identity", 167, 3, 8, 1e-10);
    line(5, r.pass,
         "trace-free symmetric weight collapses the quadratic form to -<S T, T>",
         detail_of(r));
  }
  {
    const auto r = acc("spectral-identity", 200, 3, 6, 1e-8);
    line(6, r.pass, "curvature term equals the eigenvalue-weighted bivector action sum",
         detail_of(r));
  }
  {
    const auto b = acc("mu-bound", 167, 3, 8, 1e-10);
    const auto s = acc("mu-bound-sharp", 167, 3, 8, 1e-12);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%d inequality trials %.2e vs 1e-10; %d sharp trials %.2e vs 1e-12",
                  b.trials, b.max_residual, s.trials, s.max_residual);
    line(7, b.pass && s.pass,
         "smallest-eigenvalue sum bounds the operator action, with sharp equality", buf);
  }
  {
    const auto a = acc("decomposition-reconstruction", 42, 3, 8, 1e-10);
    const auto b = acc("decomposition-orthogonality", 42, 3, 8, 1e-10);
    const auto c = acc("weyl-ricci-free", 42, 3, 8, 1e-10);
    const auto d = acc("decomposition-idempotence", 42, 3, 8, 1e-10);
    const double worst =
        std::max({a.max_residual, b.max_residual, c.max_residual, d.max_residual});
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d trials, max residual %.2e vs 1e-10",
                  a.trials + b.trials + c.trials + d.trials, worst);
    line(8, a.pass && b.pass && c.pass && d.pass,
         "orthogonal decomposition reconstructs, is orthogonal and idempotent", buf);
  }
  {
    const auto r = acc("gaussian-soliton", 1, 3, 8, 1e-12);
    line(9, r.pass,
         "gaussian soliton weights give partial sum exactly 1 on both routes",
         detail_of(r));
  }
  {
    const auto q = acc("weyl-remark-quadratic", 25, 4, 7, 1e-9);
    const auto rp = acc("weyl-remark-ricci-pairing", 25, 4, 7, 1e-9);
    const auto sp = acc("weyl-remark-sphere-pairing", 25, 4, 7, 1e-12);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%d trials/pairing; quadratic %.2e, ricci %.2e vs 1e-9, sphere %.2e vs 1e-12",
                  q.trials, q.max_residual, rp.max_residual, sp.max_residual);
    line(10, q.pass && rp.pass && sp.pass,
         "weyl curvature term: quadratic identity holds and both pairings vanish", buf);
  }
  {
    bool pass = !g_cli.empty();
    std::string why = pass ? "" : "no CLI path given; ";
    if (pass) {
      const std::string det = "gallery random --n 4 --seed 7 -f json";
      const CliRun g1 = cli(det);
      const CliRun g2 = cli(det);
      if (g1.out != g2.out || g1.out.empty()) {
        pass = false;
        why += "gallery output not byte-identical; ";
      }
      const std::string ver = "verify --check json-roundtrip --trials 5 --seed 3 -f json";
      if (cli(ver).out != cli(ver).out) {
        pass = false;
        why += "verify output not byte-identical; ";
      }
      try {
        const curvlab::DenseTensor parsed =
            curvlab::tensor_from_json(json::parse(g1.out)["curvature"], "curvature");
        curvlab::DenseTensor diff = parsed;
        diff -= curvlab::gallery("random", curvlab::Space(4), 7).curvature.tensor();
        if (curvlab::max_abs(diff) > 1e-15) {
          pass = false;
          why += "re-ingested tensor drifted; ";
        }
      } catch (const std::exception& e) {
        pass = false;
        why += std::string("re-ingest failed: ") + e.what() + "; ";
      }
      const CliRun sphere = cli("gallery sphere --n 5 -f json");
      if (cli("check --p 1", sphere.out).exit_code != 0) {
        pass = false;
        why += "sphere check should exit 0; ";
      }
      const CliRun hyp = cli("gallery hyperbolic --n 5 -f json");
      if (cli("check --p 1", hyp.out).exit_code != 1) {
        pass = false;
        why += "hyperbolic check should exit 1; ";
      }
      if (cli("decompose", "not json").exit_code != 2) {
        pass = false;
        why += "malformed input should exit 2; ";
      }
      const CliRun gauss = cli("gallery gaussian --n 4 -f json");
      const CliRun mid = cli("check --p 2", gauss.out);
      if (mid.exit_code != 2 || mid.err.find("--route mu") == std::string::npos) {
        pass = false;
        why += "middle degree should exit 2 and point at --route mu; ";
      }
      if (cli("check --p 2 --route mu", gauss.out).exit_code != 0) {
        pass = false;
        why += "mu route should handle middle degree; ";
      }
    }
    if (why.empty()) why = "determinism, re-ingest, exit codes 0/1/2, middle-degree hint";
    line(11, pass, "command line contract", why);
  }

  std::printf("%s\n", g_all ? "acceptance: all criteria satisfied"
                            : "acceptance: FAILURES above");
  return g_all ? 0 : 1;
}
