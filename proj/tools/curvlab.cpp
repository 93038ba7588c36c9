#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvlab/bochner.hpp"
#include "curvlab/error.hpp"
#include "curvlab/gallery.hpp"
#include "curvlab/json_io.hpp"
#include "curvlab/tolerances.hpp"
#include "curvlab/verify.hpp"

using curvlab::json;

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json read_input(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw curvlab::SchemaError(path, "cannot open input file");
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw curvlab::SchemaError(path, std::string("invalid JSON: ") + e.what());
  }
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// flat "part,index,value" rows for tensor-valued outputs
void csv_part(const std::string& part, const std::vector<double>& values) {
  for (size_t i = 0; i < values.size(); ++i)
    std::cout << part << "," << i << "," << fmt17(values[i]) << "\n";
}

double env_or(double fallback) {
  const char* s = std::getenv("CURVLAB_TOL");
  if (s == nullptr || *s == '\0') return fallback;
  char* end = nullptr;
  const double v = std::strtod(s, &end);
  if (end == s || *end != '\0' || !(v > 0.0))
    throw curvlab::Error("CURVLAB_TOL must be a positive number");
  return v;
}

struct DimRange {
  int lo = 3;
  int hi = 6;
};

DimRange parse_dims(const std::string& s) {
  DimRange d;
  const auto pos = s.find("..");
  try {
    if (pos == std::string::npos) {
      d.lo = d.hi = std::stoi(s);
    } else {
      d.lo = std::stoi(s.substr(0, pos));
      d.hi = std::stoi(s.substr(pos + 2));
    }
  } catch (const std::exception&) {
    throw curvlab::Error("--dims expects N or A..B");
  }
  if (d.lo < 2 || d.hi < d.lo) throw curvlab::Error("--dims expects 2 <= A <= B");
  return d;
}

int cmd_decompose(const std::string& input, double tol, const std::string& format) {
  const json j = read_input(input);
  const curvlab::AlgCurv r = curvlab::alg_curv_from_json(
      j.contains("curvature") ? j["curvature"] : j, "curvature", tol);
  const curvlab::CurvDecomposition d = curvlab::decompose(r);
  if (format == "json") {
    json out = curvlab::decomposition_to_json(d);
    out["dim"] = r.dim();
    emit_json(out);
  } else if (format == "csv") {
    std::cout << "part,index,value\n";
    csv_part("scal", {d.scal});
    csv_part("ric0", d.ric0.matrix());
    csv_part("weyl", d.weyl.tensor().components());
  } else {
    const int n = r.dim();
    std::cout << "dim: " << n << "\n";
    std::cout << "scal: " << fmt17(d.scal) << "\n";
    std::cout << "ric0:\n";
    for (int i = 0; i < n; ++i) {
      std::cout << " ";
      for (int c = 0; c < n; ++c) std::cout << " " << fmt17(d.ric0(i, c));
      std::cout << "\n";
    }
    std::cout << "weyl (" << d.weyl.tensor().size() << " components, row-major):\n ";
    for (double v : d.weyl.tensor().components()) std::cout << " " << fmt17(v);
    std::cout << "\n";
  }
  return 0;
}

int cmd_spectrum(const std::string& input, double tol, const std::string& format) {
  const json j = read_input(input);
  const curvlab::AlgCurv r = curvlab::alg_curv_from_json(
      j.contains("curvature") ? j["curvature"] : j, "curvature", tol);
  const curvlab::CurvSpectrum spec = curvlab::spectrum(r);
  const std::vector<double> sums = spec.partial_sums();
  if (format == "json") {
    json out = curvlab::spectrum_to_json(spec);
    out["dim"] = r.dim();
    emit_json(out);
  } else if (format == "csv") {
    std::cout << "index,eigenvalue,partial_sum\n";
    for (size_t i = 0; i < spec.eigenvalues.size(); ++i)
      std::cout << i + 1 << "," << fmt17(spec.eigenvalues[i]) << "," << fmt17(sums[i]) << "\n";
  } else {
    std::cout << "dim: " << r.dim() << "\n";
    for (size_t i = 0; i < spec.eigenvalues.size(); ++i)
      std::cout << "l=" << i + 1 << " eigenvalue=" << fmt17(spec.eigenvalues[i])
                << " partial_sum=" << fmt17(sums[i]) << "\n";
  }
  return 0;
}

int cmd_check(const std::string& input, int p, const std::string& route,
              const std::string& laplacian, bool strict, double tol,
              const std::string& format) {
  const json j = read_input(input);
  if (!j.is_object() || !j.contains("curvature"))
    throw curvlab::SchemaError("curvature", "check input needs a curvature field");
  const curvlab::AlgCurv r = curvlab::alg_curv_from_json(j["curvature"], "curvature");

  curvlab::ConditionReport rep;
  if (route == "mu" && j.contains("mu")) {
    if (!j["mu"].is_array()) throw curvlab::SchemaError("mu", "expected an array of numbers");
    std::vector<double> mus;
    for (size_t i = 0; i < j["mu"].size(); ++i) {
      if (!j["mu"][i].is_number())
        throw curvlab::SchemaError("mu[" + std::to_string(i) + "]", "expected a number");
      mus.push_back(j["mu"][i].get<double>());
    }
    rep = curvlab::check_vanishing(r, curvlab::MuList(std::move(mus)), p, strict, tol);
  } else {
    if (!j.contains("hess_f"))
      throw curvlab::SchemaError("hess_f", "check input needs hess_f (or mu with --route mu)");
    const curvlab::SymForm hess = curvlab::sym_form_from_json(j["hess_f"], "hess_f");
    if (route == "mu") {
      rep = curvlab::check_vanishing(r, curvlab::MuList::from_sym(hess), p, strict, tol);
    } else {
      double lap = hess.trace();
      if (laplacian != "auto") {
        char* end = nullptr;
        lap = std::strtod(laplacian.c_str(), &end);
        if (end == laplacian.c_str() || *end != '\0')
          throw curvlab::Error("--laplacian expects auto or a number");
      } else if (j.contains("laplacian")) {
        if (!j["laplacian"].is_number())
          throw curvlab::SchemaError("laplacian", "expected a number");
        lap = j["laplacian"].get<double>();
      }
      rep = curvlab::check_vanishing(r, curvlab::WeightSpec(hess, lap, p), strict, tol);
    }
  }

  if (format == "json") {
    emit_json(curvlab::condition_report_to_json(rep));
  } else if (format == "csv") {
    std::cout << "p,l,partial_sum,verdict,weight_route,strict,tolerance,passed\n";
    std::cout << rep.p << "," << rep.l << "," << fmt17(rep.partial_sum) << ","
              << curvlab::vanishing_verdict_name(rep.verdict) << "," << rep.weight_route << ","
              << (rep.strict ? "true" : "false") << "," << fmt17(rep.tolerance) << ","
              << (rep.passed() ? "true" : "false") << "\n";
  } else {
    std::cout << "p: " << rep.p << "\n"
              << "l: " << rep.l << "\n"
              << "partial_sum: " << fmt17(rep.partial_sum) << "\n"
              << "verdict: " << curvlab::vanishing_verdict_name(rep.verdict) << "\n"
              << "weight_route: " << rep.weight_route << "\n"
              << "strict: " << (rep.strict ? "true" : "false") << "\n"
              << "tolerance: " << fmt17(rep.tolerance) << "\n"
              << "result: " << (rep.passed() ? "pass" : "fail") << "\n";
  }
  return rep.passed() ? 0 : 1;
}

int cmd_gallery(const std::string& name, bool list, int n, std::uint64_t seed,
                const std::string& format) {
  if (list) {
    for (const std::string& s : curvlab::gallery_names()) std::cout << s << "\n";
    return 0;
  }
  if (name.empty()) throw curvlab::Error("gallery needs an example name (or --list)");
  const curvlab::GalleryExample ex = curvlab::gallery(name, curvlab::Space(n), seed);
  if (format == "json") {
    emit_json(json{{"name", ex.name},
                   {"description", ex.description},
                   {"dim", n},
                   {"seed", ex.seed},
                   {"curvature", curvlab::tensor_to_json(ex.curvature.tensor())},
                   {"hess_f", curvlab::sym_form_to_json(ex.hess_f)}});
  } else if (format == "csv") {
    std::cout << "part,index,value\n";
    csv_part("curvature", ex.curvature.tensor().components());
    csv_part("hess_f", ex.hess_f.matrix());
  } else {
    std::cout << "name: " << ex.name << "\n"
              << "description: " << ex.description << "\n"
              << "dim: " << n << "\n"
              << "seed: " << ex.seed << "\n";
    std::cout << "curvature (" << ex.curvature.tensor().size() << " components, row-major):\n ";
    for (double v : ex.curvature.tensor().components()) std::cout << " " << fmt17(v);
    std::cout << "\nhess_f:\n";
    for (int i = 0; i < n; ++i) {
      std::cout << " ";
      for (int c = 0; c < n; ++c) std::cout << " " << fmt17(ex.hess_f(i, c));
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_verify(int trials, std::uint64_t seed, const std::string& dims, double tol,
               const std::vector<std::string>& only, bool list, const std::string& format) {
  if (list) {
    for (const std::string& s : curvlab::suite_check_names()) std::cout << s << "\n";
    return 0;
  }
  const DimRange d = parse_dims(dims);
  curvlab::SuiteConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.dim_lo = d.lo;
  cfg.dim_hi = d.hi;
  cfg.tol_override = tol;

  curvlab::SuiteReport report;
  if (only.empty()) {
    report = curvlab::run_suite(cfg);
  } else {
    for (const std::string& name : only) report.checks.push_back(curvlab::run_check(name, cfg));
  }

  if (format == "json") {
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back(json{{"name", c.name},
                            {"trials", c.trials},
                            {"max_residual", c.max_residual},
                            {"tolerance", c.tolerance},
                            {"pass", c.pass}});
    emit_json(json{{"seed", seed},
                   {"dims", json::array({d.lo, d.hi})},
                   {"trials", trials},
                   {"checks", std::move(checks)},
                   {"all_pass", report.all_pass()}});
  } else if (format == "csv") {
    std::cout << "name,trials,max_residual,tolerance,pass\n";
    for (const auto& c : report.checks)
      std::cout << c.name << "," << c.trials << "," << fmt17(c.max_residual) << ","
                << fmt17(c.tolerance) << "," << (c.pass ? "true" : "false") << "\n";
  } else {
    for (const auto& c : report.checks) {
      std::printf("[%s] %-32s trials=%-5d max_residual=%-12.3e tol=%-8.0e (%.0f ms)\n",
                  c.pass ? " ok " : "FAIL", c.name.c_str(), c.trials, c.max_residual,
                  c.tolerance, c.wall_ms);
    }
    std::cout << (report.all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebraic curvature workbench: Kulkarni-Nomizu products, curvature operators, "
               "Weitzenboeck curvature terms and weighted vanishing checks"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "text";
  double val_tol = curvlab::tol::kValidateRel;
  int p = 1;
  std::string route = "hessian";
  std::string laplacian = "auto";
  bool strict = false;
  double check_tol = 0.0;
  std::string gal_name;
  bool gal_list = false;
  int gal_n = 4;
  std::uint64_t gal_seed = 0;
  int vtrials = 100;
  std::uint64_t vseed = 42;
  std::string vdims = "3..6";
  double vtol = 0.0;
  std::vector<std::string> vonly;
  bool vlist = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("-f,--format", format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
  };

  CLI::App* dec = app.add_subcommand(
      "decompose", "orthogonal decomposition of a curvature tensor into scalar, "
                   "trace-free Ricci and Weyl parts");
  dec->add_option("input", input, "JSON file with the tensor (default: stdin)");
  dec->add_option("--tol", val_tol, "symmetry validation tolerance, relative")
      ->capture_default_str();
  add_format(dec);

  CLI::App* spe = app.add_subcommand(
      "spectrum", "eigenvalues and partial sums of the curvature operator on bivectors");
  spe->add_option("input", input, "JSON file with the tensor (default: stdin)");
  spe->add_option("--tol", val_tol, "symmetry validation tolerance, relative")
      ->capture_default_str();
  add_format(spe);

  CLI::App* chk = app.add_subcommand(
      "check", "weighted vanishing condition for degree-p forms; input needs curvature "
               "plus hess_f (or mu with --route mu)");
  chk->add_option("input", input, "JSON file with the data (default: stdin)");
  chk->add_option("-p,--p", p, "form degree, 1 <= p <= n/2")->required();
  chk->add_option("--route", route, "weight construction: hessian or mu")
      ->check(CLI::IsMember({"hessian", "mu"}))
      ->capture_default_str();
  chk->add_option("--laplacian", laplacian,
                  "auto (trace of hess_f) or an explicit number for the hessian route")
      ->capture_default_str();
  chk->add_flag("--strict", strict, "require a strictly positive verdict to pass");
  chk->add_option("--tol", check_tol,
                  "verdict tolerance band (default: CURVLAB_TOL env or 1e-10)");
  add_format(chk);

  CLI::App* gal = app.add_subcommand("gallery", "emit a named model-space example");
  gal->add_option("name", gal_name, "example name (see --list)");
  gal->add_flag("--list", gal_list, "list example names");
  gal->add_option("-n,--n", gal_n, "dimension, n >= 3")->capture_default_str();
  gal->add_option("--seed", gal_seed, "seed for the random examples")->capture_default_str();
  add_format(gal);

  CLI::App* ver = app.add_subcommand("verify", "run the built-in property check battery");
  ver->add_option("--trials", vtrials, "random trials per dimension per check")
      ->capture_default_str();
  ver->add_option("--seed", vseed, "master seed")->capture_default_str();
  ver->add_option("--dims", vdims, "dimension range A..B")->capture_default_str();
  ver->add_option("--tol", vtol, "override every check tolerance (0 keeps per-check defaults)");
  ver->add_option("--check", vonly, "run only the named checks (repeatable)");
  ver->add_flag("--list", vlist, "list check names");
  add_format(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dec->parsed()) return cmd_decompose(input, val_tol, format);
    if (spe->parsed()) return cmd_spectrum(input, val_tol, format);
    if (chk->parsed()) {
      const double tol = check_tol > 0.0 ? check_tol : env_or(curvlab::tol::kVerdict);
      return cmd_check(input, p, route, laplacian, strict, tol, format);
    }
    if (gal->parsed()) return cmd_gallery(gal_name, gal_list, gal_n, gal_seed, format);
    if (ver->parsed()) return cmd_verify(vtrials, vseed, vdims, vtol, vonly, vlist, format);
  } catch (const curvlab::MiddleDegree& e) {
    std::cerr << "error: " << e.what() << "\nhint: rerun with --route mu\n";
    return 2;
  } catch (const curvlab::SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
