#include "curvlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "curvlab/bochner.hpp"
#include "curvlab/error.hpp"
#include "curvlab/gallery.hpp"
#include "curvlab/json_io.hpp"
#include "curvlab/multi_index.hpp"
#include "curvlab/random_gen.hpp"
#include "curvlab/tensor_ops.hpp"
#include "curvlab/tolerances.hpp"

namespace curvlab {

namespace {

struct Ctx {
  const SuiteConfig& cfg;
  std::uint64_t stream = 0;
  int dim_lo = 0;
  int dim_hi = 0;
  double max_residual = 0.0;
  int trials = 0;

  Rng rng(int dim, int trial) const {
    return Rng::for_trial(cfg.seed, stream ^ (static_cast<std::uint64_t>(dim) << 32),
                          static_cast<std::uint64_t>(trial));
  }
  void observe(double r) {
    if (r > max_residual) max_residual = r;
    ++trials;
  }
};

struct CheckDef {
  const char* name;
  double tolerance;
  int min_dim;
  int max_dim;
  std::function<void(Ctx&)> fn;
};

double rel(double diff, double scale) { return diff / (1.0 + scale); }

double rel_norm(const DenseTensor& diff, const DenseTensor& ref) {
  return frobenius_norm(diff) / (1.0 + frobenius_norm(ref));
}

// ---- tensor core -----------------------------------------------------------

void chk_transpose_involution(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const int k = 2 + t % 3;
      const DenseTensor a = random_tensor(sp, k, rng);
      const int i = 1 + static_cast<int>(rng.next() % k);
      int j = 1 + static_cast<int>(rng.next() % k);
      if (j == i) j = 1 + i % k;
      const DenseTensor b = transpose_slots(a, i, j);
      DenseTensor back = transpose_slots(b, i, j);
      back -= a;
      double r = frobenius_norm(back) / (1.0 + frobenius_norm(a));
      r = std::max(r, rel(std::abs(inner_product(b, b) - inner_product(a, a)),
                          inner_product(a, a)));
      c.observe(r);
    }
  }
}

void chk_endo_derivation(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      std::vector<std::vector<double>> v(3, std::vector<double>(n));
      for (auto& vec : v)
        for (auto& x : vec) x = rng.normal();
      std::vector<double> L(static_cast<size_t>(n) * n);
      for (auto& x : L) x = rng.normal();

      DenseTensor prod(sp, 3);
      std::vector<int> idx(3);
      for (std::int64_t f = 0; f < prod.size(); ++f) {
        prod.unravel(f, idx);
        prod.components()[static_cast<size_t>(f)] = v[0][idx[0]] * v[1][idx[1]] * v[2][idx[2]];
      }
      const DenseTensor got = endo_action(matrix_tensor(sp, L), prod);

      // derivation on a rank-1 product: replace one factor at a time by L^T v
      DenseTensor want(sp, 3);
      for (int slot = 0; slot < 3; ++slot) {
        std::vector<double> lv(n, 0.0);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) lv[b] += L[static_cast<size_t>(a) * n + b] * v[slot][a];
        for (std::int64_t f = 0; f < want.size(); ++f) {
          want.unravel(f, idx);
          double term = -1.0;
          for (int s = 0; s < 3; ++s)
            term *= (s == slot) ? lv[idx[s]] : v[s][idx[s]];
          want.components()[static_cast<size_t>(f)] += term;
        }
      }
      DenseTensor diff = got;
      diff -= want;
      c.observe(rel_norm(diff, want));
    }
  }
}

void chk_kn_symmetries(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const SymForm h1 = random_sym_form(sp, rng);
      const SymForm h2 = random_sym_form(sp, rng);
      const AlgCurv kn = kulkarni_nomizu(h1, h2);
      const SymmetryCheck sc = symmetry_violations(kn.tensor());
      const double scale = max_abs(kn.tensor());
      c.observe(scale > 0.0 ? sc.worst() / scale : sc.worst());
    }
  }
}

void chk_skew_orthogonality(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      std::vector<double> raw(static_cast<size_t>(n) * n);
      for (auto& x : raw) x = rng.normal();
      const SkewEndo L(sp, raw);
      const int p = 1 + t % (n - 1);
      const PForm omega = random_pform(sp, p, rng);
      const double ip = inner_product(endo_action(L, omega.tensor()), omega.tensor());
      c.observe(rel(std::abs(ip), inner_product(omega.tensor(), omega.tensor())));
    }
  }
}

void chk_projection_validates(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const AlgCurv r = curvature_projection(random_tensor(sp, 4, rng));
      const SymmetryCheck sc = symmetry_violations(r.tensor());
      const double scale = max_abs(r.tensor());
      double res = scale > 0.0 ? sc.worst() / scale : sc.worst();
      // projection restricted to valid tensors is the identity
      const AlgCurv again = curvature_projection(r.tensor());
      DenseTensor diff = again.tensor();
      diff -= r.tensor();
      res = std::max(res, rel_norm(diff, r.tensor()));
      c.observe(res);
    }
  }
}

// ---- curvature algebra -----------------------------------------------------

void chk_ricci_hg(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    const SymForm g = SymForm::identity(sp);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const SymForm h = random_sym_form(sp, rng);
      SymForm got = ricci(kulkarni_nomizu(h, g));
      SymForm want = h;
      want *= static_cast<double>(n - 2);
      SymForm shift = g;
      shift *= h.trace();
      want += shift;
      got -= want;
      c.observe(rel(frobenius_norm(got), frobenius_norm(want)));
    }
  }
}

void chk_decomp_reconstruction(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    const SymForm g = SymForm::identity(sp);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const AlgCurv r = random_alg_curv(sp, rng);
      const CurvDecomposition d = decompose(r);
      AlgCurv rebuilt = (d.scal / (2.0 * (n - 1) * n)) * kulkarni_nomizu(g, g) +
                        (1.0 / (n - 2)) * kulkarni_nomizu(d.ric0, g) + d.weyl;
      DenseTensor diff = rebuilt.tensor();
      diff -= r.tensor();
      c.observe(rel_norm(diff, r.tensor()));
    }
  }
}

void chk_decomp_orthogonality(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    const SymForm g = SymForm::identity(sp);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const CurvDecomposition d = decompose(random_alg_curv(sp, rng));
      const DenseTensor a = ((d.scal / (2.0 * (n - 1) * n)) * kulkarni_nomizu(g, g)).tensor();
      const DenseTensor b = ((1.0 / (n - 2)) * kulkarni_nomizu(d.ric0, g)).tensor();
      const DenseTensor w = d.weyl.tensor();
      double res = rel(std::abs(inner_product(a, b)), frobenius_norm(a) * frobenius_norm(b));
      res = std::max(res,
                     rel(std::abs(inner_product(a, w)), frobenius_norm(a) * frobenius_norm(w)));
      res = std::max(res,
                     rel(std::abs(inner_product(b, w)), frobenius_norm(b) * frobenius_norm(w)));
      c.observe(res);
    }
  }
}

void chk_weyl_ricci_free(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const AlgCurv r = random_alg_curv(sp, rng);
      const CurvDecomposition d = decompose(r);
      c.observe(rel(frobenius_norm(ricci(d.weyl)), frobenius_norm(r.tensor())));
    }
  }
}

void chk_decomp_idempotence(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const AlgCurv r = random_alg_curv(sp, rng);
      const CurvDecomposition d = decompose(r);
      const CurvDecomposition dd = decompose(d.weyl);
      const double scale = frobenius_norm(r.tensor());
      double res = rel(std::abs(dd.scal), scale);
      res = std::max(res, rel(frobenius_norm(dd.ric0), scale));
      DenseTensor diff = dd.weyl.tensor();
      diff -= d.weyl.tensor();
      res = std::max(res, rel(frobenius_norm(diff), scale));
      c.observe(res);
    }
  }
}

void chk_spectrum_reconstruction(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    const auto pairs = bivector_pairs(n);
    const int N = static_cast<int>(pairs.size());
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const AlgCurv r = random_alg_curv(sp, rng);
      const std::vector<double> M = curvature_operator_matrix(r);
      const CurvSpectrum spec = spectrum(r);

      std::vector<std::vector<double>> v(spec.eigenvalues.size(), std::vector<double>(N));
      for (size_t al = 0; al < spec.eigenvalues.size(); ++al)
        for (int a = 0; a < N; ++a)
          v[al][a] = bivector_inner(
              spec.eigenbivectors[al],
              SkewEndo::coordinate_bivector(sp, pairs[a].first, pairs[a].second));

      double res = 0.0;
      double mmax = 0.0;
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
          double acc = 0.0;
          for (size_t al = 0; al < spec.eigenvalues.size(); ++al)
            acc += spec.eigenvalues[al] * v[al][a] * v[al][b];
          res = std::max(res, std::abs(acc - M[static_cast<size_t>(a) * N + b]));
          mmax = std::max(mmax, std::abs(M[static_cast<size_t>(a) * N + b]));
        }
      res = res / (1.0 + mmax);
      for (size_t al = 0; al < spec.eigenvalues.size(); ++al)
        for (size_t be = 0; be <= al; ++be) {
          const double ip = bivector_inner(spec.eigenbivectors[al], spec.eigenbivectors[be]);
          res = std::max(res, std::abs(ip - (al == be ? 1.0 : 0.0)));
        }
      c.observe(res);
    }
  }
}

void chk_spectrum_trace(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    const int N = n * (n - 1) / 2;
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const AlgCurv r = random_alg_curv(sp, rng);
      const std::vector<double> M = curvature_operator_matrix(r);
      double tr = 0.0;
      for (int a = 0; a < N; ++a) tr += M[static_cast<size_t>(a) * N + a];
      const CurvSpectrum spec = spectrum(r);
      double sum = 0.0;
      for (double l : spec.eigenvalues) sum += l;
      c.observe(rel(std::abs(sum - tr), std::abs(tr)));
    }
  }
}

void chk_verdict_monotonicity(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const CurvSpectrum spec = spectrum(random_alg_curv(sp, rng));
      const std::vector<double> sums = spec.partial_sums();
      double res = 0.0;
      for (size_t l = 1; l < sums.size(); ++l)
        res = std::max(res, rel(std::abs(sums[l] - sums[l - 1] - spec.eigenvalues[l]),
                                std::abs(sums[l])));
      c.observe(res);
    }
  }
  // classification bands at the tolerance edges
  const double tol = tol::kVerdict;
  CurvSpectrum synth;
  auto verdict_of = [&](double lambda) {
    synth.eigenvalues = {lambda};
    return partial_sum_verdict(synth, 1, tol).verdict;
  };
  bool ok = verdict_of(2.0 * tol) == Verdict::Positive &&
            verdict_of(tol) == Verdict::Nonnegative &&
            verdict_of(0.0) == Verdict::Nonnegative &&
            verdict_of(-tol) == Verdict::Nonnegative &&
            verdict_of(-2.0 * tol) == Verdict::Fails;
  c.observe(ok ? 0.0 : 1.0);
}

// ---- curvature term oracles ------------------------------------------------

void chk_hg_general(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    const SymForm g = SymForm::identity(sp);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const int k = 1 + t % 4;
      const SymForm h = random_sym_form(sp, rng);
      const DenseTensor tt = random_tensor(sp, k, rng);
      const DenseTensor brute = ric_term_bruteforce(kulkarni_nomizu(h, g), tt);
      DenseTensor diff = ric_term_hg_general(h, tt);
      diff -= brute;
      c.observe(rel_norm(diff, brute));
    }
  }
}

void chk_hg_sym2(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    const SymForm g = SymForm::identity(sp);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const SymForm h = random_sym_form(sp, rng);
      const SymForm tt = random_sym_form(sp, rng);
      const DenseTensor brute = ric_term_bruteforce(kulkarni_nomizu(h, g), tt.to_tensor());
      const SymForm closed = ric_term_hg_sym2(h, tt);
      DenseTensor diff = closed.to_tensor();
      diff -= brute;
      double res = rel_norm(diff, brute);
      const double quad = ric_term_hg_sym2_quadratic(h, tt);
      res = std::max(res, rel(std::abs(quad - inner_product(closed.to_tensor(), tt.to_tensor())),
                              std::abs(quad)));
      c.observe(res);
    }
  }
}

void chk_hg_pform(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    const SymForm g = SymForm::identity(sp);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const int p = 1 + t % (n - 1);
      const SymForm h = random_sym_form(sp, rng);
      const PForm omega = random_pform(sp, p, rng);
      const PForm brute = ric_term_bruteforce(kulkarni_nomizu(h, g), omega);
      DenseTensor diff = ric_term_hg_pform(h, omega).tensor();
      diff -= brute.tensor();
      c.observe(rel_norm(diff, brute.tensor()));
    }
  }
}

void chk_hg_curv(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    const SymForm g = SymForm::identity(sp);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const SymForm h = random_sym_form(sp, rng);
      const AlgCurv r = random_alg_curv(sp, rng);
      const DenseTensor brute = ric_term_bruteforce(kulkarni_nomizu(h, g), r.tensor());
      DenseTensor diff = ric_term_hg_curv(h, r);
      diff -= brute;
      c.observe(rel_norm(diff, brute));
    }
  }
}

void chk_transposition_sum(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const SymForm h = random_sym_form(sp, rng);
      const AlgCurv r = random_alg_curv(sp, rng);
      const DenseTensor sum = hg_transposition_sum(h, r.tensor());
      c.observe(rel(frobenius_norm(sum), frobenius_norm(h.to_tensor()) *
                                             frobenius_norm(r.tensor())));
    }
  }
}

void chk_sphere_weitzenboeck(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    const AlgCurv id = unit_sphere_curvature(sp);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const int p = 1 + t % (n - 1);
      const PForm omega = random_pform(sp, p, rng);
      DenseTensor diff = ric_term_bruteforce(id, omega).tensor();
      DenseTensor scaled = omega.tensor();
      scaled *= static_cast<double>(p) * (n - p);
      diff -= scaled;
      c.observe(frobenius_norm(diff) / frobenius_norm(omega.tensor()));
    }
  }
}

// ---- weighted identities ---------------------------------------------------

void chk_form_weight(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    const int p_max = (n - 1) / 2;
    if (p_max < 1) continue;
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const int p = 1 + t % p_max;
      const SymForm s = random_sym_form(sp, rng);
      const PForm omega = random_pform(sp, p, rng);
      c.observe(identity_form_weight(s, omega).residual());
    }
  }
}

void chk_sym2_weight(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const SymForm s = random_sym_form(sp, rng);
      const SymForm tt = random_trace_free_sym(sp, rng);
      c.observe(identity_sym2_weight(s, tt).residual());
    }
  }
}

void chk_spectral(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const int p = 1 + t % (n - 1);
      const AlgCurv r = random_alg_curv(sp, rng);
      const PForm omega = random_pform(sp, p, rng);
      c.observe(spectral_weitzenboeck(r, omega).residual());
    }
  }
}

void chk_mu_bound(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const int p = 1 + t % (n - 1);
      const SymForm s = random_sym_form(sp, rng);
      const PForm omega = random_pform(sp, p, rng);
      const IdentityPair pair = mu_bound_check(s, omega);
      // inequality: lhs >= rhs up to roundoff
      c.observe(rel(std::max(0.0, pair.rhs - pair.lhs), std::abs(pair.rhs)));
    }
  }
}

void chk_mu_bound_sharp(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const int p = 1 + t % (n - 1);
      // diagonal S ascending; omega spans the p smallest eigendirections
      std::vector<double> diag(n);
      for (auto& d : diag) d = rng.normal();
      std::sort(diag.begin(), diag.end());
      std::vector<double> m(static_cast<size_t>(n) * n, 0.0);
      for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = diag[i];
      const SymForm s(sp, std::move(m));
      std::vector<int> support(p);
      for (int i = 0; i < p; ++i) support[i] = i;
      const PForm omega = PForm::basis_form(sp, support);
      const IdentityPair pair = mu_bound_check(s, omega);
      c.observe(rel(std::abs(pair.lhs - pair.rhs), std::abs(pair.rhs)));
    }
  }
}

void chk_self_adjoint(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const int k = 1 + t % 3;
      const AlgCurv r = random_alg_curv(sp, rng);
      const DenseTensor t1 = random_tensor(sp, k, rng);
      const DenseTensor t2 = random_tensor(sp, k, rng);
      const double a = inner_product(ric_term_bruteforce(r, t1), t2);
      const double b = inner_product(t1, ric_term_bruteforce(r, t2));
      c.observe(rel(std::abs(a - b), std::abs(b)));
    }
  }
}

void chk_linearity(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const AlgCurv r = random_alg_curv(sp, rng);
      const DenseTensor t1 = random_tensor(sp, 2, rng);
      const DenseTensor t2 = random_tensor(sp, 2, rng);
      const double a = rng.normal();
      const double b = rng.normal();
      DenseTensor combo = t1;
      combo *= a;
      DenseTensor t2b = t2;
      t2b *= b;
      combo += t2b;
      DenseTensor want = ric_term_bruteforce(r, t1);
      want *= a;
      DenseTensor wb = ric_term_bruteforce(r, t2);
      wb *= b;
      want += wb;
      DenseTensor diff = ric_term_bruteforce(r, combo);
      diff -= want;
      c.observe(rel_norm(diff, want));
    }
  }
}

void chk_weight_route(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    const int p_max = (n - 1) / 2;
    if (p_max < 1) continue;
    const SymForm g = SymForm::identity(sp);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const int p = 1 + t % p_max;
      const double cc = 4.0 * rng.uniform() - 2.0;
      const AlgCurv r = random_alg_curv(sp, rng);
      SymForm hess = g;
      hess *= cc;
      const WeightSpec ws(hess, cc * n, p);
      const AlgCurv via_theorem = weighted_curvature_theorem(r, ws);
      const AlgCurv via_mu = weight_proposition(r, MuList(std::vector<double>(n, cc)), p);
      DenseTensor diff = via_theorem.tensor();
      diff -= via_mu.tensor();
      double res = rel(max_abs(diff), max_abs(via_mu.tensor()));
      const ConditionReport a = check_vanishing(r, ws);
      const ConditionReport b = check_vanishing(r, MuList(std::vector<double>(n, cc)), p);
      if (a.verdict != b.verdict) res = std::max(res, 1.0);
      res = std::max(res, rel(std::abs(a.partial_sum - b.partial_sum), std::abs(b.partial_sum)));
      c.observe(res);
    }
  }
}

void chk_gaussian_soliton(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    const AlgCurv flat = AlgCurv::validate(DenseTensor(sp, 4), tol::kExact);
    const SymForm g = SymForm::identity(sp);
    for (int p = 1; 2 * p < n; ++p) {
      const WeightSpec ws(g, static_cast<double>(n), p);
      const ConditionReport a = check_vanishing(flat, ws);
      const ConditionReport b = check_vanishing(flat, MuList(std::vector<double>(n, 1.0)), p);
      double res = std::abs(a.partial_sum - 1.0);
      res = std::max(res, std::abs(b.partial_sum - 1.0));
      if (a.verdict != Verdict::Positive || b.verdict != Verdict::Positive) res = 1.0;
      // both routes produce the same operator spectrum, every eigenvalue 1/(n-p)
      const CurvSpectrum sa = spectrum(weighted_curvature_theorem(flat, ws));
      const CurvSpectrum sb =
          spectrum(weight_proposition(flat, MuList(std::vector<double>(n, 1.0)), p));
      for (size_t i = 0; i < sa.eigenvalues.size(); ++i) {
        res = std::max(res, std::abs(sa.eigenvalues[i] - sb.eigenvalues[i]));
        res = std::max(res, std::abs(sa.eigenvalues[i] - 1.0 / (n - p)));
      }
      c.observe(res);
    }
  }
}

// ---- Weyl pairings ---------------------------------------------------------

void weyl_trial(Ctx& c, int n, int t, int which) {
  Space sp(n);
  Rng rng = c.rng(n, t);
  AlgCurv w = random_weyl(sp, rng);
  const double wn = frobenius_norm(w.tensor());
  if (wn > 0.0) w = (1.0 / wn) * w;
  SymForm h = random_sym_form(sp, rng);
  const double hn = frobenius_norm(h.to_tensor());
  if (hn > 0.0) h *= 1.0 / hn;
  const AlgCurv aux = random_alg_curv(sp, rng);
  const WeylRemarkResiduals res = weyl_remark_check(h, w, aux);
  if (which == 0) c.observe(res.quadratic);
  if (which == 1) c.observe(res.ricci_pairing);
  if (which == 2) c.observe(res.sphere_pairing);
}

void chk_weyl_quadratic(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n)
    for (int t = 0; t < c.cfg.trials; ++t) weyl_trial(c, n, t, 0);
}

void chk_weyl_ricci_pairing(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n)
    for (int t = 0; t < c.cfg.trials; ++t) weyl_trial(c, n, t, 1);
}

void chk_weyl_sphere_pairing(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n)
    for (int t = 0; t < c.cfg.trials; ++t) weyl_trial(c, n, t, 2);
}

// ---- gallery and serialization --------------------------------------------

void chk_gallery(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    const int reps = std::min(c.cfg.trials, 3);
    for (int t = 0; t < reps; ++t) {
      double res = 0.0;
      for (const std::string& name : gallery_names()) {
        if (name == "weyl-random" && n < 4) continue;
        const GalleryExample ex = gallery(name, sp, c.cfg.seed + t);
        const SymmetryCheck sc = symmetry_violations(ex.curvature.tensor());
        const double scale = max_abs(ex.curvature.tensor());
        res = std::max(res, scale > 0.0 ? sc.worst() / scale : sc.worst());
      }
      auto verdict_for = [&](const char* name) {
        const GalleryExample ex = gallery(name, sp, c.cfg.seed + t);
        return check_vanishing(ex.curvature,
                               WeightSpec::with_traced_laplacian(ex.hess_f, 1))
            .verdict;
      };
      if (verdict_for("sphere") != Verdict::Positive) res = 1.0;
      if (verdict_for("gaussian") != Verdict::Positive) res = 1.0;
      if (verdict_for("flat") != Verdict::Nonnegative) res = 1.0;
      if (verdict_for("hyperbolic") != Verdict::Fails) res = 1.0;
      c.observe(res);
    }
  }
}

void chk_json_roundtrip(Ctx& c) {
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    Space sp(n);
    for (int t = 0; t < c.cfg.trials; ++t) {
      Rng rng = c.rng(n, t);
      const int order = t % 5;
      const DenseTensor a = random_tensor(sp, order, rng);
      const json j = json::parse(tensor_to_json(a).dump());
      const DenseTensor b = tensor_from_json(j, "t");
      DenseTensor diff = b;
      diff -= a;
      double res = max_abs(diff);
      const SymForm h = random_sym_form(sp, rng);
      const SymForm h2 = sym_form_from_json(json::parse(sym_form_to_json(h).dump()), "h");
      SymForm hd = h2;
      hd -= h;
      res = std::max(res, frobenius_norm(hd));
      c.observe(res);
    }
  }
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"transpose-involution", tol::kExact, 2, 10, chk_transpose_involution},
      {"endo-derivation-rank1", tol::kExact, 2, 10, chk_endo_derivation},
      {"kn-curvature-symmetries", tol::kExact, 2, 10, chk_kn_symmetries},
      {"skew-action-orthogonality", tol::kExact, 2, 10, chk_skew_orthogonality},
      {"curvature-projection-validates", tol::kExact, 2, 10, chk_projection_validates},
      {"ricci-hg-formula", tol::kExact, 2, 10, chk_ricci_hg},
      {"decomposition-reconstruction", tol::kOracleRel, 3, 10, chk_decomp_reconstruction},
      {"decomposition-orthogonality", tol::kOracleRel, 3, 10, chk_decomp_orthogonality},
      {"weyl-ricci-free", tol::kOracleRel, 3, 10, chk_weyl_ricci_free},
      {"decomposition-idempotence", tol::kOracleRel, 3, 10, chk_decomp_idempotence},
      {"spectrum-reconstruction", tol::kEigenRel, 2, 10, chk_spectrum_reconstruction},
      {"spectrum-trace", tol::kOracleRel, 2, 10, chk_spectrum_trace},
      {"verdict-monotonicity", tol::kExact, 2, 10, chk_verdict_monotonicity},
      {"hg-general-oracle", tol::kOracleRel, 2, 10, chk_hg_general},
      {"hg-sym2-oracle", tol::kOracleRel, 2, 10, chk_hg_sym2},
      {"hg-pform-oracle", tol::kOracleRel, 2, 10, chk_hg_pform},
      {"hg-curv-oracle", tol::kOracleRel, 4, 10, chk_hg_curv},
      {"bianchi-transposition-sum", tol::kExact, 2, 10, chk_transposition_sum},
      {"sphere-weitzenboeck", tol::kGallery, 2, 8, chk_sphere_weitzenboeck},
      {"form-weight-identity", tol::kOracleRel, 3, 10, chk_form_weight},
      {"sym2-weight-identity", tol::kOracleRel, 2, 10, chk_sym2_weight},
      {"spectral-identity", tol::kEigenRel, 2, 6, chk_spectral},
      {"mu-bound", tol::kOracleRel, 2, 10, chk_mu_bound},
      {"mu-bound-sharp", tol::kGallery, 2, 10, chk_mu_bound_sharp},
      {"ric-term-self-adjoint", tol::kOracleRel, 2, 8, chk_self_adjoint},
      {"ric-term-linearity", tol::kExact, 2, 10, chk_linearity},
      {"weight-route-consistency", tol::kGallery, 3, 10, chk_weight_route},
      {"gaussian-soliton", tol::kGallery, 3, 10, chk_gaussian_soliton},
      {"weyl-remark-quadratic", 1e-9, 4, 10, chk_weyl_quadratic},
      {"weyl-remark-ricci-pairing", 1e-9, 4, 10, chk_weyl_ricci_pairing},
      {"weyl-remark-sphere-pairing", tol::kGallery, 4, 10, chk_weyl_sphere_pairing},
      {"gallery-validates", tol::kGallery, 3, 10, chk_gallery},
      {"json-roundtrip", 1e-15, 2, 10, chk_json_roundtrip},
  };
  return defs;
}

CheckResult run_def(const CheckDef& def, const SuiteConfig& cfg) {
  Ctx ctx{cfg};
  ctx.stream = fnv1a(def.name);
  ctx.dim_lo = std::clamp(cfg.dim_lo, def.min_dim, def.max_dim);
  ctx.dim_hi = std::clamp(cfg.dim_hi, ctx.dim_lo, def.max_dim);

  const auto start = std::chrono::steady_clock::now();
  def.fn(ctx);
  const auto stop = std::chrono::steady_clock::now();

  CheckResult res;
  res.name = def.name;
  res.trials = ctx.trials;
  res.max_residual = ctx.max_residual;
  res.tolerance = cfg.tol_override > 0.0 ? cfg.tol_override : def.tolerance;
  res.pass = ctx.max_residual <= res.tolerance;
  res.seed = cfg.seed;
  res.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return res;
}

}  // namespace

bool SuiteReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

std::vector<std::string> suite_check_names() {
  std::vector<std::string> names;
  for (const CheckDef& d : registry()) names.push_back(d.name);
  return names;
}

CheckResult run_check(const std::string& name, const SuiteConfig& cfg) {
  for (const CheckDef& d : registry())
    if (name == d.name) return run_def(d, cfg);
  throw UnknownExample("unknown check: " + name);
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  SuiteReport report;
  for (const CheckDef& d : registry()) report.checks.push_back(run_def(d, cfg));
  return report;
}

}  // namespace curvlab
