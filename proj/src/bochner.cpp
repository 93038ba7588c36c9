#include "curvlab/bochner.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "curvlab/error.hpp"
#include "curvlab/multi_index.hpp"
#include "curvlab/tensor_ops.hpp"

namespace curvlab {

namespace {

void require_same_space(Space a, Space b, const char* what) {
  if (a != b) throw Error(std::string("dimension mismatch in ") + what);
}

std::vector<double> mat_mul(int n, const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> c(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double aik = a[static_cast<size_t>(i) * n + k];
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j)
        c[static_cast<size_t>(i) * n + j] += aik * b[static_cast<size_t>(k) * n + j];
    }
  return c;
}

}  // namespace

DenseTensor ric_term_bruteforce(const AlgCurv& r, const DenseTensor& t) {
  require_same_space(r.space(), t.space(), "ric_term_bruteforce");
  const int k = t.order();
  if (k < 1) throw Error("curvature term needs a tensor of order at least 1");
  const int n = t.dim();
  const double* Rv = r.tensor().components().data();
  const auto& tv = t.components();
  const std::int64_t n3 = static_cast<std::int64_t>(n) * n * n;
  const std::int64_t n2 = static_cast<std::int64_t>(n) * n;

  DenseTensor out(t.space(), k);
  std::vector<int> idx(k);
  for (std::int64_t f = 0; f < out.size(); ++f) {
    out.unravel(f, idx);
    double acc = 0.0;
    for (int i = 0; i < k; ++i) {
      const int xi = idx[i];
      const std::int64_t fy_base = f - xi * t.stride(i);
      for (int a = 0; a < n; ++a) {
        const std::int64_t fy = fy_base + a * t.stride(i);
        // R(X_i, e_a) acts as a derivation on T evaluated at (..., e_a, ...)
        for (int m = 0; m < k; ++m) {
          const int ym = (m == i) ? a : idx[m];
          const std::int64_t fz_base = fy - ym * t.stride(m);
          const std::int64_t roff = xi * n3 + a * n2 + ym * static_cast<std::int64_t>(n);
          for (int w = 0; w < n; ++w)
            acc -= Rv[static_cast<size_t>(roff + w)] *
                   tv[static_cast<size_t>(fz_base + w * t.stride(m))];
        }
      }
    }
    out.components()[static_cast<size_t>(f)] = acc;
  }
  return out;
}

PForm ric_term_bruteforce(const AlgCurv& r, const PForm& omega) {
  require_same_space(r.space(), omega.space(), "ric_term_bruteforce");
  const int p = omega.degree();
  if (p < 1) throw Error("curvature term needs a form of degree at least 1");
  const int n = omega.dim();
  const double* Rv = r.tensor().components().data();
  const std::int64_t n3 = static_cast<std::int64_t>(n) * n * n;
  const std::int64_t n2 = static_cast<std::int64_t>(n) * n;

  // The curvature term preserves alternation, so only increasing output
  // tuples are evaluated; lookups go through the compact representation.
  std::vector<double> compact(static_cast<size_t>(binomial(n, p)), 0.0);
  std::vector<int> y(p), z(p);
  std::int64_t rank = 0;
  for_each_sorted_tuple(n, p, [&](std::span<const int> t) {
    double acc = 0.0;
    for (int i = 0; i < p; ++i) {
      const int xi = t[i];
      for (int a = 0; a < n; ++a) {
        for (int m = 0; m < p; ++m) y[m] = (m == i) ? a : t[m];
        for (int m = 0; m < p; ++m) {
          const int ym = y[m];
          const std::int64_t roff = xi * n3 + a * n2 + ym * static_cast<std::int64_t>(n);
          std::copy(y.begin(), y.end(), z.begin());
          for (int w = 0; w < n; ++w) {
            z[m] = w;
            acc -= Rv[static_cast<size_t>(roff + w)] * omega.component(z);
          }
        }
      }
    }
    compact[static_cast<size_t>(rank++)] = acc;
  });
  return PForm::from_compact(omega.space(), p, std::move(compact));
}

DenseTensor hg_transposition_sum(const SymForm& h, const DenseTensor& t) {
  require_same_space(h.space(), t.space(), "hg_transposition_sum");
  const int k = t.order();
  const int n = t.dim();
  DenseTensor out(t.space(), k);
  if (k < 2) return out;  // needs two distinct slots
  const auto& tv = t.components();
  std::vector<int> idx(k);
  for (std::int64_t f = 0; f < out.size(); ++f) {
    out.unravel(f, idx);
    double acc = 0.0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        // (T o tau_ij)(..., H(X_i) at slot i, ...) = sum_b h(b, x_i) T[x: i -> x_j, j -> b]
        const std::int64_t base =
            f + (idx[j] - idx[i]) * t.stride(i) - idx[j] * t.stride(j);
        for (int b = 0; b < n; ++b)
          acc += h(b, idx[i]) * tv[static_cast<size_t>(base + b * t.stride(j))];
      }
    out.components()[static_cast<size_t>(f)] = acc;
  }
  return out;
}

DenseTensor ric_term_hg_general(const SymForm& h, const DenseTensor& t) {
  require_same_space(h.space(), t.space(), "ric_term_hg_general");
  const int k = t.order();
  if (k < 1) throw Error("curvature term needs a tensor of order at least 1");
  const int n = t.dim();
  const SymForm g = SymForm::identity(h.space());

  DenseTensor out = hg_transposition_sum(h, t);
  out *= 2.0;

  // metric / weight contraction terms, one precontraction per slot pair
  std::vector<int> idx(k), rest(k - 2 >= 0 ? k - 2 : 0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const DenseTensor ch = contract_with_form(h, t, i + 1, j + 1);
      const DenseTensor cg = contract_with_form(g, t, i + 1, j + 1);
      for (std::int64_t f = 0; f < out.size(); ++f) {
        out.unravel(f, idx);
        int m = 0;
        for (int s = 0; s < k; ++s)
          if (s != i && s != j) rest[m++] = idx[s];
        double dec = 0.0;
        if (idx[i] == idx[j]) dec += ch.at(rest);
        dec += h(idx[i], idx[j]) * cg.at(rest);
        // ordered pairs (i,j) and (j,i) contribute equally
        out.components()[static_cast<size_t>(f)] -= 2.0 * dec;
      }
    }

  out += -(double)(n - 2) * endo_action(h, t);
  DenseTensor scaled = t;
  scaled *= static_cast<double>(k) * h.trace();
  out += scaled;
  return out;
}

SymForm ric_term_hg_sym2(const SymForm& h, const SymForm& t) {
  require_same_space(h.space(), t.space(), "ric_term_hg_sym2");
  const int n = h.dim();
  const auto& H = h.matrix();
  const auto& T = t.matrix();
  const std::vector<double> HT = mat_mul(n, H, T);
  const std::vector<double> TH = mat_mul(n, T, H);
  const double ht = inner_product(h, t);
  const double trT = t.trace();
  const double trH = h.trace();
  std::vector<double> m(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const size_t q = static_cast<size_t>(i) * n + j;
      // -n (HT) with (HT) the derivation action -(HT + TH)
      m[q] = n * (HT[q] + TH[q]) - 2.0 * trT * H[q] + 2.0 * trH * T[q];
      if (i == j) m[q] -= 2.0 * ht;
    }
  return SymForm(h.space(), std::move(m));
}

double ric_term_hg_sym2_quadratic(const SymForm& h, const SymForm& t) {
  require_same_space(h.space(), t.space(), "ric_term_hg_sym2_quadratic");
  const int n = h.dim();
  const std::vector<double> HT = mat_mul(n, h.matrix(), t.matrix());
  const std::vector<double> TH = mat_mul(n, t.matrix(), h.matrix());
  double ht_t = 0.0;  // <(HT) derivation, T> = -<HT + TH, T>
  for (size_t q = 0; q < HT.size(); ++q) ht_t -= (HT[q] + TH[q]) * t.matrix()[q];
  const double ht = inner_product(h, t);
  const double tt = inner_product(t, t);
  return -n * ht_t - 4.0 * t.trace() * ht + 2.0 * h.trace() * tt;
}

PForm ric_term_hg_pform(const SymForm& h, const PForm& omega) {
  require_same_space(h.space(), omega.space(), "ric_term_hg_pform");
  const int p = omega.degree();
  if (p < 1) throw Error("curvature term needs a form of degree at least 1");
  const int n = omega.dim();
  DenseTensor dense = endo_action(h, omega.tensor());
  dense *= -(double)(n - 2 * p);
  DenseTensor scaled = omega.tensor();
  scaled *= static_cast<double>(p) * h.trace();
  dense += scaled;
  return PForm::wrap_alternating(std::move(dense));
}

DenseTensor ric_term_hg_curv(const SymForm& h, const AlgCurv& r) {
  require_same_space(h.space(), r.space(), "ric_term_hg_curv");
  const int n = r.dim();
  const SymForm g = SymForm::identity(h.space());
  const SymForm ric = ricci(r);
  // c24(h (x) R)(X,Z) = sum_{a,b} h(a,b) R(X,e_a,Z,e_b), symmetric in X,Z
  const DenseTensor c24 = contract_with_form(h, r.tensor(), 2, 4);
  const SymForm c24_form(r.space(), c24.components());

  DenseTensor out = kulkarni_nomizu(h, ric).tensor();
  out *= -2.0;
  DenseTensor part = kulkarni_nomizu(g, c24_form).tensor();
  part *= -2.0;
  out += part;
  out += -(double)(n - 2) * endo_action(h, r.tensor());
  DenseTensor scaled = r.tensor();
  scaled *= 4.0 * h.trace();
  out += scaled;
  return out;
}

WeightSpec::WeightSpec(SymForm hess, double laplacian, int p_)
    : hess_f(std::move(hess)), laplacian_f(laplacian), p(p_) {
  const int n = hess_f.dim();
  if (p < 1 || 2 * p > n)
    throw DegreeOutOfRange("weight degree must satisfy 1 <= p <= n/2");
  const double tr = hess_f.trace();
  if (std::abs(laplacian_f - tr) > 1e-9 * std::max(1.0, std::abs(tr)))
    throw Error("laplacian_f disagrees with the trace of hess_f beyond 1e-9 relative");
}

WeightSpec WeightSpec::with_traced_laplacian(SymForm hess, int p) {
  const double tr = hess.trace();
  return WeightSpec(std::move(hess), tr, p);
}

MuList::MuList(std::vector<double> ascending) : mu(std::move(ascending)) {
  if (mu.empty()) throw Error("mu list must be nonempty");
  for (size_t i = 1; i < mu.size(); ++i)
    if (mu[i - 1] > mu[i]) throw Error("mu list must ascend");
}

MuList MuList::from_sym(const SymForm& s) {
  const int n = s.dim();
  Eigen::MatrixXd M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = s(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M);
  if (solver.info() != Eigen::Success) throw Error("symmetric eigensolver failed to converge");
  return MuList(std::vector<double>(solver.eigenvalues().data(), solver.eigenvalues().data() + n));
}

double MuList::smallest_sum(int p) const {
  if (p < 1 || p > static_cast<int>(mu.size()))
    throw DegreeOutOfRange("mu partial sum length out of range");
  double s = 0.0;
  for (int i = 0; i < p; ++i) s += mu[static_cast<size_t>(i)];
  return s;
}

SymForm weight_theorem(const WeightSpec& ws) {
  const int n = ws.hess_f.dim();
  const int p = ws.p;
  if (n == 2 * p)
    throw MiddleDegree(
        "the Hessian weight is undefined at middle degree n = 2p; use the eigenvalue-sum route");
  SymForm h = ws.hess_f;
  h *= 1.0 / (n - 2 * p);
  SymForm shift = SymForm::identity(ws.hess_f.space());
  shift *= ws.laplacian_f / (2.0 * (n - p) * (n - 2 * p));
  h -= shift;
  return h;
}

AlgCurv weighted_curvature_theorem(const AlgCurv& r, const WeightSpec& ws) {
  require_same_space(r.space(), ws.hess_f.space(), "weighted_curvature_theorem");
  const SymForm h = weight_theorem(ws);
  return r + kulkarni_nomizu(h, SymForm::identity(r.space()));
}

AlgCurv weight_proposition(const AlgCurv& r, const MuList& mu, int p) {
  const int n = r.dim();
  if (static_cast<int>(mu.mu.size()) != n)
    throw Error("mu list length must equal the dimension");
  if (p < 1 || 2 * p > n)
    throw DegreeOutOfRange("weight degree must satisfy 1 <= p <= n/2");
  const double coeff = mu.smallest_sum(p) / (2.0 * p * (n - p));
  const SymForm g = SymForm::identity(r.space());
  return r + coeff * kulkarni_nomizu(g, g);
}

namespace {

ConditionReport classified(const AlgCurv& weighted, int p, const char* route, bool strict,
                           double tolerance) {
  const CurvSpectrum spec = spectrum(weighted);
  ConditionReport rep = partial_sum_verdict(spec, weighted.dim() - p, tolerance);
  rep.p = p;
  rep.weight_route = route;
  rep.strict = strict;
  return rep;
}

}  // namespace

ConditionReport check_vanishing(const AlgCurv& r, const WeightSpec& ws, bool strict,
                                double tolerance) {
  return classified(weighted_curvature_theorem(r, ws), ws.p, "hessian", strict, tolerance);
}

ConditionReport check_vanishing(const AlgCurv& r, const MuList& mu, int p, bool strict,
                                double tolerance) {
  return classified(weight_proposition(r, mu, p), p, "mu", strict, tolerance);
}

double IdentityPair::residual() const { return std::abs(lhs - rhs) / (1.0 + std::abs(rhs)); }

IdentityPair identity_form_weight(const SymForm& s, const PForm& omega) {
  require_same_space(s.space(), omega.space(), "identity_form_weight");
  const int n = s.dim();
  const int p = omega.degree();
  if (p < 1) throw DegreeOutOfRange("identity_form_weight needs degree p >= 1");
  if (2 * p == n)
    throw MiddleDegree("identity_form_weight is undefined at middle degree n = 2p");
  if (2 * p > n) throw DegreeOutOfRange("identity_form_weight needs p < n/2");
  SymForm h = s;
  h *= 1.0 / (n - 2 * p);
  SymForm shift = SymForm::identity(s.space());
  shift *= s.trace() / (2.0 * (n - p) * (n - 2 * p));
  h -= shift;
  IdentityPair out;
  out.lhs = inner_product(ric_term_hg_pform(h, omega).tensor(), omega.tensor());
  out.rhs = -inner_product(endo_action(s, omega.tensor()), omega.tensor());
  return out;
}

IdentityPair identity_sym2_weight(const SymForm& s, const SymForm& t) {
  require_same_space(s.space(), t.space(), "identity_sym2_weight");
  const int n = s.dim();
  if (std::abs(t.trace()) > 1e-10 * std::max(1.0, frobenius_norm(t)))
    throw NotTraceFree("identity_sym2_weight needs a trace-free symmetric tensor");
  SymForm h = s;
  h *= 1.0 / n;
  SymForm shift = SymForm::identity(s.space());
  shift *= s.trace() / (2.0 * n * n);
  h -= shift;
  IdentityPair out;
  out.lhs = ric_term_hg_sym2_quadratic(h, t);
  // -<S T, T> with S acting as a derivation, i.e. +<ST + TS, T>
  const std::vector<double> ST = mat_mul(n, s.matrix(), t.matrix());
  const std::vector<double> TS = mat_mul(n, t.matrix(), s.matrix());
  double acc = 0.0;
  for (size_t q = 0; q < ST.size(); ++q) acc += (ST[q] + TS[q]) * t.matrix()[q];
  out.rhs = acc;
  return out;
}

IdentityPair spectral_weitzenboeck(const AlgCurv& r, const PForm& omega) {
  require_same_space(r.space(), omega.space(), "spectral_weitzenboeck");
  IdentityPair out;
  out.lhs = inner_product(ric_term_bruteforce(r, omega).tensor(), omega.tensor());
  const CurvSpectrum spec = spectrum(r);
  double acc = 0.0;
  for (size_t a = 0; a < spec.eigenvalues.size(); ++a) {
    const DenseTensor xw = endo_action(spec.eigenbivectors[a], omega.tensor());
    acc += spec.eigenvalues[a] * inner_product(xw, xw);
  }
  out.rhs = acc;
  return out;
}

IdentityPair mu_bound_check(const SymForm& s, const PForm& omega) {
  require_same_space(s.space(), omega.space(), "mu_bound_check");
  const int p = omega.degree();
  if (p < 1) throw DegreeOutOfRange("mu_bound_check needs degree p >= 1");
  IdentityPair out;
  out.lhs = -inner_product(endo_action(s, omega.tensor()), omega.tensor());
  const MuList mu = MuList::from_sym(s);
  out.rhs = mu.smallest_sum(p) * inner_product(omega.tensor(), omega.tensor());
  return out;
}

WeylRemarkResiduals weyl_remark_check(const SymForm& h, const AlgCurv& w, const AlgCurv& aux) {
  require_same_space(h.space(), w.space(), "weyl_remark_check");
  require_same_space(h.space(), aux.space(), "weyl_remark_check");
  const int n = w.dim();
  const double wnorm = frobenius_norm(w.tensor());
  if (frobenius_norm(ricci(w)) > 1e-9 * std::max(1.0, wnorm))
    throw NotWeyl("weyl_remark_check needs a tensor with vanishing Ricci contraction");

  const SymForm g = SymForm::identity(h.space());
  const DenseTensor rt = ric_term_hg_curv(h, w);

  WeylRemarkResiduals out;
  const double q_lhs = inner_product(rt, w.tensor());
  const double q_rhs = -(double)(n - 2) * inner_product(endo_action(h, w.tensor()), w.tensor()) +
                       4.0 * h.trace() * inner_product(w.tensor(), w.tensor());
  out.quadratic = std::abs(q_lhs - q_rhs) / (1.0 + std::abs(q_rhs));

  // Ric_{h^g}(W) is Ricci-free, so it pairs to zero with g ^ (anything
  // symmetric); measured against the product of norms.
  const SymForm aux_ric0 = ricci(aux).trace_free_part();
  const DenseTensor g_ric0 = kulkarni_nomizu(g, aux_ric0).tensor();
  const double pairing = inner_product(rt, g_ric0);
  out.ricci_pairing =
      std::abs(pairing) / (1.0 + frobenius_norm(rt) * frobenius_norm(g_ric0));

  out.sphere_pairing = std::abs(inner_product(rt, kulkarni_nomizu(g, g).tensor()));
  return out;
}

}  // namespace curvlab
