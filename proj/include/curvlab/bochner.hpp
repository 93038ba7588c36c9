#pragma once

#include <vector>

#include "curvlab/alg_curv.hpp"
#include "curvlab/curv_operator.hpp"
#include "curvlab/p_form.hpp"
#include "curvlab/sym_form.hpp"
#include "curvlab/tolerances.hpp"

namespace curvlab {

// Curvature term of the Weitzenboeck machinery, straight from the definition:
//   Ric(T)(X_1,...,X_k) = sum_i sum_a (R(X_i,e_a) T)(X_1,...,e_a,...,X_k)
// with e_a substituted in slot i and R(X,Y) acting as a derivation. This is
// the reference implementation every closed form is measured against.
DenseTensor ric_term_bruteforce(const AlgCurv& r, const DenseTensor& t);

// Same contraction evaluated only on increasing multi-indices; the result of
// the curvature term on an alternating form is again alternating.
PForm ric_term_bruteforce(const AlgCurv& r, const PForm& omega);

// Closed form of the curvature term for R = h ^ g on any (0,k) tensor:
//   2 sum_{i != j} (T o tau_ij)(X_1,...,H(X_i),...,X_k)
//   - sum_{i != j} g(X_i,X_j) c_ij(h (x) T)
//   - sum_{i != j} h(X_i,X_j) c_ij(g (x) T)
//   - (n-2) (H T) + k tr(h) T,
// with H T the derivation action.
DenseTensor ric_term_hg_general(const SymForm& h, const DenseTensor& t);

// The transposition sum above without its factor 2; it vanishes identically
// when T carries the curvature symmetries.
DenseTensor hg_transposition_sum(const SymForm& h, const DenseTensor& t);

// Specializations of the closed form.
// Symmetric 2-tensors: -n(HT) - 2<T,h>g - 2tr(T)h + 2tr(h)T.
SymForm ric_term_hg_sym2(const SymForm& h, const SymForm& t);
// Its quadratic form -n<HT,T> - 4tr(T)<T,h> + 2tr(h)|T|^2.
double ric_term_hg_sym2_quadratic(const SymForm& h, const SymForm& t);
// p-forms: -(n-2p)(H omega) + p tr(h) omega.
PForm ric_term_hg_pform(const SymForm& h, const PForm& omega);
// Curvature tensors: -2(h ^ ric(R)) - 2(g ^ c24(h (x) R)) - (n-2)(H R) + 4tr(h)R.
DenseTensor ric_term_hg_curv(const SymForm& h, const AlgCurv& r);

// Weight data for a metric measure structure: Hessian of the potential, its
// Laplacian (= trace, checked on construction), and the form degree p.
// Requires 1 <= p and 2p <= n.
struct WeightSpec {
  WeightSpec(SymForm hess, double laplacian, int p);
  static WeightSpec with_traced_laplacian(SymForm hess, int p);

  SymForm hess_f;
  double laplacian_f;
  int p;
};

// Eigenvalues of a symmetric operator, ascending.
struct MuList {
  explicit MuList(std::vector<double> ascending);
  static MuList from_sym(const SymForm& s);
  double smallest_sum(int p) const;  // sum of the p smallest entries

  std::vector<double> mu;
};

// Weight attached to the degree-p condition on forms:
//   h = Hess f / (n-2p) - (Laplacian f) g / (2(n-p)(n-2p)).
// Undefined at middle degree n = 2p (throws MiddleDegree).
SymForm weight_theorem(const WeightSpec& ws);

// R + (weight) ^ g, the tensor whose operator spectrum drives the vanishing
// condition for p-forms.
AlgCurv weighted_curvature_theorem(const AlgCurv& r, const WeightSpec& ws);

// Eigenvalue-sum weight: R + (mu_1 + ... + mu_p)/(2p(n-p)) g ^ g,
// defined for 1 <= p <= n/2.
AlgCurv weight_proposition(const AlgCurv& r, const MuList& mu, int p);

// Weighted vanishing check: build the weighted tensor via the requested
// route, take the operator spectrum, classify the sum of the l = n-p smallest
// eigenvalues. Verdict reads: positive -> "vanishing", nonnegative ->
// "parallel-only", fails -> "fails".
ConditionReport check_vanishing(const AlgCurv& r, const WeightSpec& ws, bool strict = false,
                                double tolerance = tol::kVerdict);
ConditionReport check_vanishing(const AlgCurv& r, const MuList& mu, int p, bool strict = false,
                                double tolerance = tol::kVerdict);

struct IdentityPair {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual() const;  // |lhs - rhs| / (1 + |rhs|)
};

// With h built from S by the degree-p weight, the curvature term of h ^ g on a
// p-form collapses to the plain operator action:
//   <Ric_{h^g}(omega), omega> = -<S omega, omega>   (derivation action of S).
// Returns (lhs, rhs). Degree taken from omega; requires 1 <= p < n/2.
IdentityPair identity_form_weight(const SymForm& s, const PForm& omega);

// Trace-free symmetric analogue with H = S/n - tr(S)/(2n^2) g:
//   quadratic form of Ric_{h^g} on T equals -<S T, T>. T must be trace-free.
IdentityPair identity_sym2_weight(const SymForm& s, const SymForm& t);

// Curvature term evaluated two ways: directly from the definition, and as
// sum_alpha lambda_alpha |Xi_alpha omega|^2 over the operator eigenbasis.
// The two agree identically with this library's bivector conventions.
IdentityPair spectral_weitzenboeck(const AlgCurv& r, const PForm& omega);

// Lower bound by the p smallest eigenvalues of S:
//   -<S omega, omega> >= (mu_1 + ... + mu_p) |omega|^2.
// Returns lhs and the bound; equality holds when omega concentrates on the
// span of the p smallest eigendirections.
IdentityPair mu_bound_check(const SymForm& s, const PForm& omega);

// How the weighted curvature term of a Weyl tensor pairs against the pieces
// of the orthogonal decomposition. W must have vanishing Ricci contraction
// (NotWeyl otherwise). Residuals, all scaled relative:
//   quadratic     <Ric_{h^g}(W), W> = -(n-2)<HW,W> + 4tr(h)|W|^2
//   ricci_pairing <Ric_{h^g}(W), g ^ ric0(aux)> = 0
//   sphere_pairing<Ric_{h^g}(W), g ^ g> = 0
// The pairings vanish because Ric_{h^g}(W) is itself Ricci-free; any sign or
// coefficient error in the closed form breaks the cancellation.
struct WeylRemarkResiduals {
  double quadratic = 0.0;
  double ricci_pairing = 0.0;
  double sphere_pairing = 0.0;  // absolute, not scaled
};

WeylRemarkResiduals weyl_remark_check(const SymForm& h, const AlgCurv& w, const AlgCurv& aux);

}  // namespace curvlab
