#pragma once

#include "curvlab/dense_tensor.hpp"
#include "curvlab/sym_form.hpp"
#include "curvlab/tolerances.hpp"

namespace curvlab {

// Largest violations of the three curvature identities, with the worst index
// for each. Violations are measured componentwise:
//   pair antisymmetry  T(X,Y,Z,W) + T(Y,X,Z,W)
//   pair exchange      T(X,Y,Z,W) - T(Z,W,X,Y)
//   first Bianchi      T(X,Y,Z,W) + T(Y,Z,X,W) + T(Z,X,Y,W)
struct SymmetryCheck {
  double antisymmetry = 0.0;
  double pair_exchange = 0.0;
  double bianchi = 0.0;
  std::vector<int> worst_antisymmetry, worst_pair_exchange, worst_bianchi;
  double worst() const;
};

SymmetryCheck symmetry_violations(const DenseTensor& t);

// Algebraic curvature tensor: a (0,4) tensor carrying pair antisymmetry, pair
// exchange and the first Bianchi identity. Construct through validate(), which
// checks the identities against tol * max-abs-component and stores the input
// unchanged, or through the arithmetic below, which preserves the identities.
class AlgCurv {
 public:
  static AlgCurv validate(DenseTensor t, double tolerance = tol::kValidateRel);
  static AlgCurv zero(Space space);

  Space space() const { return t_.space(); }
  int dim() const { return t_.dim(); }
  const DenseTensor& tensor() const { return t_; }
  double operator()(int i, int j, int k, int l) const { return t_(i, j, k, l); }

  AlgCurv& operator+=(const AlgCurv& o);
  AlgCurv& operator-=(const AlgCurv& o);
  AlgCurv& operator*=(double c);
  friend AlgCurv operator+(AlgCurv a, const AlgCurv& b) { return a += b; }
  friend AlgCurv operator-(AlgCurv a, const AlgCurv& b) { return a -= b; }
  friend AlgCurv operator*(double c, AlgCurv r) { return r *= c; }

 private:
  explicit AlgCurv(DenseTensor t) : t_(std::move(t)) {}
  DenseTensor t_;
};

// Kulkarni-Nomizu product of symmetric forms:
//   (S1 ^ S2)(X,Y,Z,W) = S1(X,Z)S2(Y,W) - S1(X,W)S2(Y,Z)
//                      + S1(Y,W)S2(X,Z) - S1(Y,Z)S2(X,W).
// Always an algebraic curvature tensor.
AlgCurv kulkarni_nomizu(const SymForm& s1, const SymForm& s2);

// I = (1/2) g ^ g, the curvature tensor of the unit sphere; all curvature
// operator eigenvalues equal 1.
AlgCurv unit_sphere_curvature(Space space);

// Ricci contraction ricci(R)(X,Z) = sum_a R(X,e_a,Z,e_a) and its trace.
SymForm ricci(const AlgCurv& r);
double scalar_curvature(const AlgCurv& r);

// Orthogonal splitting R = scal/(2(n-1)n) g^g + 1/(n-2) ric0^g + weyl,
// where ric0 is the trace-free Ricci part and the Weyl part has vanishing
// Ricci contraction. Requires n >= 3.
struct CurvDecomposition {
  double scal;
  SymForm ric0;
  AlgCurv weyl;
};

CurvDecomposition decompose(const AlgCurv& r);

// Project an arbitrary (0,4) tensor onto the curvature symmetry type:
// antisymmetrize both pairs, symmetrize the pair exchange, remove the
// totally antisymmetric (Bianchi-violating) part.
AlgCurv curvature_projection(const DenseTensor& raw);

}  // namespace curvlab
