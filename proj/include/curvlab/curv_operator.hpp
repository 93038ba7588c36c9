#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvlab/alg_curv.hpp"
#include "curvlab/sym_form.hpp"
#include "curvlab/tolerances.hpp"

namespace curvlab {

// Ordered basis of coordinate bivectors e_i ^ e_j, i < j, lexicographic.
// These are unit length for the bivector inner product, so the curvature
// operator matrix below is expressed in an orthonormal basis.
std::vector<std::pair<int, int>> bivector_pairs(int n);

// N x N row-major matrix of the curvature operator on bivectors,
// M[(ij),(kl)] = R(e_i,e_j,e_k,e_l), N = n(n-1)/2. The identity curvature I
// maps to the identity matrix.
std::vector<double> curvature_operator_matrix(const AlgCurv& r);

// Full spectral data of the curvature operator. Eigenvalues ascend;
// eigenbivectors are orthonormal and returned as skew endomorphisms.
struct CurvSpectrum {
  std::vector<double> eigenvalues;
  std::vector<SkewEndo> eigenbivectors;
  std::vector<double> partial_sums() const;  // cumulative sums of eigenvalues
};

CurvSpectrum spectrum(const AlgCurv& r);

enum class Verdict { Fails, Nonnegative, Positive };

std::string verdict_name(Verdict v);            // "positive" / "nonnegative" / "fails"
std::string vanishing_verdict_name(Verdict v);  // "vanishing" / "parallel-only" / "fails"

// Outcome of classifying the sum of the l smallest eigenvalues against a
// tolerance band: s > tol positive, |s| <= tol nonnegative, s < -tol fails.
// p, weight_route and strict are filled in by the weighted checks.
struct ConditionReport {
  Verdict verdict = Verdict::Fails;
  double partial_sum = 0.0;
  int l = 0;
  double tolerance = 0.0;
  int p = 0;
  std::string weight_route = "none";
  bool strict = false;

  // Pass condition: strict demands a positive verdict, otherwise nonnegative
  // suffices.
  bool passed() const {
    return strict ? verdict == Verdict::Positive : verdict != Verdict::Fails;
  }
};

ConditionReport partial_sum_verdict(const CurvSpectrum& spec, int l,
                                    double tolerance = tol::kVerdict);

}  // namespace curvlab
