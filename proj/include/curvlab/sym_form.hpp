#pragma once

#include <vector>

#include "curvlab/dense_tensor.hpp"
#include "curvlab/space.hpp"

namespace curvlab {

// Symmetric bilinear form on R^n. The constructor symmetrizes its input, so
// the stored matrix always satisfies h(i,j) == h(j,i) exactly. Since the basis
// is orthonormal the same matrix also represents the associated self-adjoint
// operator H with h(X,Y) = g(H(X),Y).
class SymForm {
 public:
  SymForm(Space space, std::vector<double> matrix_row_major);
  static SymForm zero(Space space);
  static SymForm identity(Space space);  // the metric g

  Space space() const { return space_; }
  int dim() const { return space_.dim(); }
  double operator()(int i, int j) const { return m_[static_cast<size_t>(i) * dim() + j]; }
  const std::vector<double>& matrix() const { return m_; }

  double trace() const;
  SymForm trace_free_part() const;
  DenseTensor to_tensor() const;

  SymForm& operator+=(const SymForm& o);
  SymForm& operator-=(const SymForm& o);
  SymForm& operator*=(double c);
  friend SymForm operator+(SymForm a, const SymForm& b) { return a += b; }
  friend SymForm operator-(SymForm a, const SymForm& b) { return a -= b; }
  friend SymForm operator*(double c, SymForm h) { return h *= c; }

 private:
  Space space_;
  std::vector<double> m_;
};

double inner_product(const SymForm& a, const SymForm& b);
double frobenius_norm(const SymForm& a);

// Skew-symmetric endomorphism of R^n; the constructor antisymmetrizes.
// Identified with a bivector through (A wedge B)C = g(A,C)B - g(B,C)A, so the
// coordinate bivector e_i wedge e_j has matrix entries M[j][i]=1, M[i][j]=-1.
class SkewEndo {
 public:
  SkewEndo(Space space, std::vector<double> matrix_row_major);
  static SkewEndo zero(Space space);
  // e_i wedge e_j for i < j, unit length for the bivector inner product.
  static SkewEndo coordinate_bivector(Space space, int i, int j);

  Space space() const { return space_; }
  int dim() const { return space_.dim(); }
  double operator()(int i, int j) const { return m_[static_cast<size_t>(i) * dim() + j]; }
  const std::vector<double>& matrix() const { return m_; }

  SkewEndo& operator+=(const SkewEndo& o);
  SkewEndo& operator*=(double c);
  friend SkewEndo operator*(double c, SkewEndo x) { return x *= c; }

 private:
  Space space_;
  std::vector<double> m_;
};

// Bivector inner product; equals half the matrix Frobenius pairing and makes
// the coordinate bivectors orthonormal.
double bivector_inner(const SkewEndo& a, const SkewEndo& b);

}  // namespace curvlab
