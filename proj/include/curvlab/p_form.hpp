#pragma once

#include <span>
#include <vector>

#include "curvlab/dense_tensor.hpp"
#include "curvlab/space.hpp"

namespace curvlab {

// Alternating (0,p) form, 0 <= p <= n. Stored both as a dense order-p tensor
// and as the compact vector of components on strictly increasing multi-indices
// (lexicographic order, C(n,p) entries). The dense component at a tuple with a
// repeated index is zero; otherwise it is the compact entry times the sign of
// the sorting permutation. Note the dense squared norm is p! times the compact
// squared norm.
class PForm {
 public:
  // Alternates an arbitrary dense order-p tensor (averaged over all p!
  // permutations with signs).
  PForm(Space space, int degree, const DenseTensor& raw);
  static PForm from_compact(Space space, int degree, std::vector<double> compact);
  // Unit form supported on a single increasing multi-index.
  static PForm basis_form(Space space, std::span<const int> sorted_index);
  static PForm zero(Space space, int degree);
  // Wrap a tensor that is already alternating (no projection applied).
  static PForm wrap_alternating(DenseTensor t);

  Space space() const { return tensor_.space(); }
  int dim() const { return tensor_.dim(); }
  int degree() const { return degree_; }
  const DenseTensor& tensor() const { return tensor_; }
  const std::vector<double>& compact() const { return compact_; }

  // Component at an arbitrary index tuple (sorts and applies the sign).
  double component(std::span<const int> idx) const;

  PForm& operator+=(const PForm& o);
  PForm& operator-=(const PForm& o);
  PForm& operator*=(double c);
  friend PForm operator-(PForm a, const PForm& b) { return a -= b; }
  friend PForm operator*(double c, PForm w) { return w *= c; }

 private:
  PForm(int degree, DenseTensor t, std::vector<double> compact);
  int degree_;
  DenseTensor tensor_;
  std::vector<double> compact_;
};

}  // namespace curvlab
