#pragma once

#include "curvlab/error.hpp"

namespace curvlab {

// A Euclidean model space: R^n with the standard orthonormal basis, so the
// metric is the identity matrix and index raising/lowering is free.
class Space {
 public:
  explicit Space(int n) : n_(n) {
    if (n < 2) throw DimensionTooSmall("space dimension must be at least 2");
  }
  int dim() const { return n_; }
  friend bool operator==(Space a, Space b) { return a.n_ == b.n_; }
  friend bool operator!=(Space a, Space b) { return a.n_ != b.n_; }

 private:
  int n_;
};

}  // namespace curvlab
