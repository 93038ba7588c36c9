#pragma once

#include "curvlab/dense_tensor.hpp"
#include "curvlab/sym_form.hpp"

namespace curvlab {

// (T o tau_ij): swap argument slots i and j. Slots are 1-based here and below,
// matching how the operations are documented.
DenseTensor transpose_slots(const DenseTensor& t, int slot_i, int slot_j);

// c_ij(h (x) T): contract slots i and j of T against the form h, producing an
// order k-2 tensor over the remaining slots in their original order.
DenseTensor contract_with_form(const SymForm& h, const DenseTensor& t, int slot_i, int slot_j);

// Derivation action of an endomorphism on covariant tensors:
//   (L T)(X_1,...,X_k) = -sum_i T(X_1,...,L(X_i),...,X_k).
// `endo` is a general n x n matrix, row-major, endo[b][a] = component b of L(e_a).
DenseTensor endo_action(const DenseTensor& endo, const DenseTensor& t);
DenseTensor endo_action(const SymForm& h, const DenseTensor& t);
DenseTensor endo_action(const SkewEndo& x, const DenseTensor& t);

// Order-2 tensor view of a raw matrix, for callers assembling endomorphisms.
DenseTensor matrix_tensor(Space space, std::vector<double> row_major);

}  // namespace curvlab
