#include "curvlab/tensor_ops.hpp"

#include <vector>

#include "curvlab/error.hpp"

namespace curvlab {

namespace {

void check_slots(const DenseTensor& t, int slot_i, int slot_j) {
  if (slot_i < 1 || slot_j < 1 || slot_i > t.order() || slot_j > t.order() || slot_i == slot_j)
    throw Error("slot indices must be distinct and within 1..order");
}

}  // namespace

DenseTensor transpose_slots(const DenseTensor& t, int slot_i, int slot_j) {
  check_slots(t, slot_i, slot_j);
  const int a = slot_i - 1, b = slot_j - 1;
  DenseTensor out(t.space(), t.order());
  std::vector<int> idx(t.order());
  for (std::int64_t f = 0; f < out.size(); ++f) {
    out.unravel(f, idx);
    std::swap(idx[a], idx[b]);
    out.components()[static_cast<size_t>(f)] = t.at(idx);
  }
  return out;
}

DenseTensor contract_with_form(const SymForm& h, const DenseTensor& t, int slot_i, int slot_j) {
  check_slots(t, slot_i, slot_j);
  if (h.space() != t.space()) throw Error("dimension mismatch in contract_with_form");
  const int lo = std::min(slot_i, slot_j) - 1, hi = std::max(slot_i, slot_j) - 1;
  const int n = t.dim();
  const int k = t.order();
  DenseTensor out(t.space(), k - 2);
  std::vector<int> rest(k - 2), full(k);
  for (std::int64_t f = 0; f < out.size(); ++f) {
    out.unravel(f, rest);
    int m = 0;
    for (int s = 0; s < k; ++s)
      if (s != lo && s != hi) full[s] = rest[m++];
    double acc = 0.0;
    // slot_i carries the first index of h, slot_j the second
    const int ia = slot_i - 1, ib = slot_j - 1;
    for (int a = 0; a < n; ++a) {
      full[ia] = a;
      for (int bb = 0; bb < n; ++bb) {
        full[ib] = bb;
        acc += h(a, bb) * t.at(full);
      }
    }
    out.components()[static_cast<size_t>(f)] = acc;
  }
  return out;
}

DenseTensor endo_action(const DenseTensor& endo, const DenseTensor& t) {
  if (endo.order() != 2) throw Error("endomorphism must be an order-2 tensor");
  if (endo.space() != t.space()) throw Error("dimension mismatch in endo_action");
  const int n = t.dim();
  const int k = t.order();
  DenseTensor out(t.space(), k);
  std::vector<int> idx(k);
  const auto& tv = t.components();
  for (std::int64_t f = 0; f < out.size(); ++f) {
    out.unravel(f, idx);
    double acc = 0.0;
    for (int i = 0; i < k; ++i) {
      const std::int64_t base = f - idx[i] * t.stride(i);
      for (int b = 0; b < n; ++b)
        acc -= endo(b, idx[i]) * tv[static_cast<size_t>(base + b * t.stride(i))];
    }
    out.components()[static_cast<size_t>(f)] = acc;
  }
  return out;
}

DenseTensor endo_action(const SymForm& h, const DenseTensor& t) {
  return endo_action(h.to_tensor(), t);
}

DenseTensor endo_action(const SkewEndo& x, const DenseTensor& t) {
  return endo_action(DenseTensor(x.space(), 2, x.matrix()), t);
}

DenseTensor matrix_tensor(Space space, std::vector<double> row_major) {
  return DenseTensor(space, 2, std::move(row_major));
}

}  // namespace curvlab
