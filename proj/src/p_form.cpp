#include "curvlab/p_form.hpp"

#include <algorithm>
#include <vector>

#include "curvlab/error.hpp"
#include "curvlab/multi_index.hpp"

namespace curvlab {

namespace {

// Expand compact components on increasing multi-indices to the dense tensor:
// sort each index tuple, apply the permutation sign, zero on repeats.
DenseTensor expand_dense(Space space, int p, const std::vector<double>& compact) {
  const int n = space.dim();
  DenseTensor out(space, p);
  std::vector<int> idx(p), tmp(p);
  auto& data = out.components();
  for (std::int64_t f = 0; f < out.size(); ++f) {
    out.unravel(f, idx);
    std::copy(idx.begin(), idx.end(), tmp.begin());
    const int sign = sort_with_sign(tmp);
    if (sign != 0) data[static_cast<size_t>(f)] = sign * compact[sorted_tuple_rank(n, tmp)];
  }
  return out;
}

std::vector<double> read_compact(const DenseTensor& t, int p) {
  std::vector<double> compact(static_cast<size_t>(binomial(t.dim(), p)));
  std::int64_t r = 0;
  for_each_sorted_tuple(t.dim(), p, [&](std::span<const int> s) { compact[r++] = t.at(s); });
  return compact;
}

}  // namespace

PForm::PForm(int degree, DenseTensor t, std::vector<double> compact)
    : degree_(degree), tensor_(std::move(t)), compact_(std::move(compact)) {}

PForm::PForm(Space space, int degree, const DenseTensor& raw)
    : degree_(degree), tensor_(space, degree) {
  if (degree < 0 || degree > space.dim())
    throw DegreeOutOfRange("form degree must satisfy 0 <= p <= n");
  if (raw.space() != space || raw.order() != degree)
    throw Error("raw tensor shape does not match the requested form");
  // Alternate on each increasing multi-index (1/p! times the signed sum over
  // permutations of the slots), then expand by sign. This is the full
  // antisymmetrization but costs C(n,p) p! instead of n^p p!.
  const int n = space.dim();
  compact_.assign(static_cast<size_t>(binomial(n, degree)), 0.0);
  std::vector<int> pos(degree), perm(degree);
  double factorial = 1.0;
  for (int m = 2; m <= degree; ++m) factorial *= m;
  std::int64_t r = 0;
  for_each_sorted_tuple(n, degree, [&](std::span<const int> s) {
    for (int m = 0; m < degree; ++m) pos[m] = m;
    double acc = 0.0;
    do {
      int inv = 0;
      for (int a = 0; a < degree; ++a)
        for (int b = a + 1; b < degree; ++b)
          if (pos[a] > pos[b]) ++inv;
      for (int m = 0; m < degree; ++m) perm[m] = s[pos[m]];
      const double v = raw.at(perm);
      acc += (inv % 2 == 0 ? v : -v);
    } while (std::next_permutation(pos.begin(), pos.end()));
    compact_[static_cast<size_t>(r++)] = acc / factorial;
  });
  tensor_ = expand_dense(space, degree, compact_);
}

PForm PForm::from_compact(Space space, int degree, std::vector<double> compact) {
  if (degree < 0 || degree > space.dim())
    throw DegreeOutOfRange("form degree must satisfy 0 <= p <= n");
  if (static_cast<std::int64_t>(compact.size()) != binomial(space.dim(), degree))
    throw Error("compact component count must be C(n,p)");
  DenseTensor dense = expand_dense(space, degree, compact);
  return PForm(degree, std::move(dense), std::move(compact));
}

PForm PForm::basis_form(Space space, std::span<const int> sorted_index) {
  const int p = static_cast<int>(sorted_index.size());
  for (int m = 1; m < p; ++m)
    if (sorted_index[m - 1] >= sorted_index[m]) throw Error("basis_form index must increase");
  if (p > 0 && (sorted_index[0] < 0 || sorted_index[p - 1] >= space.dim()))
    throw Error("basis_form index out of range");
  std::vector<double> compact(static_cast<size_t>(binomial(space.dim(), p)), 0.0);
  compact[static_cast<size_t>(sorted_tuple_rank(space.dim(), sorted_index))] = 1.0;
  return from_compact(space, p, std::move(compact));
}

PForm PForm::zero(Space space, int degree) {
  return from_compact(space, degree,
                      std::vector<double>(static_cast<size_t>(binomial(space.dim(), degree)), 0.0));
}

PForm PForm::wrap_alternating(DenseTensor t) {
  const int p = t.order();
  std::vector<double> compact = read_compact(t, p);
  return PForm(p, std::move(t), std::move(compact));
}

double PForm::component(std::span<const int> idx) const {
  thread_local std::vector<int> tmp;
  tmp.assign(idx.begin(), idx.end());
  const int sign = sort_with_sign(tmp);
  if (sign == 0) return 0.0;
  return sign * compact_[static_cast<size_t>(sorted_tuple_rank(dim(), tmp))];
}

PForm& PForm::operator+=(const PForm& o) {
  if (space() != o.space() || degree_ != o.degree_) throw Error("form shape mismatch in +=");
  tensor_ += o.tensor_;
  for (size_t i = 0; i < compact_.size(); ++i) compact_[i] += o.compact_[i];
  return *this;
}

PForm& PForm::operator-=(const PForm& o) {
  if (space() != o.space() || degree_ != o.degree_) throw Error("form shape mismatch in -=");
  tensor_ -= o.tensor_;
  for (size_t i = 0; i < compact_.size(); ++i) compact_[i] -= o.compact_[i];
  return *this;
}

PForm& PForm::operator*=(double c) {
  tensor_ *= c;
  for (double& v : compact_) v *= c;
  return *this;
}

}  // namespace curvlab
