#include "curvlab/sym_form.hpp"

#include <cmath>

#include "curvlab/error.hpp"

namespace curvlab {

SymForm::SymForm(Space space, std::vector<double> matrix_row_major)
    : space_(space), m_(std::move(matrix_row_major)) {
  const size_t n = static_cast<size_t>(space.dim());
  if (m_.size() != n * n) throw Error("symmetric form needs an n x n matrix");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const double s = 0.5 * (m_[i * n + j] + m_[j * n + i]);
      m_[i * n + j] = s;
      m_[j * n + i] = s;
    }
}

SymForm SymForm::zero(Space space) {
  return SymForm(space, std::vector<double>(static_cast<size_t>(space.dim()) * space.dim(), 0.0));
}

SymForm SymForm::identity(Space space) {
  SymForm h = zero(space);
  const size_t n = static_cast<size_t>(space.dim());
  for (size_t i = 0; i < n; ++i) h.m_[i * n + i] = 1.0;
  return h;
}

double SymForm::trace() const {
  const size_t n = static_cast<size_t>(dim());
  double t = 0.0;
  for (size_t i = 0; i < n; ++i) t += m_[i * n + i];
  return t;
}

SymForm SymForm::trace_free_part() const {
  SymForm out = *this;
  const size_t n = static_cast<size_t>(dim());
  const double mean = trace() / static_cast<double>(n);
  for (size_t i = 0; i < n; ++i) out.m_[i * n + i] -= mean;
  return out;
}

DenseTensor SymForm::to_tensor() const { return DenseTensor(space_, 2, m_); }

SymForm& SymForm::operator+=(const SymForm& o) {
  if (space_ != o.space_) throw Error("dimension mismatch in SymForm +=");
  for (size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
  return *this;
}

SymForm& SymForm::operator-=(const SymForm& o) {
  if (space_ != o.space_) throw Error("dimension mismatch in SymForm -=");
  for (size_t i = 0; i < m_.size(); ++i) m_[i] -= o.m_[i];
  return *this;
}

SymForm& SymForm::operator*=(double c) {
  for (double& v : m_) v *= c;
  return *this;
}

double inner_product(const SymForm& a, const SymForm& b) {
  if (a.space() != b.space()) throw Error("dimension mismatch in SymForm inner_product");
  double acc = 0.0;
  for (size_t i = 0; i < a.matrix().size(); ++i) acc += a.matrix()[i] * b.matrix()[i];
  return acc;
}

double frobenius_norm(const SymForm& a) { return std::sqrt(inner_product(a, a)); }

SkewEndo::SkewEndo(Space space, std::vector<double> matrix_row_major)
    : space_(space), m_(std::move(matrix_row_major)) {
  const size_t n = static_cast<size_t>(space.dim());
  if (m_.size() != n * n) throw Error("skew endomorphism needs an n x n matrix");
  for (size_t i = 0; i < n; ++i) {
    m_[i * n + i] = 0.0;
    for (size_t j = i + 1; j < n; ++j) {
      const double s = 0.5 * (m_[i * n + j] - m_[j * n + i]);
      m_[i * n + j] = s;
      m_[j * n + i] = -s;
    }
  }
}

SkewEndo SkewEndo::zero(Space space) {
  return SkewEndo(space, std::vector<double>(static_cast<size_t>(space.dim()) * space.dim(), 0.0));
}

SkewEndo SkewEndo::coordinate_bivector(Space space, int i, int j) {
  if (i < 0 || j < 0 || i >= space.dim() || j >= space.dim() || i >= j)
    throw Error("coordinate bivector needs 0 <= i < j < n");
  SkewEndo x = zero(space);
  const size_t n = static_cast<size_t>(space.dim());
  // e_i wedge e_j sends e_i -> e_j and e_j -> -e_i.
  x.m_[static_cast<size_t>(j) * n + i] = 1.0;
  x.m_[static_cast<size_t>(i) * n + j] = -1.0;
  return x;
}

SkewEndo& SkewEndo::operator+=(const SkewEndo& o) {
  if (space_ != o.space_) throw Error("dimension mismatch in SkewEndo +=");
  for (size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
  return *this;
}

SkewEndo& SkewEndo::operator*=(double c) {
  for (double& v : m_) v *= c;
  return *this;
}

double bivector_inner(const SkewEndo& a, const SkewEndo& b) {
  if (a.space() != b.space()) throw Error("dimension mismatch in bivector_inner");
  double acc = 0.0;
  for (size_t i = 0; i < a.matrix().size(); ++i) acc += a.matrix()[i] * b.matrix()[i];
  return 0.5 * acc;
}

}  // namespace curvlab
