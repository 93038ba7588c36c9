#include "curvlab/dense_tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace curvlab {

namespace {

std::vector<std::int64_t> make_strides(int n, int order) {
  std::vector<std::int64_t> s(order);
  std::int64_t acc = 1;
  for (int m = order - 1; m >= 0; --m) {
    s[m] = acc;
    acc *= n;
  }
  return s;
}

std::int64_t total_size(int n, int order) {
  std::int64_t acc = 1;
  for (int m = 0; m < order; ++m) {
    acc *= n;
    if (acc > (std::int64_t{1} << 27))
      throw Error("tensor too large: n^k exceeds the supported size");
  }
  return acc;
}

}  // namespace

DenseTensor::DenseTensor(Space space, int order)
    : space_(space), order_(order), strides_(make_strides(space.dim(), order)) {
  if (order < 0) throw Error("tensor order must be nonnegative");
  data_.assign(static_cast<size_t>(total_size(space.dim(), order)), 0.0);
}

DenseTensor::DenseTensor(Space space, int order, std::vector<double> components)
    : space_(space), order_(order), strides_(make_strides(space.dim(), order)) {
  if (order < 0) throw Error("tensor order must be nonnegative");
  if (static_cast<std::int64_t>(components.size()) != total_size(space.dim(), order))
    throw Error("component count does not match dim^order");
  data_ = std::move(components);
}

std::int64_t DenseTensor::offset(std::span<const int> idx) const {
  std::int64_t f = 0;
  for (int m = 0; m < order_; ++m) f += strides_[m] * idx[m];
  return f;
}

void DenseTensor::unravel(std::int64_t flat, std::span<int> idx) const {
  const int n = dim();
  for (int m = order_ - 1; m >= 0; --m) {
    idx[m] = static_cast<int>(flat % n);
    flat /= n;
  }
}

DenseTensor& DenseTensor::operator+=(const DenseTensor& o) {
  if (space_ != o.space_ || order_ != o.order_) throw Error("tensor shape mismatch in +=");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

DenseTensor& DenseTensor::operator-=(const DenseTensor& o) {
  if (space_ != o.space_ || order_ != o.order_) throw Error("tensor shape mismatch in -=");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

DenseTensor& DenseTensor::operator*=(double c) {
  for (double& v : data_) v *= c;
  return *this;
}

bool DenseTensor::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

double inner_product(const DenseTensor& a, const DenseTensor& b) {
  if (a.space() != b.space() || a.order() != b.order())
    throw Error("tensor shape mismatch in inner_product");
  double acc = 0.0;
  const auto& x = a.components();
  const auto& y = b.components();
  for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

double frobenius_norm(const DenseTensor& a) { return std::sqrt(inner_product(a, a)); }

double max_abs(const DenseTensor& a) {
  double m = 0.0;
  for (double v : a.components()) m = std::max(m, std::abs(v));
  return m;
}

DenseTensor metric_tensor(Space space) {
  DenseTensor g(space, 2);
  for (int i = 0; i < space.dim(); ++i) g(i, i) = 1.0;
  return g;
}

}  // namespace curvlab
