#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "curvlab/space.hpp"

namespace curvlab {

// Dense (0,k) tensor over R^n: n^k doubles in row-major order, the first slot
// slowest. Indices are 0-based in code; operation docs count slots from 1.
class DenseTensor {
 public:
  DenseTensor(Space space, int order);  // zero-filled
  DenseTensor(Space space, int order, std::vector<double> components);

  Space space() const { return space_; }
  int dim() const { return space_.dim(); }
  int order() const { return order_; }
  std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }

  double at(std::span<const int> idx) const { return data_[offset(idx)]; }
  double& at(std::span<const int> idx) { return data_[offset(idx)]; }

  template <typename... I>
  double operator()(I... i) const {
    const int idx[] = {static_cast<int>(i)...};
    return at(std::span<const int>(idx, sizeof...(I)));
  }
  template <typename... I>
  double& operator()(I... i) {
    const int idx[] = {static_cast<int>(i)...};
    return at(std::span<const int>(idx, sizeof...(I)));
  }

  const std::vector<double>& components() const { return data_; }
  std::vector<double>& components() { return data_; }

  std::int64_t offset(std::span<const int> idx) const;
  void unravel(std::int64_t flat, std::span<int> idx) const;
  // Stride of one step in the given 0-based slot.
  std::int64_t stride(int slot) const { return strides_[slot]; }

  DenseTensor& operator+=(const DenseTensor& o);
  DenseTensor& operator-=(const DenseTensor& o);
  DenseTensor& operator*=(double c);
  friend DenseTensor operator+(DenseTensor a, const DenseTensor& b) { return a += b; }
  friend DenseTensor operator-(DenseTensor a, const DenseTensor& b) { return a -= b; }
  friend DenseTensor operator*(double c, DenseTensor t) { return t *= c; }

  bool all_finite() const;

 private:
  Space space_;
  int order_;
  std::vector<std::int64_t> strides_;
  std::vector<double> data_;
};

// Frobenius pairing: plain sum over all index tuples of componentwise products.
double inner_product(const DenseTensor& a, const DenseTensor& b);
double frobenius_norm(const DenseTensor& a);
double max_abs(const DenseTensor& a);

// The metric of the space as an order-2 tensor (identity matrix).
DenseTensor metric_tensor(Space space);

}  // namespace curvlab
