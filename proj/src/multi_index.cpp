#include "curvlab/multi_index.hpp"

#include <vector>

#include "curvlab/error.hpp"

namespace curvlab {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void for_each_sorted_tuple(int n, int p, const std::function<void(std::span<const int>)>& fn) {
  if (p < 0 || p > n) throw Error("tuple length out of range");
  std::vector<int> t(p);
  for (int m = 0; m < p; ++m) t[m] = m;
  if (p == 0) {
    fn(std::span<const int>());
    return;
  }
  while (true) {
    fn(std::span<const int>(t));
    // advance to the next increasing tuple in lexicographic order
    int m = p - 1;
    while (m >= 0 && t[m] == n - p + m) --m;
    if (m < 0) break;
    ++t[m];
    for (int q = m + 1; q < p; ++q) t[q] = t[q - 1] + 1;
  }
}

int sort_with_sign(std::span<int> idx) {
  int sign = 1;
  const int p = static_cast<int>(idx.size());
  for (int i = 1; i < p; ++i) {
    int j = i;
    while (j > 0 && idx[j - 1] > idx[j]) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
      --j;
    }
  }
  for (int i = 1; i < p; ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

std::int64_t sorted_tuple_rank(int n, std::span<const int> sorted) {
  const int p = static_cast<int>(sorted.size());
  std::int64_t rank = 0;
  int prev = -1;
  for (int j = 0; j < p; ++j) {
    for (int v = prev + 1; v < sorted[j]; ++v) rank += binomial(n - 1 - v, p - 1 - j);
    prev = sorted[j];
  }
  return rank;
}

}  // namespace curvlab
