#pragma once

#include <cstdint>
#include <functional>
#include <span>

namespace curvlab {

std::int64_t binomial(int n, int k);

// Visit all strictly increasing p-tuples over {0,...,n-1} in lexicographic
// order. p = 0 visits the single empty tuple.
void for_each_sorted_tuple(int n, int p, const std::function<void(std::span<const int>)>& fn);

// Sort an index tuple in place by adjacent swaps. Returns the permutation
// sign (+1/-1), or 0 if any index repeats.
int sort_with_sign(std::span<int> idx);

// Lexicographic rank of a strictly increasing tuple among all C(n,p) of them.
std::int64_t sorted_tuple_rank(int n, std::span<const int> sorted);

}  // namespace curvlab
