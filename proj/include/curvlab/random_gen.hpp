#pragma once

#include <cstdint>
#include <random>

#include "curvlab/alg_curv.hpp"
#include "curvlab/p_form.hpp"
#include "curvlab/sym_form.hpp"

namespace curvlab {

// Deterministic random source. Gaussians come from a hand-rolled Box-Muller
// on top of mt19937_64 so that streams are reproducible across standard
// library implementations, not just across runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // Independent stream for one trial of one named check.
  static Rng for_trial(std::uint64_t master_seed, std::uint64_t stream, std::uint64_t trial);

  double uniform();  // [0, 1)
  double normal();   // standard normal
  std::uint64_t next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t fnv1a(const char* s);

DenseTensor random_tensor(Space space, int order, Rng& rng);
SymForm random_sym_form(Space space, Rng& rng);
SymForm random_trace_free_sym(Space space, Rng& rng);
// Curvature projection of a standard-normal order-4 tensor.
AlgCurv random_alg_curv(Space space, Rng& rng);
// Weyl part of a random curvature tensor; requires n >= 4 for a nonzero result.
AlgCurv random_weyl(Space space, Rng& rng);
// Standard-normal coefficients on the compact increasing-multi-index basis.
PForm random_pform(Space space, int degree, Rng& rng);

}  // namespace curvlab
