#include "curvlab/random_gen.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "curvlab/error.hpp"
#include "curvlab/multi_index.hpp"

namespace curvlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::for_trial(std::uint64_t master_seed, std::uint64_t stream, std::uint64_t trial) {
  const std::uint64_t mixed = splitmix64(splitmix64(master_seed ^ splitmix64(stream)) ^ trial);
  return Rng(mixed);
}

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

std::uint64_t fnv1a(const char* s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (; *s; ++s) {
    h ^= static_cast<unsigned char>(*s);
    h *= 0x100000001b3ull;
  }
  return h;
}

DenseTensor random_tensor(Space space, int order, Rng& rng) {
  DenseTensor t(space, order);
  for (auto& c : t.components()) c = rng.normal();
  return t;
}

SymForm random_sym_form(Space space, Rng& rng) {
  const int n = space.dim();
  std::vector<double> m(static_cast<size_t>(n) * n);
  for (auto& c : m) c = rng.normal();
  return SymForm(space, std::move(m));
}

SymForm random_trace_free_sym(Space space, Rng& rng) {
  return random_sym_form(space, rng).trace_free_part();
}

AlgCurv random_alg_curv(Space space, Rng& rng) {
  return curvature_projection(random_tensor(space, 4, rng));
}

AlgCurv random_weyl(Space space, Rng& rng) {
  if (space.dim() < 4)
    throw DimensionTooSmall("the Weyl part vanishes identically below dimension 4");
  return decompose(random_alg_curv(space, rng)).weyl;
}

PForm random_pform(Space space, int degree, Rng& rng) {
  if (degree < 0 || degree > space.dim())
    throw DegreeOutOfRange("form degree must lie in [0, n]");
  std::vector<double> compact(static_cast<size_t>(binomial(space.dim(), degree)));
  for (auto& c : compact) c = rng.normal();
  return PForm::from_compact(space, degree, std::move(compact));
}

}  // namespace curvlab
