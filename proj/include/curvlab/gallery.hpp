#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvlab/alg_curv.hpp"
#include "curvlab/sym_form.hpp"

namespace curvlab {

// Named model-space data: a curvature tensor plus the Hessian of a potential.
// Names: sphere, hyperbolic, flat, gaussian, weyl-random, random.
//   sphere      I (unit sphere), zero Hessian
//   hyperbolic  -I, zero Hessian
//   flat        zero curvature, zero Hessian
//   gaussian    zero curvature, Hessian = g (the shrinking Gaussian soliton)
//   weyl-random Weyl projection of a seeded random curvature tensor
//   random      seeded random curvature tensor and Hessian
// Requires n >= 3. Every example validates at 1e-12.
struct GalleryExample {
  std::string name;
  std::string description;
  AlgCurv curvature;
  SymForm hess_f;
  std::uint64_t seed;
};

const std::vector<std::string>& gallery_names();
GalleryExample gallery(const std::string& name, Space space, std::uint64_t seed = 0);

}  // namespace curvlab
