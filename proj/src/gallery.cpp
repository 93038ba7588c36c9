#include "curvlab/gallery.hpp"

#include "curvlab/error.hpp"
#include "curvlab/random_gen.hpp"
#include "curvlab/tolerances.hpp"

namespace curvlab {

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names = {"sphere",   "hyperbolic",  "flat",
                                                 "gaussian", "weyl-random", "random"};
  return names;
}

GalleryExample gallery(const std::string& name, Space space, std::uint64_t seed) {
  if (space.dim() < 3) throw DimensionTooSmall("gallery examples need dimension n >= 3");
  const SymForm g = SymForm::identity(space);
  const SymForm zero2 = SymForm::zero(space);
  GalleryExample ex{name, "", unit_sphere_curvature(space), zero2, seed};

  if (name == "sphere") {
    ex.description =
        "Unit round sphere: sectional curvature 1, every curvature operator "
        "eigenvalue equals 1, all weighted partial sums are positive.";
  } else if (name == "hyperbolic") {
    ex.curvature = -1.0 * unit_sphere_curvature(space);
    ex.description =
        "Hyperbolic model: sectional curvature -1; the partial sums are "
        "negative, so the vanishing check reports fails (no conclusion).";
  } else if (name == "flat") {
    ex.curvature = AlgCurv::validate(DenseTensor(space, 4), tol::kGallery);
    ex.description =
        "Flat model: zero curvature, zero potential; partial sums sit exactly "
        "on the nonnegative boundary (parallel-only).";
  } else if (name == "gaussian") {
    ex.curvature = AlgCurv::validate(DenseTensor(space, 4), tol::kGallery);
    ex.hess_f = g;
    ex.description =
        "Shrinking Gaussian structure: flat curvature with Hess f = g; every "
        "weighted operator eigenvalue equals 1/(n-p) and the degree-p partial "
        "sum is exactly 1.";
  } else if (name == "weyl-random") {
    if (space.dim() < 4)
      throw DimensionTooSmall(
          "weyl-random needs n >= 4; the Weyl part vanishes identically at n = 3");
    Rng rng = Rng::for_trial(seed, fnv1a("gallery-weyl-random"), 0);
    ex.curvature = random_weyl(space, rng);
    ex.description =
        "Weyl part of a seeded random curvature tensor: trace-free in every "
        "contraction, scalar and Ricci parts vanish.";
  } else if (name == "random") {
    Rng rng = Rng::for_trial(seed, fnv1a("gallery-random"), 0);
    ex.curvature = random_alg_curv(space, rng);
    ex.hess_f = random_sym_form(space, rng);
    ex.description =
        "Seeded random curvature tensor (projection of a normal order-4 "
        "tensor) with a random symmetric Hessian.";
  } else {
    throw UnknownExample("unknown gallery example: " + name);
  }

  AlgCurv::validate(ex.curvature.tensor(), tol::kGallery);
  return ex;
}

}  // namespace curvlab
