#include "curvlab/alg_curv.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "curvlab/error.hpp"

namespace curvlab {

namespace {

std::string index_string(const std::vector<int>& idx) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << ")";
  return os.str();
}

}  // namespace

double SymmetryCheck::worst() const {
  return std::max(antisymmetry, std::max(pair_exchange, bianchi));
}

SymmetryCheck symmetry_violations(const DenseTensor& t) {
  if (t.order() != 4) throw Error("curvature symmetry check needs an order-4 tensor");
  const int n = t.dim();
  SymmetryCheck out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double anti = std::abs(t(i, j, k, l) + t(j, i, k, l));
          if (anti > out.antisymmetry) {
            out.antisymmetry = anti;
            out.worst_antisymmetry = {i, j, k, l};
          }
          const double pex = std::abs(t(i, j, k, l) - t(k, l, i, j));
          if (pex > out.pair_exchange) {
            out.pair_exchange = pex;
            out.worst_pair_exchange = {i, j, k, l};
          }
          const double bia = std::abs(t(i, j, k, l) + t(j, k, i, l) + t(k, i, j, l));
          if (bia > out.bianchi) {
            out.bianchi = bia;
            out.worst_bianchi = {i, j, k, l};
          }
        }
  return out;
}

SymmetryViolation::SymmetryViolation(std::string identity, std::vector<int> index,
                                     double magnitude, double tolerance)
    : Error("curvature symmetry violation: " + identity + " at index " + index_string(index) +
            ", magnitude " + std::to_string(magnitude) + " exceeds tolerance " +
            std::to_string(tolerance)),
      identity_(std::move(identity)),
      index_(std::move(index)),
      magnitude_(magnitude),
      tolerance_(tolerance) {}

SchemaError::SchemaError(std::string path, const std::string& msg)
    : Error("invalid input at " + path + ": " + msg), path_(std::move(path)) {}

AlgCurv AlgCurv::validate(DenseTensor t, double tolerance) {
  if (t.order() != 4) throw Error("curvature tensor must have order 4");
  if (!t.all_finite()) throw Error("curvature tensor has non-finite components");
  const SymmetryCheck c = symmetry_violations(t);
  const double scale = max_abs(t);
  const double bound = tolerance * scale;
  if (c.antisymmetry > bound)
    throw SymmetryViolation("pair antisymmetry", c.worst_antisymmetry, c.antisymmetry, bound);
  if (c.pair_exchange > bound)
    throw SymmetryViolation("pair exchange", c.worst_pair_exchange, c.pair_exchange, bound);
  if (c.bianchi > bound)
    throw SymmetryViolation("first Bianchi identity", c.worst_bianchi, c.bianchi, bound);
  return AlgCurv(std::move(t));
}

AlgCurv AlgCurv::zero(Space space) { return AlgCurv(DenseTensor(space, 4)); }

AlgCurv& AlgCurv::operator+=(const AlgCurv& o) {
  t_ += o.t_;
  return *this;
}

AlgCurv& AlgCurv::operator-=(const AlgCurv& o) {
  t_ -= o.t_;
  return *this;
}

AlgCurv& AlgCurv::operator*=(double c) {
  t_ *= c;
  return *this;
}

AlgCurv kulkarni_nomizu(const SymForm& s1, const SymForm& s2) {
  if (s1.space() != s2.space()) throw Error("dimension mismatch in kulkarni_nomizu");
  const int n = s1.dim();
  DenseTensor t(s1.space(), 4);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          t(i, j, k, l) = s1(i, k) * s2(j, l) - s1(i, l) * s2(j, k) + s1(j, l) * s2(i, k) -
                          s1(j, k) * s2(i, l);
  // KN products carry all three curvature identities by construction.
  return AlgCurv::validate(std::move(t), 1e-14);
}

AlgCurv unit_sphere_curvature(Space space) {
  const SymForm g = SymForm::identity(space);
  return 0.5 * kulkarni_nomizu(g, g);
}

SymForm ricci(const AlgCurv& r) {
  const int n = r.dim();
  std::vector<double> m(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double acc = 0.0;
      for (int a = 0; a < n; ++a) acc += r(i, a, k, a);
      m[static_cast<size_t>(i) * n + k] = acc;
    }
  return SymForm(r.space(), std::move(m));
}

double scalar_curvature(const AlgCurv& r) { return ricci(r).trace(); }

CurvDecomposition decompose(const AlgCurv& r) {
  const int n = r.dim();
  if (n < 3)
    throw DimensionTooSmall("orthogonal decomposition needs n >= 3 (divides by n-2)");
  const SymForm ric = ricci(r);
  const double scal = ric.trace();
  SymForm ric0 = ric;
  {
    SymForm shift = SymForm::identity(r.space());
    shift *= scal / n;
    ric0 -= shift;
  }
  const SymForm g = SymForm::identity(r.space());
  AlgCurv weyl = r;
  weyl -= (scal / (2.0 * (n - 1) * n)) * kulkarni_nomizu(g, g);
  weyl -= (1.0 / (n - 2)) * kulkarni_nomizu(ric0, g);
  return CurvDecomposition{scal, std::move(ric0), std::move(weyl)};
}

AlgCurv curvature_projection(const DenseTensor& raw) {
  if (raw.order() != 4) throw Error("curvature projection needs an order-4 tensor");
  const int n = raw.dim();
  DenseTensor a(raw.space(), 4);
  // antisymmetrize both pairs and symmetrize the pair exchange in one pass
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double first =
              raw(i, j, k, l) - raw(j, i, k, l) - raw(i, j, l, k) + raw(j, i, l, k);
          const double swapped =
              raw(k, l, i, j) - raw(l, k, i, j) - raw(k, l, j, i) + raw(l, k, j, i);
          a(i, j, k, l) = 0.125 * (first + swapped);
        }
  // remove the totally antisymmetric part so the first Bianchi identity holds
  DenseTensor out(raw.space(), 4);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double cyc = a(i, j, k, l) + a(j, k, i, l) + a(k, i, j, l);
          out(i, j, k, l) = a(i, j, k, l) - cyc / 3.0;
        }
  return AlgCurv::validate(std::move(out), 1e-12);
}

}  // namespace curvlab
