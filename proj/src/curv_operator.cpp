#include "curvlab/curv_operator.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "curvlab/error.hpp"

namespace curvlab {

std::vector<std::pair<int, int>> bivector_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

std::vector<double> curvature_operator_matrix(const AlgCurv& r) {
  const auto pairs = bivector_pairs(r.dim());
  const size_t N = pairs.size();
  std::vector<double> m(N * N);
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b)
      m[a * N + b] = r(pairs[a].first, pairs[a].second, pairs[b].first, pairs[b].second);
  return m;
}

std::vector<double> CurvSpectrum::partial_sums() const {
  std::vector<double> s(eigenvalues.size());
  double acc = 0.0;
  for (size_t i = 0; i < eigenvalues.size(); ++i) {
    acc += eigenvalues[i];
    s[i] = acc;
  }
  return s;
}

CurvSpectrum spectrum(const AlgCurv& r) {
  const int n = r.dim();
  const auto pairs = bivector_pairs(n);
  const auto N = static_cast<Eigen::Index>(pairs.size());
  const std::vector<double> m = curvature_operator_matrix(r);
  Eigen::MatrixXd M(N, N);
  for (Eigen::Index a = 0; a < N; ++a)
    for (Eigen::Index b = 0; b < N; ++b) M(a, b) = m[static_cast<size_t>(a * N + b)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M);
  if (solver.info() != Eigen::Success) throw Error("symmetric eigensolver failed to converge");

  CurvSpectrum out;
  out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + N);
  out.eigenbivectors.reserve(static_cast<size_t>(N));
  for (Eigen::Index a = 0; a < N; ++a) {
    // column a in bivector coordinates -> skew matrix via the wedge convention
    std::vector<double> x(static_cast<size_t>(n) * n, 0.0);
    for (Eigen::Index b = 0; b < N; ++b) {
      const auto [i, j] = pairs[static_cast<size_t>(b)];
      const double c = solver.eigenvectors()(b, a);
      x[static_cast<size_t>(j) * n + i] += c;
      x[static_cast<size_t>(i) * n + j] -= c;
    }
    out.eigenbivectors.emplace_back(r.space(), std::move(x));
  }
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Positive: return "positive";
    case Verdict::Nonnegative: return "nonnegative";
    case Verdict::Fails: return "fails";
  }
  return "fails";
}

std::string vanishing_verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Positive: return "vanishing";
    case Verdict::Nonnegative: return "parallel-only";
    case Verdict::Fails: return "fails";
  }
  return "fails";
}

ConditionReport partial_sum_verdict(const CurvSpectrum& spec, int l, double tolerance) {
  const int N = static_cast<int>(spec.eigenvalues.size());
  if (l < 1 || l > N) throw Error("partial sum length must satisfy 1 <= l <= n(n-1)/2");
  if (!(tolerance >= 0.0)) throw Error("verdict tolerance must be nonnegative");
  double s = 0.0;
  for (int i = 0; i < l; ++i) s += spec.eigenvalues[static_cast<size_t>(i)];
  ConditionReport rep;
  rep.partial_sum = s;
  rep.l = l;
  rep.tolerance = tolerance;
  if (s > tolerance)
    rep.verdict = Verdict::Positive;
  else if (s >= -tolerance)
    rep.verdict = Verdict::Nonnegative;
  else
    rep.verdict = Verdict::Fails;
  return rep;
}

}  // namespace curvlab
