#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "curvlab/alg_curv.hpp"
#include "curvlab/dense_tensor.hpp"
#include "curvlab/error.hpp"
#include "curvlab/multi_index.hpp"
#include "curvlab/p_form.hpp"
#include "curvlab/random_gen.hpp"
#include "curvlab/sym_form.hpp"
#include "curvlab/tensor_ops.hpp"

using namespace curvlab;

namespace {

// independent double-sum contraction, the oracle for contract_with_form
DenseTensor contract_oracle(const SymForm& h, const DenseTensor& t, int si, int sj) {
  const int k = t.order();
  const int n = t.dim();
  DenseTensor out(t.space(), k - 2);
  std::vector<int> rest(k - 2), full(k);
  for (std::int64_t f = 0; f < out.size(); ++f) {
    out.unravel(f, rest);
    double acc = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int m = 0;
        for (int s = 0; s < k; ++s) {
          if (s == si - 1)
            full[s] = a;
          else if (s == sj - 1)
            full[s] = b;
          else
            full[s] = rest[m++];
        }
        acc += h(a, b) * t.at(full);
      }
    out.components()[static_cast<size_t>(f)] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("dense tensor basics") {
  Space sp(3);
  DenseTensor t(sp, 3);
  CHECK(t.size() == 27);
  t(0, 1, 2) = 5.0;
  CHECK(t(0, 1, 2) == 5.0);
  const std::vector<int> idx = {0, 1, 2};
  CHECK(t.at(idx) == 5.0);
  CHECK(t.stride(0) == 9);
  CHECK(t.stride(2) == 1);
  std::vector<int> back(3);
  t.unravel(t.offset(idx), back);
  CHECK(back == idx);
  CHECK(t.all_finite());

  DenseTensor scalar(sp, 0);
  CHECK(scalar.size() == 1);
  CHECK_THROWS_AS(DenseTensor(Space(1), 2), DimensionTooSmall);
}

TEST_CASE("metric tensor and inner products") {
  Space sp(4);
  const DenseTensor g = metric_tensor(sp);
  CHECK(g(0, 0) == 1.0);
  CHECK(g(0, 1) == 0.0);
  CHECK(inner_product(g, g) == doctest::Approx(4.0).epsilon(1e-15));

  // <T, g> recovers the trace of a symmetric 2-tensor
  Rng rng(11);
  const SymForm h = random_sym_form(sp, rng);
  CHECK(inner_product(h.to_tensor(), g) == doctest::Approx(h.trace()).epsilon(1e-12));
}

TEST_CASE("transpose relabels a single component") {
  Space sp(4);
  DenseTensor t(sp, 3);
  t(0, 1, 2) = 5.0;
  const DenseTensor s = transpose_slots(t, 1, 2);
  CHECK(s(1, 0, 2) == 5.0);
  CHECK(s(0, 1, 2) == 0.0);
  const DenseTensor u = transpose_slots(t, 2, 3);
  CHECK(u(0, 2, 1) == 5.0);
}

TEST_CASE("transpose is an involution and an isometry") {
  Space sp(3);
  Rng rng(7);
  const DenseTensor t = random_tensor(sp, 4, rng);
  const DenseTensor s = transpose_slots(t, 2, 4);
  DenseTensor back = transpose_slots(s, 2, 4);
  back -= t;
  CHECK(max_abs(back) == 0.0);
  CHECK(inner_product(s, s) == doctest::Approx(inner_product(t, t)).epsilon(1e-13));
}

TEST_CASE("contraction against the double-sum oracle") {
  Space sp(3);
  Rng rng(23);
  const SymForm h = random_sym_form(sp, rng);
  const DenseTensor t = random_tensor(sp, 4, rng);
  for (auto [si, sj] : {std::pair{1, 2}, std::pair{2, 4}, std::pair{1, 4}}) {
    DenseTensor diff = contract_with_form(h, t, si, sj);
    diff -= contract_oracle(h, t, si, sj);
    CHECK(max_abs(diff) < 1e-14);
  }
}

TEST_CASE("contraction worked examples") {
  // h = diag(1,2) against g on R^2: c_12(h (x) g) = 1 + 2 = 3
  Space sp2(2);
  const SymForm h(sp2, {1.0, 0.0, 0.0, 2.0});
  const DenseTensor c = contract_with_form(h, metric_tensor(sp2), 1, 2);
  CHECK(c.order() == 0);
  CHECK(c.components()[0] == doctest::Approx(3.0).epsilon(1e-15));

  // c_24(g (x) I) is the Ricci contraction of I: (n-1) g
  Space sp3(3);
  const SymForm g3 = SymForm::identity(sp3);
  const DenseTensor r = contract_with_form(g3, unit_sphere_curvature(sp3).tensor(), 2, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(r(i, j) == doctest::Approx(i == j ? 2.0 : 0.0).epsilon(1e-15));

  // metric contraction of an antisymmetric pair vanishes
  Rng rng(5);
  const AlgCurv rr = random_alg_curv(sp3, rng);
  const DenseTensor z = contract_with_form(g3, rr.tensor(), 1, 2);
  CHECK(max_abs(z) < 1e-14);
}

TEST_CASE("endomorphism action") {
  Space sp(3);
  Rng rng(31);
  const DenseTensor t = random_tensor(sp, 3, rng);

  // identity endomorphism scales by -k
  std::vector<double> id(9, 0.0);
  for (int i = 0; i < 3; ++i) id[static_cast<size_t>(i) * 3 + i] = 1.0;
  DenseTensor scaled = endo_action(matrix_tensor(sp, id), t);
  DenseTensor want = t;
  want *= -3.0;
  scaled -= want;
  CHECK(max_abs(scaled) < 1e-15);

  // skew endomorphisms kill the metric
  std::vector<double> raw(9);
  for (auto& x : raw) x = rng.normal();
  const SkewEndo l(sp, raw);
  CHECK(max_abs(endo_action(l, metric_tensor(sp))) < 1e-15);

  // diagonal h on a basis form multiplies by -(sum of the touched entries)
  Space sp4(4);
  const SymForm diag(sp4, {2, 0, 0, 0, 0, 5, 0, 0, 0, 0, 7, 0, 0, 0, 0, 11});
  const std::vector<int> support = {1, 3};
  const PForm omega = PForm::basis_form(sp4, support);
  DenseTensor got = endo_action(diag, omega.tensor());
  DenseTensor expect = omega.tensor();
  expect *= -(5.0 + 11.0);
  got -= expect;
  CHECK(max_abs(got) < 1e-15);
}

TEST_CASE("kulkarni-nomizu worked values") {
  Space sp(4);
  const SymForm g = SymForm::identity(sp);
  const AlgCurv gg = kulkarni_nomizu(g, g);
  CHECK(gg(0, 1, 0, 1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(gg(0, 1, 1, 0) == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(gg(0, 1, 2, 3) == 0.0);

  const AlgCurv i4 = unit_sphere_curvature(sp);
  CHECK(i4(0, 1, 0, 1) == doctest::Approx(1.0).epsilon(1e-15));

  const SymForm h(sp, {2, 0, 0, 0, 0, 3, 0, 0, 0, 0, 5, 0, 0, 0, 0, 7});
  const AlgCurv hg = kulkarni_nomizu(h, g);
  CHECK(hg(0, 1, 0, 1) == doctest::Approx(5.0).epsilon(1e-15));   // 2 + 3
  CHECK(hg(2, 3, 2, 3) == doctest::Approx(12.0).epsilon(1e-15));  // 5 + 7
}

TEST_CASE("kulkarni-nomizu squared norm against a hand-rolled expansion") {
  Space sp(4);
  const int n = 4;
  // independent component formula: (g^g)[ijkl] = 2(d_ik d_jl - d_il d_jk)
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double v =
              2.0 * ((i == k && j == l ? 1.0 : 0.0) - (i == l && j == k ? 1.0 : 0.0));
          acc += v * v;
        }
  CHECK(acc == doctest::Approx(8.0 * n * (n - 1)).epsilon(1e-15));
  CHECK(acc == doctest::Approx(96.0).epsilon(1e-15));

  const SymForm g = SymForm::identity(sp);
  const DenseTensor gg = kulkarni_nomizu(g, g).tensor();
  CHECK(inner_product(gg, gg) == doctest::Approx(acc).epsilon(1e-15));
}

TEST_CASE("symmetric form ingestion and parts") {
  Space sp(3);
  const SymForm h(sp, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(h(0, 1) == doctest::Approx(3.0).epsilon(1e-15));  // (2 + 4) / 2
  CHECK(h(1, 0) == h(0, 1));
  CHECK(h.trace() == doctest::Approx(15.0).epsilon(1e-15));
  const SymForm h0 = h.trace_free_part();
  CHECK(h0.trace() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("skew endomorphisms and bivectors") {
  Space sp(4);
  const SkewEndo b = SkewEndo::coordinate_bivector(sp, 1, 3);
  // (e1 ^ e3) e1 = e3 with the pairing convention used here
  CHECK(b(3, 1) == 1.0);
  CHECK(b(1, 3) == -1.0);
  CHECK(bivector_inner(b, b) == doctest::Approx(1.0).epsilon(1e-15));
  const SkewEndo c = SkewEndo::coordinate_bivector(sp, 0, 1);
  CHECK(bivector_inner(b, c) == 0.0);

  const SkewEndo anti(sp, std::vector<double>{0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(anti(0, 1) == 0.0);  // symmetric input antisymmetrizes to zero
}

TEST_CASE("multi-index helpers") {
  CHECK(binomial(8, 3) == 56);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 4) == 1);

  std::vector<std::vector<int>> tuples;
  for_each_sorted_tuple(4, 2, [&](std::span<const int> t) {
    tuples.emplace_back(t.begin(), t.end());
  });
  CHECK(tuples.size() == 6);
  CHECK(tuples.front() == std::vector<int>{0, 1});
  CHECK(tuples.back() == std::vector<int>{2, 3});
  for (size_t r = 0; r < tuples.size(); ++r)
    CHECK(sorted_tuple_rank(4, tuples[r]) == static_cast<std::int64_t>(r));

  std::vector<int> perm = {2, 1, 0};
  CHECK(sort_with_sign(perm) == -1);
  CHECK(perm == std::vector<int>{0, 1, 2});
  std::vector<int> swapped = {1, 0, 2};
  CHECK(sort_with_sign(swapped) == -1);
  std::vector<int> cyc = {1, 2, 0};
  CHECK(sort_with_sign(cyc) == 1);
  std::vector<int> dup = {1, 1, 2};
  CHECK(sort_with_sign(dup) == 0);
}

TEST_CASE("p-form alternation and compact storage") {
  Space sp(3);
  DenseTensor raw(sp, 2);
  raw(0, 1) = 1.0;
  const PForm omega(sp, 2, raw);
  CHECK(omega.tensor()(0, 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(omega.tensor()(1, 0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(omega.tensor()(0, 0) == 0.0);
  CHECK(omega.compact().size() == 3);
  CHECK(omega.compact()[sorted_tuple_rank(3, std::vector<int>{0, 1})] ==
        doctest::Approx(0.5).epsilon(1e-15));

  // alternation of a symmetric tensor vanishes
  Rng rng(3);
  const SymForm h = random_sym_form(sp, rng);
  const PForm zero(sp, 2, h.to_tensor());
  CHECK(max_abs(zero.tensor()) < 1e-15);

  const std::vector<int> support = {0, 2};
  const PForm basis = PForm::basis_form(sp, support);
  CHECK(basis.tensor()(0, 2) == 1.0);
  CHECK(basis.tensor()(2, 0) == -1.0);
  const std::vector<int> swapped = {2, 0};
  CHECK(basis.component(swapped) == -1.0);
  const std::vector<int> repeated = {2, 2};
  CHECK(basis.component(repeated) == 0.0);

  // dense squared norm is p! times the compact squared norm
  const PForm rnd = random_pform(sp, 2, rng);
  double compact_sq = 0.0;
  for (double c : rnd.compact()) compact_sq += c * c;
  CHECK(inner_product(rnd.tensor(), rnd.tensor()) ==
        doctest::Approx(2.0 * compact_sq).epsilon(1e-13));

  // degree 0 and degree n edge cases
  const PForm volume = random_pform(sp, 3, rng);
  CHECK(volume.compact().size() == 1);
  const PForm constant = random_pform(sp, 0, rng);
  CHECK(constant.compact().size() == 1);
  CHECK(constant.tensor().size() == 1);
  CHECK_THROWS_AS(random_pform(sp, 4, rng), DegreeOutOfRange);
}

TEST_CASE("wrap_alternating trusts alternating input") {
  Space sp(4);
  Rng rng(17);
  const PForm omega = random_pform(sp, 3, rng);
  const PForm rewrapped = PForm::wrap_alternating(omega.tensor());
  for (size_t i = 0; i < omega.compact().size(); ++i)
    CHECK(rewrapped.compact()[i] == omega.compact()[i]);
}

TEST_CASE("rng reproducibility and distribution sanity") {
  Rng a = Rng::for_trial(42, fnv1a("stream"), 3);
  Rng b = Rng::for_trial(42, fnv1a("stream"), 3);
  for (int i = 0; i < 10; ++i) CHECK(a.normal() == b.normal());
  Rng c = Rng::for_trial(42, fnv1a("stream"), 4);
  CHECK(a.normal() != c.normal());

  Rng d(123);
  double mean = 0.0;
  const int count = 20000;
  for (int i = 0; i < count; ++i) mean += d.normal();
  mean /= count;
  CHECK(std::abs(mean) < 0.05);
}
