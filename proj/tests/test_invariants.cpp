#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "invariants.hpp"

using namespace connmod;

namespace {

std::vector<std::vector<int>> as_vectors(const std::vector<DegreeProfile> &ps) {
  std::vector<std::vector<int>> out;
  for (const auto &p : ps)
    out.push_back(p.d);
  return out;
}

DenseTensor kron_delta(int n) {
  DenseTensor t(n, {Variance::Cov, Variance::Contra});
  for (int i = 0; i < n; ++i)
    t.at({i, i}) = 1;
  return t;
}

// Standard basis of the full mixed space with p covariant then p contravariant slots.
std::vector<DenseTensor> full_mixed_basis(int n, int p) {
  std::vector<Variance> sig(static_cast<std::size_t>(p), Variance::Cov);
  sig.insert(sig.end(), static_cast<std::size_t>(p), Variance::Contra);
  DenseTensor shape(n, sig);
  std::vector<DenseTensor> out;
  for (std::size_t f = 0; f < shape.size(); ++f) {
    DenseTensor e = shape;
    e.entries()[f] = 1;
    out.push_back(e);
  }
  return out;
}

} // namespace

TEST_CASE("profile enumeration") {
  CHECK(as_vectors(enumerate_profiles(1, 2, 2)) == std::vector<std::vector<int>>{{2, 0}, {0, 1}});
  CHECK(as_vectors(enumerate_profiles(2, 3, 3)) == std::vector<std::vector<int>>{{3, 0, 0}, {1, 1, 0}, {0, 0, 1}});
  CHECK(as_vectors(enumerate_profiles(3, 0, 4)) == std::vector<std::vector<int>>{{0, 0, 0, 0}});
  CHECK(as_vectors(enumerate_profiles(1, 2, 1)) == std::vector<std::vector<int>>{{0, 1}});
  for (const auto &p : enumerate_profiles(3, 5, 5)) {
    CHECK(p.excess() == 5);
    CHECK(p.covariant() - p.contravariant() == 5);
  }
  auto all = enumerate_profiles_by_total(2, 2);
  CHECK(all.size() == 10);
  CHECK(all.front().d == std::vector<int>{2, 0, 0});
  CHECK(all.back().d == std::vector<int>{0, 0, 0});
}

TEST_CASE("identity pairing has one invariant") {
  for (int n = 1; n <= 4; ++n)
    CHECK(contraction_span_dim(std::vector<DenseTensor>{kron_delta(n)}) == 1);
}

TEST_CASE("two-forms paired with bivectors") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<DenseTensor> basis;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = c + 1; d < n; ++d) {
            DenseTensor t(n, {Variance::Cov, Variance::Cov, Variance::Contra, Variance::Contra});
            t.at({a, b, c, d}) = 1;
            t.at({b, a, c, d}) = -1;
            t.at({a, b, d, c}) = -1;
            t.at({b, a, d, c}) = 1;
            basis.push_back(t);
          }
    CHECK(contraction_span_dim(basis) == 1);
  }
}

TEST_CASE("full mixed space gives p! independent contractions") {
  CHECK(contraction_span_dim(full_mixed_basis(2, 2)) == 2);
  CHECK(contraction_span_dim(full_mixed_basis(3, 3)) == 6);
  CHECK(contraction_span_dim(full_mixed_basis(2, 3)) == 5); // one relation when n < p
}

TEST_CASE("unbalanced variance and cap") {
  DenseTensor t(2, {Variance::Cov, Variance::Cov, Variance::Contra});
  CHECK_THROWS_AS(contraction_span_dim(std::vector<DenseTensor>{t}), Error);
  try {
    contraction_span_dim(std::vector<DenseTensor>{t});
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::UnbalancedVariance);
  }
  try {
    contraction_span_dim(full_mixed_basis(1, 3), 2);
    FAIL("expected cap");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::ResourceCap);
  }
}

TEST_CASE("contractions are invariant under change of basis") {
  std::mt19937_64 rng(17);
  const int n = 3;
  // phi_sigma(g . t) == phi_sigma(t) on random (2,2) tensors
  DenseTensor t(n, {Variance::Cov, Variance::Cov, Variance::Contra, Variance::Contra});
  std::uniform_int_distribution<int> c(-4, 4);
  for (auto &x : t.entries())
    x = c(rng);
  GlElement g = random_gl(n, rng);
  DenseTensor gt = gl_act(g, t);
  for (std::vector<int> sigma : {std::vector<int>{0, 1}, std::vector<int>{1, 0}})
    CHECK(total_contraction(SparseTensor::from_dense(gt), sigma) ==
          total_contraction(SparseTensor::from_dense(t), sigma));
}

TEST_CASE("scalar invariants") {
  auto z = scalar_invariant_dimension(3, DegreeProfile{{0, 0}});
  CHECK(z.dim == 1);
  CHECK(z.reason == "constants");
  auto nz = scalar_invariant_dimension(3, DegreeProfile{{1, 2}});
  CHECK(nz.dim == 0);
  CHECK(nz.p_neq_q);
  CHECK(nz.homothety_weight == -5);
}

TEST_CASE("target symmetry parsing") {
  auto t = TargetSymmetry::parse("two-form-endo", 3, 1);
  REQUIRE(t.antisymmetric.size() == 1);
  CHECK(t.antisymmetric[0] == std::vector<int>{1, 2});
  CHECK_THROWS_AS(TargetSymmetry::parse("two-form-endo", 2, 1), Error);
  CHECK_THROWS_AS(TargetSymmetry::parse("sym:1,9", 3, 1), Error);
  CHECK_THROWS_AS(TargetSymmetry::parse("bogus", 3, 1), Error);
  CHECK(target_dual_basis(3, 3, 1, t).size() == 3 * 3 * 3);
  CHECK(target_dual_basis(3, 2, 0, TargetSymmetry::parse("sym:1,2", 2, 0)).size() == 6);
}

TEST_CASE("natural tensors") {
  auto none = TargetSymmetry::parse("none", 0, 0);
  auto r0 = natural_tensor_dimension(3, 2, 0, 0, true, none);
  CHECK(r0.total == 1);

  auto vec = natural_tensor_dimension(3, 1, 1, 0, true, TargetSymmetry::parse("none", 1, 0));
  CHECK(vec.total == 0);
  REQUIRE(vec.profiles.size() == 1);
  CHECK(vec.profiles[0].reason == "C̃_0=0");

  auto two_form = TargetSymmetry::parse("two-form-endo", 3, 1);
  auto rep = natural_tensor_dimension(3, 1, 3, 1, true, two_form);
  REQUIRE(rep.profiles.size() == 2);
  CHECK(rep.profiles[0].profile.d == std::vector<int>{2, 0});
  CHECK(rep.profiles[0].dim == 0);
  CHECK(rep.profiles[1].profile.d == std::vector<int>{0, 1});
  // curvature itself plus the maps through the symmetric and skew Ricci parts
  CHECK(rep.total == 4);

  auto swapped = natural_tensor_dimension(3, 1, 3, 1, true, two_form, kDefaultContractionCap,
                                          AdjunctionOrder::TargetDualFirst);
  CHECK(swapped.total == rep.total);

  auto rep2 = natural_tensor_dimension(2, 1, 3, 1, true, two_form);
  MESSAGE("n=2 two-form-endo: " << rep2.total);
  CHECK(rep2.total <= rep.total);

  CHECK_THROWS_AS(natural_tensor_dimension(3, 1, 5, 1, false, TargetSymmetry::parse("none", 5, 1), 4), Error);
}
