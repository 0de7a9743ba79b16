#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "connection.hpp"
#include "curvature2.hpp"
#include "reduction.hpp"
#include "tensor.hpp"

using namespace connmod;

namespace {

DenseTensor sym2(int n, std::initializer_list<Rat> upper) {
  DenseTensor t(n, {Variance::Cov, Variance::Cov});
  auto it = upper.begin();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      t.at({i, j}) = *it;
      t.at({j, i}) = *it;
      ++it;
    }
  return t;
}

DenseTensor area(Rat c = 1) {
  DenseTensor t(2, {Variance::Cov, Variance::Cov});
  t.at({0, 1}) = c;
  t.at({1, 0}) = -c;
  return t;
}

} // namespace

TEST_CASE("curvature-like dimension") {
  for (int n = 1; n <= 4; ++n)
    CHECK(curvature_like_basis(n).size() == static_cast<std::size_t>(n * n * (n * n - 1) / 3));
}

TEST_CASE("order-one normal tensors and curvature-like tensors correspond") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 4; ++n) {
    for (int s = 0; s < 3; ++s) {
      NormalTensor t = random_normal_tensor(normal_basis(n, 1, true), n, 1, true, rng);
      CurvatureLike r = c1_to_curv(t);
      CHECK(curv_to_c1(r) == t);
    }
    for (const auto &r : curvature_like_basis(n))
      CHECK(c1_to_curv(curv_to_c1(r)) == r);
  }
  CHECK_THROWS_AS(c1_to_curv(NormalTensor::zero(2, 1, false)), Error);
}

TEST_CASE("c1_to_curv recovers the curvature at the origin") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 3; ++n)
    for (int r = 1; r <= 2; ++r) {
      ConnectionJet jet = random_connection_jet(n, r, true, rng);
      auto tuple = pi_r(jet);
      CHECK(c1_to_curv(tuple[1]).tensor() == curvature_at_origin(jet));
    }
}

TEST_CASE("Ricci split is equivariant") {
  std::mt19937_64 rng(23);
  for (int n = 2; n <= 3; ++n) {
    auto basis = curvature_like_basis(n);
    for (int s = 0; s < 3; ++s) {
      GlElement g = random_gl(n, rng);
      const auto &r = basis[static_cast<std::size_t>(s) % basis.size()];
      CurvatureLike gr(gl_act(g, r.tensor()));
      auto lhs = ricci_split(gr);
      auto rhs = ricci_split(r);
      CHECK(lhs.symmetric_part == gl_act(g, rhs.symmetric_part));
      CHECK(lhs.antisymmetric_part == gl_act(g, rhs.antisymmetric_part));
      CHECK(c1_to_curv(gl_act(g, curv_to_c1(r))) == gr);
    }
  }
}

TEST_CASE("curvature-like validation") {
  DenseTensor bad = DenseTensor::mixed(2, 3);
  bad.at({0, 0, 1, 0}) = 1;
  CHECK_THROWS_AS(CurvatureLike{bad}, Error);
  bad.at({0, 1, 0, 0}) = -1;
  CHECK(CurvatureLike::satisfies_invariants(bad)); // automatic in dimension two
  DenseTensor b3 = DenseTensor::mixed(3, 3);
  b3.at({0, 0, 1, 2}) = 1;
  b3.at({0, 1, 0, 2}) = -1;
  CHECK(!CurvatureLike::satisfies_invariants(b3));
}

TEST_CASE("Ricci split in dimension two is an isomorphism") {
  auto basis = curvature_like_basis(2);
  REQUIRE(basis.size() == 4);
  RatMatrix m = ricci_matrix_dim2(basis);
  CHECK(rank(m) == 4);
  auto c1 = normal_basis(2, 1, true);
  std::vector<CurvatureLike> images;
  for (const auto &t : c1)
    images.push_back(c1_to_curv(t));
  CHECK(rank(ricci_matrix_dim2(images)) == 4);
  for (const auto &r : basis) {
    auto split = ricci_split(r);
    CHECK(split.symmetric_part + split.antisymmetric_part == ricci(r));
  }
}

TEST_CASE("inertia") {
  RatMatrix a(3, 3);
  a(0, 1) = a(1, 0) = 1;
  a(2, 2) = -2;
  Inertia in = inertia(a);
  CHECK(in.positive == 1);
  CHECK(in.negative == 2);
  CHECK(in.zero == 0);
  RatMatrix b(2, 2);
  b(0, 0) = 1;
  b(0, 1) = b(1, 0) = 1;
  b(1, 1) = 1;
  in = inertia(b);
  CHECK(in.positive == 1);
  CHECK(in.zero == 1);
}

TEST_CASE("pair isotropy") {
  auto def = pair_isotropy(sym2(2, {1, 0, 1}), area());
  CHECK(def.lie_dim == 1);
  CHECK(def.label == IsotropyLabel::O2);
  auto neg = pair_isotropy(sym2(2, {-2, 1, -3}), area(5));
  CHECK(neg.lie_dim == 1);
  CHECK(neg.label == IsotropyLabel::O2);
  auto lor = pair_isotropy(sym2(2, {1, 0, -1}), area());
  CHECK(lor.lie_dim == 1);
  CHECK(lor.label == IsotropyLabel::O11);
  auto deg = pair_isotropy(sym2(2, {0, 0, 0}), area());
  CHECK(deg.lie_dim == 3);
  CHECK(deg.label == IsotropyLabel::Larger);
  auto rank1 = pair_isotropy(sym2(2, {1, 0, 0}), area());
  CHECK(rank1.label == IsotropyLabel::Larger);
  CHECK(rank1.lie_dim >= 1);
  CHECK(std::string(isotropy_label_name(IsotropyLabel::O11)) == "O11");
  CHECK_THROWS_AS(pair_isotropy(area(), area()), Error);
}
