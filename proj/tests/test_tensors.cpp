#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tensor.hpp"

using namespace connmod;

namespace {

DenseTensor cov2(int n) { return DenseTensor(n, {Variance::Cov, Variance::Cov}); }

DenseTensor random_tensor(int n, std::vector<Variance> sig, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> c(-5, 5);
  DenseTensor t(n, std::move(sig));
  for (auto &x : t.entries())
    x = c(rng);
  return t;
}

// Random (1, m+2) tensor already symmetric in the last m slots (and the first
// two covariant slots when `symmetric`).
DenseTensor random_partially_symmetric(int n, int m, bool symmetric, std::mt19937_64 &rng) {
  DenseTensor t = random_tensor(n, DenseTensor::mixed(n, m + 2).signature(), rng);
  DenseTensor s = symmetrize(t, slot_range(3, m));
  if (symmetric)
    s = symmetrize(s, slot_range(1, 2));
  return s;
}

// Dual numbers a + b e with e^2 = 0, for the first-order expansion oracle.
struct Dual {
  Rat a, b;
};
Dual operator+(const Dual &x, const Dual &y) { return {x.a + y.a, x.b + y.b}; }
Dual operator-(const Dual &x, const Dual &y) { return {x.a - y.a, x.b - y.b}; }
Dual operator*(const Dual &x, const Dual &y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
Dual operator/(const Dual &x, const Dual &y) {
  return {x.a / y.a, (x.b * y.a - x.a * y.b) / (y.a * y.a)};
}

using DualMatrix = std::vector<std::vector<Dual>>;

DualMatrix dual_inverse(DualMatrix m) {
  const std::size_t n = m.size();
  DualMatrix inv(n, std::vector<Dual>(n, Dual{0, 0}));
  for (std::size_t i = 0; i < n; ++i)
    inv[i][i] = {1, 0};
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c].a == 0)
      ++p;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Dual piv = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] = m[c][j] / piv;
      inv[c][j] = inv[c][j] / piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c)
        continue;
      Dual f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = m[i][j] - f * m[c][j];
        inv[i][j] = inv[i][j] - f * inv[c][j];
      }
    }
  }
  return inv;
}

// e-coefficient of (I + eA) . t computed slot by slot over dual numbers.
DenseTensor dual_first_order(const RatMatrix &a, const DenseTensor &t) {
  const int n = t.dimension();
  DualMatrix g(n, std::vector<Dual>(n, Dual{0, 0}));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g[i][j] = {i == j ? Rat(1) : Rat(0), a(i, j)};
  DualMatrix ginv = dual_inverse(g);
  std::vector<Dual> cur(t.size());
  for (std::size_t f = 0; f < t.size(); ++f)
    cur[f] = {t.entries()[f], 0};
  for (int s = 0; s < t.slots(); ++s) {
    std::vector<Dual> next(t.size(), Dual{0, 0});
    for (std::size_t f = 0; f < t.size(); ++f) {
      auto idx = t.unflat(f);
      for (int c = 0; c < n; ++c) {
        auto src = idx;
        src[s] = c;
        Dual coef = t.signature()[s] == Variance::Contra ? g[idx[s]][c] : ginv[c][idx[s]];
        next[f] = next[f] + coef * cur[t.flat(src)];
      }
    }
    cur = std::move(next);
  }
  DenseTensor out(n, t.signature());
  for (std::size_t f = 0; f < t.size(); ++f)
    out.entries()[f] = cur[f].b;
  return out;
}

RatMatrix random_matrix(int n, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = c(rng);
  return m;
}

} // namespace

TEST_CASE("symmetrize") {
  std::mt19937_64 rng(1);
  std::vector<int> both{0, 1};
  auto t = random_tensor(3, {Variance::Cov, Variance::Cov}, rng);
  auto s = symmetrize(t, both);
  CHECK(symmetrize(s, both) == s);
  CHECK(is_symmetric_in(s, both));

  auto anti = t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      anti.at({i, j}) = t.at({i, j}) - t.at({j, i});
  CHECK(symmetrize(anti, both).is_zero());

  auto e12 = cov2(2);
  e12.at({0, 1}) = 1;
  auto expected = cov2(2);
  expected.at({0, 1}) = Rat(1, 2);
  expected.at({1, 0}) = Rat(1, 2);
  CHECK(symmetrize(e12, both) == expected);
}

TEST_CASE("symmetrize rejects bad slots") {
  auto t = DenseTensor::mixed(2, 2);
  std::vector<int> out_of_range{1, 3};
  std::vector<int> contra{0, 1};
  CHECK_THROWS_AS(symmetrize(t, out_of_range), Error);
  CHECK_THROWS_AS(symmetrize(t, contra), Error);
}

TEST_CASE("antisymmetrize") {
  std::mt19937_64 rng(2);
  auto t = random_tensor(3, {Variance::Cov, Variance::Cov, Variance::Cov}, rng);
  std::vector<int> s{0, 2};
  auto a = antisymmetrize(t, s);
  CHECK(is_antisymmetric_in(a, 0, 2));
  CHECK(antisymmetrize(a, s) == a);
  CHECK(symmetrize(a, s).is_zero());
}

TEST_CASE("project_normal") {
  std::mt19937_64 rng(3);
  for (int m = 0; m <= 3; ++m)
    for (bool sym : {false, true}) {
      auto t = random_partially_symmetric(2, m, sym, rng);
      auto total = symmetrize(t, slot_range(1, m + 2));
      CHECK(project_normal(total, m, sym).tensor().is_zero());
      auto p = project_normal(t, m, sym);
      CHECK(project_normal(p.tensor(), m, sym) == p);
      // equivariance
      auto g = random_gl(2, rng);
      CHECK(project_normal(gl_act(g, t), m, sym) == gl_act(g, p));
    }

  // m = 0, non-symmetric: C_0 = V (x) Lambda^2 V*, so the projection is the
  // antisymmetric part in the two covariant slots.
  auto t = random_tensor(3, DenseTensor::mixed(3, 2).signature(), rng);
  auto p = project_normal(t, 0, false).tensor();
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(p.at({l, i, j}) == (t.at({l, i, j}) - t.at({l, j, i})) / 2);

  auto bad = random_tensor(2, DenseTensor::mixed(2, 4).signature(), rng);
  try {
    project_normal(bad, 2, false);
    FAIL("expected SymmetryViolation");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::SymmetryViolation);
  }
  auto not_sym = random_partially_symmetric(2, 1, false, rng);
  CHECK_THROWS_AS(project_normal(not_sym, 1, true), Error);
}

TEST_CASE("normal basis small cases") {
  for (int m = 0; m <= 4; ++m)
    for (bool sym : {false, true}) {
      CHECK(normal_basis(1, m, sym).empty());
      CHECK(dim_formula(1, m, sym) == 0);
    }
  CHECK(normal_basis(2, 0, true).empty());
  CHECK(normal_basis(2, 1, true).size() == 4);
  // C_0 = V (x) Lambda^2 V*: n * C(n, 2)
  for (int n = 1; n <= 4; ++n)
    CHECK(normal_basis(n, 0, false).size() == static_cast<std::size_t>(n * n * (n - 1) / 2));
}

TEST_CASE("dim_formula values") {
  CHECK(dim_formula(2, 1, true) == 4);
  CHECK(dim_formula(3, 1, true) == 24);
  CHECK(dim_formula(2, 0, false) == 2);
  for (int n = 1; n <= 5; ++n) {
    CHECK(dim_formula(n, 1, true) == n * n * (n * n - 1) / 3);
    CHECK(dim_formula(n, 0, true) == 0);
  }
}

TEST_CASE("dim_formula equals the kernel rank of the symmetrization map") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (bool sym : {false, true}) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(sym);
        CHECK(static_cast<long long>(normal_kernel_rank(n, m, sym).kernel_dim()) == dim_formula(n, m, sym));
      }
}

TEST_CASE("normal basis is an independent family of normal tensors") {
  for (int n = 2; n <= 3; ++n)
    for (int m = 0; m <= 2; ++m)
      for (bool sym : {false, true}) {
        auto basis = normal_basis(n, m, sym);
        CHECK(static_cast<long long>(basis.size()) == dim_formula(n, m, sym));
        IntegerRowEchelon ech(basis.empty() ? 1 : basis.front().tensor().size());
        for (const auto &b : basis) {
          CHECK(NormalTensor::satisfies_invariants(b.tensor(), m, sym));
          CHECK(ech.add_dense(b.tensor().entries()));
        }
      }
}

TEST_CASE("GL action") {
  std::mt19937_64 rng(4);
  auto basis = normal_basis(3, 1, true);
  auto t = random_normal_tensor(basis, 3, 1, true, rng);
  CHECK(gl_act(GlElement::identity(3), t.tensor()) == t.tensor());

  for (int m = 0; m <= 2; ++m) {
    auto x = random_tensor(2, DenseTensor::mixed(2, m + 2).signature(), rng);
    Rat lambda(3);
    Rat weight = 1;
    for (int k = 0; k < m + 1; ++k)
      weight /= lambda;
    CHECK(gl_act(GlElement::scalar(2, lambda), x) == weight * x);
  }

  for (int trial = 0; trial < 5; ++trial) {
    auto g = random_gl(3, rng), h = random_gl(3, rng);
    CHECK(gl_act(g * h, t.tensor()) == gl_act(g, gl_act(h, t.tensor())));
    // closure of C~_1
    CHECK(NormalTensor::satisfies_invariants(gl_act(g, t.tensor()), 1, true));
  }
  CHECK_THROWS_AS(GlElement(RatMatrix(2, 2)), Error);
}

TEST_CASE("infinitesimal action") {
  std::mt19937_64 rng(5);
  auto t = random_tensor(2, DenseTensor::mixed(2, 3).signature(), rng);
  CHECK(gl_infinitesimal_act(RatMatrix(2, 2), t).is_zero());
  CHECK(gl_infinitesimal_act(RatMatrix::identity(2), t) == Rat(-2) * t);

  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_matrix(2, rng);
    auto x = random_tensor(2, {Variance::Contra, Variance::Cov, Variance::Contra, Variance::Cov}, rng);
    CHECK(gl_infinitesimal_act(a, x) == dual_first_order(a, x));
  }

  auto basis = normal_basis(2, 2, false);
  auto nt = random_normal_tensor(basis, 2, 2, false, rng);
  CHECK(NormalTensor::satisfies_invariants(gl_infinitesimal_act(random_matrix(2, rng), nt.tensor()), 2, false));
}

TEST_CASE("tensor shape checks") {
  CHECK_THROWS_AS(DenseTensor(2, {Variance::Cov}, {Rat(1)}), Error);
  CHECK_THROWS_AS(DenseTensor::mixed(2, 1) + DenseTensor::mixed(3, 1), Error);
  auto t = DenseTensor::mixed(3, 2);
  auto idx = t.unflat(17);
  CHECK(t.flat(idx) == 17);
}

TEST_CASE("sparse tensor product") {
  auto a = DenseTensor(2, {Variance::Cov});
  a.at({1}) = 2;
  auto b = DenseTensor(2, {Variance::Contra});
  b.at({0}) = 3;
  auto p = tensor_product(SparseTensor::from_dense(a), SparseTensor::from_dense(b));
  REQUIRE(p.entries.size() == 1);
  CHECK(p.unflat(p.entries[0].first) == std::vector<int>{1, 0});
  CHECK(p.entries[0].second == 6);
}
