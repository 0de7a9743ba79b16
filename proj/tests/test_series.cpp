#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "series.hpp"

using namespace connmod;

namespace {

TruncatedSeries x(int n, int order, int i) { return TruncatedSeries::variable(n, order, i); }
TruncatedSeries one(int n, int order) { return TruncatedSeries::constant(n, order, 1); }

TruncatedSeries random_series(int n, int order, int min_degree, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  TruncatedSeries s(n, order);
  for (int d = min_degree; d <= order; ++d)
    for (const auto &a : monomials_of_degree(n, d))
      s.add_term(a, make_rat(c(rng), 1 + (c(rng) + 4) % 3));
  return s;
}

// Untruncated bivariate polynomials: exponent pair -> coefficient.
using Poly2 = std::map<std::pair<int, int>, Rat>;

Poly2 poly_mul(const Poly2 &a, const Poly2 &b) {
  Poly2 out;
  for (const auto &[ea, ca] : a)
    for (const auto &[eb, cb] : b)
      out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  return out;
}

Poly2 to_poly(const TruncatedSeries &s) {
  Poly2 p;
  for (const auto &[alpha, c] : s.terms())
    p[{alpha.exponents[0], alpha.exponents[1]}] = c;
  return p;
}

// Expand f(tau) monomial by monomial with full products, truncate at the end.
TruncatedSeries oracle_compose(const TruncatedSeries &f, const DiffeoJet &tau) {
  Poly2 t0 = to_poly(tau.component(0)), t1 = to_poly(tau.component(1));
  Poly2 total;
  for (const auto &[alpha, c] : f.terms()) {
    Poly2 term{{{0, 0}, c}};
    for (int k = 0; k < alpha.exponents[0]; ++k)
      term = poly_mul(term, t0);
    for (int k = 0; k < alpha.exponents[1]; ++k)
      term = poly_mul(term, t1);
    for (const auto &[e, v] : term)
      total[e] += v;
  }
  TruncatedSeries out(2, f.order());
  for (const auto &[e, v] : total)
    out.add_term(MultiIndex({e.first, e.second}), v);
  return out;
}

} // namespace

TEST_CASE("products truncate") {
  auto p = (one(1, 2) + x(1, 2, 0)) * (one(1, 2) - x(1, 2, 0));
  CHECK(p == one(1, 2) - x(1, 2, 0) * x(1, 2, 0));

  std::mt19937_64 rng(1);
  auto a = random_series(2, 3, 0, rng);
  CHECK((a * TruncatedSeries(2, 3)).is_zero());

  auto s = x(2, 2, 0) + x(2, 2, 1);
  CHECK((s * s * s).is_zero());
}

TEST_CASE("mismatched operands are rejected") {
  CHECK_THROWS_AS(x(2, 2, 0) + x(3, 2, 0), Error);
  CHECK_THROWS_AS(x(2, 2, 0) * x(2, 3, 0), Error);
  try {
    (void)(x(2, 2, 0) * x(2, 3, 0));
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::OrderMismatch);
  }
}

TEST_CASE("stored terms respect the truncation order and contain no zeros") {
  TruncatedSeries s(2, 2);
  s.add_term(MultiIndex({3, 0}), 5);
  s.add_term(MultiIndex({1, 0}), 2);
  s.add_term(MultiIndex({1, 0}), -2);
  CHECK(s.is_zero());
}

TEST_CASE("composition examples") {
  auto id = DiffeoJet::identity(2, 3);
  CHECK(series_compose(x(2, 3, 0), id) == x(2, 3, 0));

  DiffeoJet shear({x(2, 3, 0) + x(2, 3, 1), x(2, 3, 1)});
  auto f = x(2, 3, 0) * x(2, 3, 0);
  auto expected = x(2, 3, 0) * x(2, 3, 0) + Rat(2) * x(2, 3, 0) * x(2, 3, 1) + x(2, 3, 1) * x(2, 3, 1);
  CHECK(series_compose(f, shear) == expected);
}

TEST_CASE("composition matches monomial-expansion oracle") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    auto f = random_series(2, 3, 0, rng);
    std::vector<TruncatedSeries> comps{random_series(2, 3, 1, rng), random_series(2, 3, 1, rng)};
    std::optional<DiffeoJet> tau;
    try {
      tau.emplace(comps);
    } catch (const Error &) {
      continue; // singular linear part
    }
    CHECK(series_compose(f, *tau) == oracle_compose(f, *tau));
  }
}

TEST_CASE("diffeomorphism group law") {
  std::mt19937_64 rng(5);
  auto random_diffeo = [&](int n, int order) {
    for (;;) {
      std::vector<TruncatedSeries> comps;
      for (int i = 0; i < n; ++i)
        comps.push_back(random_series(n, order, 1, rng));
      try {
        return DiffeoJet(comps);
      } catch (const Error &) {
      }
    }
  };
  auto tau = random_diffeo(2, 4);
  CHECK(diffeo_compose(DiffeoJet::identity(2, 4), tau) == tau);
  CHECK(diffeo_compose(tau, DiffeoJet::identity(2, 4)) == tau);
  CHECK(diffeo_compose(tau, diffeo_invert(tau)) == DiffeoJet::identity(2, 4));

  for (int t = 0; t < 5; ++t) {
    auto a = random_diffeo(2, 3), b = random_diffeo(2, 3), c = random_diffeo(2, 3);
    CHECK(diffeo_compose(diffeo_compose(a, b), c) == diffeo_compose(a, diffeo_compose(b, c)));
    auto ab = diffeo_compose(a, b);
    RatMatrix prod = a.linear_part() * b.linear_part();
    CHECK(ab.linear_part() == prod);
  }
}

TEST_CASE("inversion") {
  RatMatrix a(2, 2);
  a(0, 0) = 2; a(0, 1) = 1; a(1, 0) = 1; a(1, 1) = 1;
  auto inv = diffeo_invert(DiffeoJet::linear(a, 3));
  CHECK(inv == DiffeoJet::linear(*inverse(a), 3));

  DiffeoJet tau({x(1, 3, 0) + x(1, 3, 0) * x(1, 3, 0)});
  TruncatedSeries expected(1, 3);
  expected.add_term(MultiIndex({1}), 1);
  expected.add_term(MultiIndex({2}), -1);
  expected.add_term(MultiIndex({3}), 2);
  CHECK(diffeo_invert(tau).component(0) == expected);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 3; ++t) {
    std::vector<TruncatedSeries> comps;
    for (int i = 0; i < 3; ++i)
      comps.push_back(random_series(3, 4, 1, rng));
    std::optional<DiffeoJet> tau3;
    try {
      tau3.emplace(comps);
    } catch (const Error &) {
      continue;
    }
    auto sigma = diffeo_invert(*tau3);
    CHECK(diffeo_compose(*tau3, sigma) == DiffeoJet::identity(3, 4));
    CHECK(diffeo_compose(sigma, *tau3) == DiffeoJet::identity(3, 4));
  }
}

TEST_CASE("singular linear part is rejected") {
  auto xx = x(2, 2, 0);
  try {
    DiffeoJet bad({xx, xx});
    FAIL("expected SingularLinearPart");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::SingularLinearPart);
  }
  CHECK_THROWS_AS(DiffeoJet({one(2, 2), x(2, 2, 1)}), Error);
}
