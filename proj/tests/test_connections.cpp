#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "connection.hpp"

using namespace connmod;

namespace {

TruncatedSeries var(int n, int order, int i) { return TruncatedSeries::variable(n, order, i); }

} // namespace

TEST_CASE("linear changes preserve flatness") {
  std::mt19937_64 rng(1);
  auto flat = ConnectionJet::flat(3, 2, true);
  auto g = random_gl(3, rng);
  CHECK(transform(DiffeoJet::linear(g.matrix(), 4), flat) == flat);
}

TEST_CASE("flat connection in a quadratic chart, n = 1") {
  // y = tau(x) on a straight line x = v t: y'' = tau''(x) v^2 and y' = tau'(x) v,
  // so the geodesic equation y'' + Gamma(y) y'^2 = 0 gives
  // Gamma(y) = -tau''(x) / tau'(x)^2 at x = sigma(y).
  TruncatedSeries half_square(1, 2);
  half_square.add_term(MultiIndex({2}), Rat(1, 2));
  DiffeoJet tau({var(1, 2, 0) + half_square});
  auto out = transform(tau, ConnectionJet::flat(1, 0, true));
  CHECK(out.christoffel(0, 0, 0).constant_term() == -1);

  // higher order: same oracle as a series identity
  const int r = 2;
  TruncatedSeries t(1, r + 2);
  t.add_term(MultiIndex({1}), 1);
  t.add_term(MultiIndex({2}), Rat(1, 2));
  t.add_term(MultiIndex({3}), Rat(-1, 3));
  t.add_term(MultiIndex({4}), 2);
  DiffeoJet tau2({t});
  auto sigma = diffeo_invert(tau2);
  auto d1 = series_compose(t.derivative(0).truncated(r), sigma);
  auto d2 = series_compose(t.derivative(0).derivative(0).truncated(r), sigma);
  auto got = transform(tau2, ConnectionJet::flat(1, r, true)).christoffel(0, 0, 0);
  CHECK(got * d1 * d1 == -d2);
}

TEST_CASE("jets agreeing to order r+2 act identically") {
  std::mt19937_64 rng(2);
  auto jet = random_connection_jet(2, 1, false, rng);
  // identity 3-jet with a quartic tail
  TruncatedSeries tail(2, 4);
  tail.add_term(MultiIndex({4, 0}), 7);
  DiffeoJet tau({var(2, 4, 0) + tail, var(2, 4, 1)});
  CHECK(transform(tau, jet) == jet);
  CHECK(transform(DiffeoJet::identity(2, 3), jet) == jet);
}

TEST_CASE("transform is a left action and preserves the symmetry flag") {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 3; ++n)
    for (int r = 0; r <= 2; ++r) {
      bool sym = (n + r) % 2 == 0;
      auto jet = random_connection_jet(n, r, sym, rng);
      auto t1 = random_diffeo(n, r + 2, false, rng);
      auto t2 = random_diffeo(n, r + 2, false, rng);
      auto lhs = transform(diffeo_compose(t1, t2), jet);
      CHECK(lhs == transform(t1, transform(t2, jet)));
      CHECK(lhs.symmetric() == sym);
    }
}

TEST_CASE("transform argument checks") {
  std::mt19937_64 rng(4);
  auto jet = random_connection_jet(2, 2, false, rng);
  CHECK_THROWS_AS(transform(DiffeoJet::identity(2, 3), jet), Error);
  CHECK_THROWS_AS(transform(DiffeoJet::identity(3, 4), jet), Error);
}

TEST_CASE("symmetric flag is validated") {
  std::vector<TruncatedSeries> g(8, TruncatedSeries(2, 0));
  g[1] = TruncatedSeries::constant(2, 0, 1); // Gamma^0_{01}
  CHECK_THROWS_AS(ConnectionJet(2, 0, true, g), Error);
  CHECK_NOTHROW(ConnectionJet(2, 0, false, g));
}

TEST_CASE("torsion") {
  std::mt19937_64 rng(5);
  CHECK(torsion_at_origin(random_connection_jet(3, 1, true, rng)).is_zero());

  std::vector<TruncatedSeries> g(8, TruncatedSeries(2, 0));
  g[1] = TruncatedSeries::constant(2, 0, 1);
  auto t = torsion_at_origin(ConnectionJet(2, 0, false, g));
  CHECK(t.at({0, 0, 1}) == 1);
  CHECK(t.at({0, 1, 0}) == -1);
  t.at({0, 0, 1}) = 0;
  t.at({0, 1, 0}) = 0;
  CHECK(t.is_zero());

  for (int trial = 0; trial < 4; ++trial) {
    auto jet = random_connection_jet(2 + trial % 2, 1, false, rng);
    auto tau = random_diffeo(jet.dimension(), 3, false, rng);
    CHECK(torsion_at_origin(transform(tau, jet)) == gl_act(GlElement(tau.linear_part()), torsion_at_origin(jet)));
  }
}

TEST_CASE("curvature") {
  std::mt19937_64 rng(6);
  CHECK(curvature_at_origin(ConnectionJet::flat(3, 1, false)).is_zero());
  try {
    curvature_at_origin(ConnectionJet::flat(2, 0, true));
    FAIL("expected InsufficientOrder");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::InsufficientOrder);
  }
  for (int trial = 0; trial < 6; ++trial) {
    int n = 2 + trial % 2;
    bool sym = trial % 3 != 0;
    auto jet = random_connection_jet(n, 1 + trial % 2, sym, rng);
    auto r = curvature_at_origin(jet);
    CHECK(is_antisymmetric_in(r, 1, 2));
    auto tau = random_diffeo(n, jet.order() + 2, false, rng);
    CHECK(curvature_at_origin(transform(tau, jet)) == gl_act(GlElement(tau.linear_part()), r));
    if (sym)
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
              CHECK(r.at({k, i, j, l}) + r.at({k, l, i, j}) + r.at({k, j, l, i}) == 0);
  }
}

TEST_CASE("derivative tensor reads Taylor data with alpha! factors") {
  std::vector<TruncatedSeries> g(8, TruncatedSeries(2, 2));
  g[0].add_term(MultiIndex({2, 0}), 3);   // Gamma^0_{00} = 3 x_0^2
  g[0].add_term(MultiIndex({1, 1}), 5);   // + 5 x_0 x_1
  auto jet = ConnectionJet(2, 2, false, g);
  auto t = jet.derivative_tensor(2);
  CHECK(t.at({0, 0, 0, 0, 0}) == 6);
  CHECK(t.at({0, 0, 0, 0, 1}) == 5);
  CHECK(t.at({0, 0, 0, 1, 0}) == 5);
  CHECK(t.at({0, 0, 0, 1, 1}) == 0);
}
