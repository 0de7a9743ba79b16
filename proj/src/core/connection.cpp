#include "connection.hpp"

#include <string>

namespace connmod {

ConnectionJet::ConnectionJet(int n, int order, bool symmetric, std::vector<TruncatedSeries> gamma)
    : n_(n), order_(order), symmetric_(symmetric), gamma_(std::move(gamma)) {
  if (n < 1 || order < 0)
    throw Error(ErrorCode::InvalidArgument, "connection jet needs n >= 1 and order >= 0");
  if (gamma_.size() != static_cast<std::size_t>(n) * n * n)
    throw Error(ErrorCode::DimensionMismatch, "connection jet needs n^3 Christoffel series");
  for (const auto &s : gamma_) {
    if (s.dimension() != n)
      throw Error(ErrorCode::DimensionMismatch, "Christoffel series dimension differs from n");
    if (s.order() != order)
      throw Error(ErrorCode::OrderMismatch, "Christoffel series order differs from jet order");
  }
  if (symmetric_)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (!(christoffel(k, i, j) == christoffel(k, j, i)))
            throw Error(ErrorCode::SymmetryViolation, "symmetric connection jet has Gamma^" +
                                                          std::to_string(k) + "_{" + std::to_string(i) +
                                                          std::to_string(j) + "} != Gamma^" +
                                                          std::to_string(k) + "_{" + std::to_string(j) +
                                                          std::to_string(i) + "}");
}

ConnectionJet ConnectionJet::flat(int n, int order, bool symmetric) {
  return ConnectionJet(n, order, symmetric,
                       std::vector<TruncatedSeries>(static_cast<std::size_t>(n) * n * n, TruncatedSeries(n, order)));
}

DenseTensor ConnectionJet::derivative_tensor(int m) const {
  if (m < 0 || m > order_)
    throw Error(ErrorCode::InsufficientOrder, "derivative tensor of order " + std::to_string(m) +
                                                  " needs jet order >= " + std::to_string(m));
  DenseTensor t = DenseTensor::mixed(n_, m + 2);
  for (std::size_t f = 0; f < t.size(); ++f) {
    auto idx = t.unflat(f);
    std::vector<int> as(idx.begin() + 3, idx.end());
    MultiIndex alpha = index_tuple_to_multi(n_, as);
    Rat c = christoffel(idx[0], idx[1], idx[2]).coefficient(alpha);
    if (!is_zero(c))
      t.entries()[f] = c * alpha.factorial();
  }
  return t;
}

ConnectionJet transform(const DiffeoJet &tau, const ConnectionJet &jet) {
  const int n = jet.dimension();
  const int r = jet.order();
  if (tau.dimension() != n)
    throw Error(ErrorCode::DimensionMismatch, "transform: dimension mismatch");
  if (tau.order() < r + 2)
    throw Error(ErrorCode::OrderMismatch, "transform: diffeomorphism jet order " + std::to_string(tau.order()) +
                                              " < connection order + 2 = " + std::to_string(r + 2));
  const DiffeoJet t = tau.truncated(r + 2);
  const DiffeoJet sigma = diffeo_invert(t); // x = sigma(y)

  // dx^a/dy^i, d^2 x^c/dy^i dy^j, (dy^k/dx^c)(sigma(y)), Gamma(sigma(y)); all at order r.
  std::vector<TruncatedSeries> jac, hess, dtau, gam;
  jac.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i)
      jac.push_back(sigma.component(a).derivative(i).truncated(r));
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        hess.push_back(sigma.component(c).derivative(i).derivative(j).truncated(r));
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < n; ++c)
      dtau.push_back(series_compose(t.component(k).derivative(c).truncated(r), sigma));
  for (const auto &g : jet.christoffels())
    gam.push_back(g.is_zero() ? g : series_compose(g, sigma));

  auto J = [&](int a, int i) -> const TruncatedSeries & { return jac[static_cast<std::size_t>(a) * n + i]; };
  auto at3 = [n](int a, int b, int c) { return (static_cast<std::size_t>(a) * n + b) * n + c; };

  // P[c][i][b] = sum_a J[a][i] Gamma^c_{ab}(sigma)
  std::vector<TruncatedSeries> p(static_cast<std::size_t>(n) * n * n, TruncatedSeries(n, r));
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const auto &g = gam[at3(c, a, b)];
        if (g.is_zero())
          continue;
        for (int i = 0; i < n; ++i)
          p[at3(c, i, b)] += J(a, i) * g;
      }
  // Q[c][i][j] = sum_b P[c][i][b] J[b][j] + d^2 x^c / dy^i dy^j
  std::vector<TruncatedSeries> q = hess;
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < n; ++i)
      for (int b = 0; b < n; ++b) {
        const auto &pb = p[at3(c, i, b)];
        if (pb.is_zero())
          continue;
        for (int j = 0; j < n; ++j)
          q[at3(c, i, j)] += pb * J(b, j);
      }
  std::vector<TruncatedSeries> out(static_cast<std::size_t>(n) * n * n, TruncatedSeries(n, r));
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < n; ++c) {
      const auto &d = dtau[static_cast<std::size_t>(k) * n + c];
      if (d.is_zero())
        continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const auto &qc = q[at3(c, i, j)];
          if (!qc.is_zero())
            out[at3(k, i, j)] += d * qc;
        }
    }
  return ConnectionJet(n, r, jet.symmetric(), std::move(out));
}

DenseTensor torsion_at_origin(const ConnectionJet &jet) {
  const int n = jet.dimension();
  DenseTensor t = DenseTensor::mixed(n, 2);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        t.at({k, i, j}) = jet.christoffel(k, i, j).constant_term() - jet.christoffel(k, j, i).constant_term();
  return t;
}

DenseTensor curvature_at_origin(const ConnectionJet &jet) {
  if (jet.order() < 1)
    throw Error(ErrorCode::InsufficientOrder, "curvature needs a jet of order >= 1");
  const int n = jet.dimension();
  DenseTensor g0 = jet.derivative_tensor(0);
  DenseTensor g1 = jet.derivative_tensor(1); // g1^k_{jl a} = d_a Gamma^k_{jl}
  DenseTensor r = DenseTensor::mixed(n, 3);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          Rat v = g1.at({k, j, l, i}) - g1.at({k, i, l, j});
          for (int s = 0; s < n; ++s)
            v += g0.at({k, i, s}) * g0.at({s, j, l}) - g0.at({k, j, s}) * g0.at({s, i, l});
          r.at({k, i, j, l}) = v;
        }
  return r;
}

ConnectionJet random_connection_jet(int n, int order, bool symmetric, std::mt19937_64 &rng, int lo, int hi) {
  std::uniform_int_distribution<int> coeff(lo, hi);
  std::vector<TruncatedSeries> gamma(static_cast<std::size_t>(n) * n * n, TruncatedSeries(n, order));
  auto at3 = [n](int a, int b, int c) { return (static_cast<std::size_t>(a) * n + b) * n + c; };
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = symmetric ? i : 0; j < n; ++j) {
        TruncatedSeries s(n, order);
        for (int d = 0; d <= order; ++d)
          for (const auto &alpha : monomials_of_degree(n, d))
            s.add_term(alpha, coeff(rng));
        gamma[at3(k, i, j)] = s;
        if (symmetric)
          gamma[at3(k, j, i)] = s;
      }
  return ConnectionJet(n, order, symmetric, std::move(gamma));
}

DiffeoJet random_diffeo(int n, int order, bool identity_linear, std::mt19937_64 &rng, int lo, int hi) {
  std::uniform_int_distribution<int> coeff(lo, hi);
  RatMatrix linear = identity_linear ? RatMatrix::identity(static_cast<std::size_t>(n))
                                     : random_gl(n, rng).matrix();
  std::vector<TruncatedSeries> comps;
  for (int i = 0; i < n; ++i) {
    TruncatedSeries s(n, order);
    for (int j = 0; j < n; ++j)
      s.add_term(MultiIndex::unit(n, j), linear(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    for (int d = 2; d <= order; ++d)
      for (const auto &alpha : monomials_of_degree(n, d))
        s.add_term(alpha, coeff(rng));
    comps.push_back(std::move(s));
  }
  return DiffeoJet(std::move(comps));
}

} // namespace connmod
