#include "series.hpp"

#include <numeric>
#include <string>

namespace connmod {

MultiIndex MultiIndex::unit(int n, int i) {
  MultiIndex m = zero(n);
  m.exponents[i] = 1;
  return m;
}

int MultiIndex::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

Int MultiIndex::factorial() const {
  Int out = 1;
  for (int e : exponents)
    out *= connmod::factorial(static_cast<unsigned long>(e));
  return out;
}

MultiIndex operator+(const MultiIndex &a, const MultiIndex &b) {
  MultiIndex out = a;
  for (std::size_t i = 0; i < out.exponents.size(); ++i)
    out.exponents[i] += b.exponents[i];
  return out;
}

bool GradedLex::operator()(const MultiIndex &a, const MultiIndex &b) const {
  int da = a.degree(), db = b.degree();
  if (da != db)
    return da < db;
  // x_1^2 precedes x_1 x_2 precedes x_2^2
  return a.exponents > b.exponents;
}

static void fill_monomials(int n, int var, int remaining, std::vector<int> &cur,
                           std::vector<MultiIndex> &out) {
  if (var == n - 1) {
    cur[var] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = e;
    fill_monomials(n, var + 1, remaining - e, cur, out);
  }
}

std::vector<MultiIndex> monomials_of_degree(int n, int degree) {
  std::vector<MultiIndex> out;
  if (n <= 0)
    return out;
  std::vector<int> cur(n, 0);
  fill_monomials(n, 0, degree, cur, out);
  return out;
}

MultiIndex index_tuple_to_multi(int n, const std::vector<int> &indices) {
  MultiIndex m = MultiIndex::zero(n);
  for (int a : indices)
    ++m.exponents[a];
  return m;
}

TruncatedSeries::TruncatedSeries(int n, int order) : n_(n), order_(order) {
  if (n < 1)
    throw Error(ErrorCode::InvalidArgument, "series dimension must be positive");
  if (order < 0)
    throw Error(ErrorCode::InvalidArgument, "series order must be non-negative");
}

TruncatedSeries TruncatedSeries::constant(int n, int order, const Rat &c) {
  TruncatedSeries s(n, order);
  s.add_term(MultiIndex::zero(n), c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(int n, int order, int i) {
  TruncatedSeries s(n, order);
  s.add_term(MultiIndex::unit(n, i), 1);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int n, int order, const MultiIndex &alpha, const Rat &c) {
  TruncatedSeries s(n, order);
  s.add_term(alpha, c);
  return s;
}

Rat TruncatedSeries::coefficient(const MultiIndex &alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rat(0) : it->second;
}

void TruncatedSeries::add_term(const MultiIndex &alpha, const Rat &c) {
  if (alpha.dimension() != n_)
    throw Error(ErrorCode::DimensionMismatch, "multi-index length differs from series dimension");
  if (alpha.degree() > order_ || connmod::is_zero(c))
    return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (connmod::is_zero(it->second))
      terms_.erase(it);
  }
}

void TruncatedSeries::set_term(const MultiIndex &alpha, const Rat &c) {
  if (alpha.dimension() != n_)
    throw Error(ErrorCode::DimensionMismatch, "multi-index length differs from series dimension");
  terms_.erase(alpha);
  add_term(alpha, c);
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  TruncatedSeries out(n_, order);
  for (const auto &[alpha, c] : terms_)
    out.add_term(alpha, c);
  return out;
}

TruncatedSeries TruncatedSeries::homogeneous_part(int degree) const {
  TruncatedSeries out(n_, order_);
  for (const auto &[alpha, c] : terms_)
    if (alpha.degree() == degree)
      out.add_term(alpha, c);
  return out;
}

TruncatedSeries TruncatedSeries::derivative(int i) const {
  TruncatedSeries out(n_, order_ > 0 ? order_ - 1 : 0);
  for (const auto &[alpha, c] : terms_) {
    int e = alpha.exponents[i];
    if (e == 0)
      continue;
    MultiIndex beta = alpha;
    --beta.exponents[i];
    out.add_term(beta, c * e);
  }
  return out;
}

static void check_compatible(const TruncatedSeries &a, const TruncatedSeries &b) {
  if (a.dimension() != b.dimension())
    throw Error(ErrorCode::DimensionMismatch,
                "series dimensions differ: " + std::to_string(a.dimension()) + " vs " +
                    std::to_string(b.dimension()));
  if (a.order() != b.order())
    throw Error(ErrorCode::OrderMismatch, "series orders differ: " + std::to_string(a.order()) +
                                              " vs " + std::to_string(b.order()));
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &b) {
  check_compatible(*this, b);
  for (const auto &[alpha, c] : b.terms_)
    add_term(alpha, c);
  return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &b) {
  check_compatible(*this, b);
  for (const auto &[alpha, c] : b.terms_)
    add_term(alpha, -c);
  return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const Rat &c) {
  if (connmod::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto &[alpha, x] : terms_)
    x *= c;
  return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
TruncatedSeries operator-(TruncatedSeries a) { return a *= Rat(-1); }
TruncatedSeries operator*(TruncatedSeries a, const Rat &c) { return a *= c; }
TruncatedSeries operator*(const Rat &c, TruncatedSeries a) { return a *= c; }

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) {
  check_compatible(a, b);
  TruncatedSeries out(a.dimension(), a.order());
  for (const auto &[alpha, ca] : a.terms()) {
    int da = alpha.degree();
    for (const auto &[beta, cb] : b.terms()) {
      if (da + beta.degree() > a.order())
        break; // graded order: the rest of b is at least this degree
      out.add_term(alpha + beta, ca * cb);
    }
  }
  return out;
}

TruncatedSeries series_add(const TruncatedSeries &a, const TruncatedSeries &b) { return a + b; }
TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b) { return a * b; }

TruncatedSeries series_compose(const TruncatedSeries &f, const DiffeoJet &tau) {
  const int n = f.dimension();
  const int order = f.order();
  if (tau.dimension() != n)
    throw Error(ErrorCode::DimensionMismatch, "composition: dimension mismatch");
  if (tau.order() < order)
    throw Error(ErrorCode::OrderMismatch, "composition: diffeomorphism jet order " +
                                              std::to_string(tau.order()) + " < series order " +
                                              std::to_string(order));
  // powers[i][k] = tau_i^k truncated at `order`
  std::vector<std::vector<TruncatedSeries>> powers(n);
  for (int i = 0; i < n; ++i) {
    TruncatedSeries base = tau.component(i).truncated(order);
    powers[i].push_back(TruncatedSeries::constant(n, order, 1));
    for (int k = 1; k <= order; ++k)
      powers[i].push_back(powers[i].back() * base);
  }
  TruncatedSeries out(n, order);
  for (const auto &[alpha, c] : f.terms()) {
    TruncatedSeries term = TruncatedSeries::constant(n, order, c);
    for (int i = 0; i < n; ++i)
      if (alpha.exponents[i] > 0)
        term = term * powers[i][alpha.exponents[i]];
    out += term;
  }
  return out;
}

DiffeoJet::DiffeoJet(std::vector<TruncatedSeries> components) : components_(std::move(components)) {
  if (components_.empty())
    throw Error(ErrorCode::InvalidArgument, "diffeomorphism jet needs at least one component");
  const int n = static_cast<int>(components_.size());
  const int order = components_.front().order();
  if (order < 1)
    throw Error(ErrorCode::InvalidArgument, "diffeomorphism jet order must be at least 1");
  for (const auto &c : components_) {
    if (c.dimension() != n)
      throw Error(ErrorCode::DimensionMismatch, "diffeomorphism component dimension differs from component count");
    if (c.order() != order)
      throw Error(ErrorCode::OrderMismatch, "diffeomorphism components have different orders");
    if (!connmod::is_zero(c.constant_term()))
      throw Error(ErrorCode::InvalidArgument, "diffeomorphism jet must fix the origin");
  }
  linear_ = RatMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      linear_(i, j) = components_[i].coefficient(MultiIndex::unit(n, j));
  if (connmod::is_zero(determinant(linear_)))
    throw Error(ErrorCode::SingularLinearPart, "diffeomorphism jet has singular linear part");
}

DiffeoJet DiffeoJet::identity(int n, int order) {
  return linear(RatMatrix::identity(static_cast<std::size_t>(n)), order);
}

DiffeoJet DiffeoJet::linear(const RatMatrix &a, int order) {
  const int n = static_cast<int>(a.rows());
  std::vector<TruncatedSeries> comps;
  for (int i = 0; i < n; ++i) {
    TruncatedSeries s(n, order);
    for (int j = 0; j < n; ++j)
      s.add_term(MultiIndex::unit(n, j), a(i, j));
    comps.push_back(std::move(s));
  }
  return DiffeoJet(std::move(comps));
}

DiffeoJet DiffeoJet::truncated(int order) const {
  std::vector<TruncatedSeries> comps;
  for (const auto &c : components_)
    comps.push_back(c.truncated(order));
  return DiffeoJet(std::move(comps));
}

bool DiffeoJet::has_identity_linear_part() const {
  return linear_ == RatMatrix::identity(linear_.rows());
}

DiffeoJet diffeo_compose(const DiffeoJet &outer, const DiffeoJet &inner) {
  if (outer.dimension() != inner.dimension())
    throw Error(ErrorCode::DimensionMismatch, "diffeo_compose: dimension mismatch");
  if (outer.order() != inner.order())
    throw Error(ErrorCode::OrderMismatch, "diffeo_compose: order mismatch");
  std::vector<TruncatedSeries> comps;
  for (const auto &c : outer.components())
    comps.push_back(series_compose(c, inner));
  return DiffeoJet(std::move(comps));
}

DiffeoJet diffeo_invert(const DiffeoJet &tau) {
  const int n = tau.dimension();
  const int order = tau.order();
  auto a_inv = inverse(tau.linear_part());
  if (!a_inv)
    throw Error(ErrorCode::SingularLinearPart, "diffeo_invert: singular linear part");
  // tau = A x + N(x); sigma = A^{-1}(y - N(sigma)), one degree gained per pass.
  std::vector<TruncatedSeries> nonlinear;
  for (int i = 0; i < n; ++i) {
    TruncatedSeries s = tau.component(i);
    for (int j = 0; j < n; ++j)
      s.set_term(MultiIndex::unit(n, j), 0);
    nonlinear.push_back(std::move(s));
  }
  DiffeoJet sigma = DiffeoJet::linear(*a_inv, order);
  for (int pass = 1; pass < order; ++pass) {
    std::vector<TruncatedSeries> rhs;
    for (int i = 0; i < n; ++i)
      rhs.push_back(TruncatedSeries::variable(n, order, i) - series_compose(nonlinear[i], sigma));
    std::vector<TruncatedSeries> next;
    for (int i = 0; i < n; ++i) {
      TruncatedSeries s(n, order);
      for (int j = 0; j < n; ++j)
        if (!is_zero((*a_inv)(i, j)))
          s += rhs[j] * (*a_inv)(i, j);
      next.push_back(std::move(s));
    }
    sigma = DiffeoJet(std::move(next));
  }
  return sigma;
}

} // namespace connmod
