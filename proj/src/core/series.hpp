#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace connmod {

// Exponent vector of a monomial x_1^{e_1} ... x_n^{e_n}.
struct MultiIndex {
  std::vector<int> exponents;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e) : exponents(std::move(e)) {}
  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }
  static MultiIndex unit(int n, int i);

  int dimension() const { return static_cast<int>(exponents.size()); }
  int degree() const;
  // alpha! = prod e_i!
  Int factorial() const;

  friend bool operator==(const MultiIndex &, const MultiIndex &) = default;
};

MultiIndex operator+(const MultiIndex &a, const MultiIndex &b);

// Graded lexicographic: total degree first, then lexicographic on exponents
// with x_1 highest.
struct GradedLex {
  bool operator()(const MultiIndex &a, const MultiIndex &b) const;
};

// All exponent vectors of the given total degree in n variables, graded-lex order.
std::vector<MultiIndex> monomials_of_degree(int n, int degree);

// Multiset of variable indices (sorted) <-> exponent vector.
MultiIndex index_tuple_to_multi(int n, const std::vector<int> &indices);

class TruncatedSeries {
public:
  using Terms = std::map<MultiIndex, Rat, GradedLex>;

  TruncatedSeries(int n, int order);

  static TruncatedSeries constant(int n, int order, const Rat &c);
  static TruncatedSeries variable(int n, int order, int i);
  static TruncatedSeries monomial(int n, int order, const MultiIndex &alpha, const Rat &c);

  int dimension() const { return n_; }
  int order() const { return order_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rat coefficient(const MultiIndex &alpha) const;
  // Terms of degree > order are dropped; zero coefficients are erased.
  void add_term(const MultiIndex &alpha, const Rat &c);
  void set_term(const MultiIndex &alpha, const Rat &c);

  TruncatedSeries truncated(int order) const;
  TruncatedSeries homogeneous_part(int degree) const;
  TruncatedSeries derivative(int i) const;
  Rat constant_term() const { return coefficient(MultiIndex::zero(n_)); }

  TruncatedSeries &operator+=(const TruncatedSeries &b);
  TruncatedSeries &operator-=(const TruncatedSeries &b);
  TruncatedSeries &operator*=(const Rat &c);

  friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
  int n_;
  int order_;
  Terms terms_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b);
TruncatedSeries operator-(TruncatedSeries a);
TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries operator*(TruncatedSeries a, const Rat &c);
TruncatedSeries operator*(const Rat &c, TruncatedSeries a);

TruncatedSeries series_add(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b);

class DiffeoJet;

// f o tau truncated at f's order.
TruncatedSeries series_compose(const TruncatedSeries &f, const DiffeoJet &tau);

// Jet at the origin of a local diffeomorphism fixing the origin: n component
// series with zero constant term and invertible linear part.
class DiffeoJet {
public:
  DiffeoJet(std::vector<TruncatedSeries> components);

  static DiffeoJet identity(int n, int order);
  static DiffeoJet linear(const RatMatrix &a, int order);

  int dimension() const { return static_cast<int>(components_.size()); }
  int order() const { return components_.front().order(); }
  const std::vector<TruncatedSeries> &components() const { return components_; }
  const TruncatedSeries &component(int i) const { return components_[i]; }
  const RatMatrix &linear_part() const { return linear_; }

  DiffeoJet truncated(int order) const;
  bool has_identity_linear_part() const;

  friend bool operator==(const DiffeoJet &a, const DiffeoJet &b) {
    return a.components_ == b.components_;
  }

private:
  std::vector<TruncatedSeries> components_;
  RatMatrix linear_;
};

// (outer o inner)(x) = outer(inner(x)).
DiffeoJet diffeo_compose(const DiffeoJet &outer, const DiffeoJet &inner);
DiffeoJet diffeo_invert(const DiffeoJet &tau);

} // namespace connmod
