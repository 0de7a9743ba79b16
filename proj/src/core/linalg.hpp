#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace connmod {

using RatVector = std::vector<Rat>;

// Dense row-major matrix over Q.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const RatMatrix &, const RatMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

RatMatrix operator*(const RatMatrix &a, const RatMatrix &b);
RatMatrix transpose(const RatMatrix &a);

using SparseRatRow = std::vector<std::pair<std::size_t, Rat>>;

// Incremental row echelon form over Z. Rows are cleared of denominators and
// kept primitive (content 1, positive lead), so elimination never leaves the
// integers and intermediate growth is bounded by the gcd division after each
// combination. Rows are sparse; columns untouched by a pivot cost nothing.
class IntegerRowEchelon {
public:
  explicit IntegerRowEchelon(std::size_t cols) : cols_(cols) {}

  // Returns true iff the row was independent of the rows added so far.
  bool add(const SparseRatRow &row);
  bool add_dense(const RatVector &row);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }

  // Basis of {x : row . x = 0 for every added row}, one vector per free column.
  std::vector<RatVector> kernel() const;

private:
  using IntRow = std::vector<std::pair<std::size_t, Int>>;

  void reduce(IntRow &v) const;
  static void make_primitive(IntRow &v);

  std::size_t cols_;
  std::vector<IntRow> pivots_;
  std::map<std::size_t, std::size_t> lead_to_pivot_;
};

std::size_t rank(const RatMatrix &m);
std::vector<RatVector> kernel(const RatMatrix &m);

Rat determinant(const RatMatrix &m);
std::optional<RatMatrix> inverse(const RatMatrix &m);

} // namespace connmod
