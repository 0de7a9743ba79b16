#include "linalg.hpp"

#include <algorithm>

namespace connmod {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    out(i, i) = 1;
  return out;
}

RatMatrix operator*(const RatMatrix &a, const RatMatrix &b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k)))
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RatMatrix transpose(const RatMatrix &a) {
  RatMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(j, i) = a(i, j);
  return out;
}

void IntegerRowEchelon::make_primitive(IntRow &v) {
  if (v.empty())
    return;
  Int g = 0;
  for (const auto &[col, x] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1)
      break;
  }
  if (sgn(v.front().second) < 0)
    g = -g;
  if (g != 1)
    for (auto &[col, x] : v)
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// v <- (p/g) v - (a/g) P where a = v[c], p = P[c], g = gcd(a, p).
static void eliminate(std::vector<std::pair<std::size_t, Int>> &v, std::size_t at,
                      const std::vector<std::pair<std::size_t, Int>> &pivot) {
  const Int &p = pivot.front().second;
  Int a = v[at].second;
  Int g = gcd(a, p);
  Int sv = p / g;
  Int sp = a / g;
  std::vector<std::pair<std::size_t, Int>> out;
  out.reserve(v.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < v.size() && v[i].first < pivot[j].first)) {
      out.emplace_back(v[i].first, sv * v[i].second);
      ++i;
    } else if (i == v.size() || pivot[j].first < v[i].first) {
      out.emplace_back(pivot[j].first, -sp * pivot[j].second);
      ++j;
    } else {
      Int x = sv * v[i].second - sp * pivot[j].second;
      if (x != 0)
        out.emplace_back(v[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

void IntegerRowEchelon::reduce(IntRow &v) const {
  std::size_t i = 0;
  while (i < v.size()) {
    auto it = lead_to_pivot_.find(v[i].first);
    if (it == lead_to_pivot_.end()) {
      ++i;
      continue;
    }
    // Entries before i are unaffected: the pivot row has no columns below its lead.
    eliminate(v, i, pivots_[it->second]);
  }
  make_primitive(v);
}

bool IntegerRowEchelon::add(const SparseRatRow &row) {
  Int den = 1;
  for (const auto &[col, x] : row) {
    if (col >= cols_)
      throw Error(ErrorCode::DimensionMismatch, "row column out of range");
    if (!is_zero(x))
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  IntRow v;
  v.reserve(row.size());
  for (const auto &[col, x] : row)
    if (!is_zero(x))
      v.emplace_back(col, Int(x.get_num() * (den / x.get_den())));
  std::sort(v.begin(), v.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
  // merge duplicate columns
  IntRow merged;
  for (auto &e : v) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const auto &e) { return e.second == 0; });
  reduce(merged);
  if (merged.empty())
    return false;
  lead_to_pivot_.emplace(merged.front().first, pivots_.size());
  pivots_.push_back(std::move(merged));
  return true;
}

bool IntegerRowEchelon::add_dense(const RatVector &row) {
  SparseRatRow sparse;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!is_zero(row[j]))
      sparse.emplace_back(j, row[j]);
  return add(sparse);
}

std::vector<RatVector> IntegerRowEchelon::kernel() const {
  // Back-substitute to reduced form, highest lead first.
  std::vector<IntRow> reduced(pivots_.size());
  std::map<std::size_t, std::size_t> done;
  for (auto it = lead_to_pivot_.rbegin(); it != lead_to_pivot_.rend(); ++it) {
    IntRow v = pivots_[it->second];
    std::size_t i = 1;
    while (i < v.size()) {
      auto d = done.find(v[i].first);
      if (d == done.end()) {
        ++i;
        continue;
      }
      eliminate(v, i, reduced[d->second]);
    }
    make_primitive(v);
    reduced[it->second] = std::move(v);
    done.emplace(it->first, it->second);
  }

  std::vector<RatVector> basis;
  std::vector<bool> is_pivot(cols_, false);
  for (const auto &[lead, idx] : lead_to_pivot_)
    is_pivot[lead] = true;
  // column -> list of (pivot lead, pivot value, entry)
  std::vector<std::vector<std::size_t>> rows_with_col(cols_);
  for (std::size_t r = 0; r < reduced.size(); ++r)
    for (std::size_t k = 1; k < reduced[r].size(); ++k)
      rows_with_col[reduced[r][k].first].push_back(r);
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f])
      continue;
    RatVector x(cols_);
    x[f] = 1;
    for (std::size_t r : rows_with_col[f]) {
      const auto &row = reduced[r];
      auto entry = std::lower_bound(row.begin() + 1, row.end(), f,
                                    [](const auto &e, std::size_t c) { return e.first < c; });
      Rat val(entry->second, row.front().second);
      val.canonicalize();
      x[row.front().first] = -val;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank(const RatMatrix &m) {
  IntegerRowEchelon ech(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRatRow row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j)))
        row.emplace_back(j, m(i, j));
    ech.add(row);
  }
  return ech.rank();
}

std::vector<RatVector> kernel(const RatMatrix &m) {
  IntegerRowEchelon ech(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRatRow row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j)))
        row.emplace_back(j, m(i, j));
    ech.add(row);
  }
  return ech.kernel();
}

Rat determinant(const RatMatrix &m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a(p, c)))
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c)))
        continue;
      Rat f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j)
        a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix &m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a(p, c)))
      ++p;
    if (p == n)
      return std::nullopt;
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rat piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(a(i, c)))
        continue;
      Rat f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

} // namespace connmod
