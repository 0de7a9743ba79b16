#include "curvature2.hpp"

#include <array>

namespace connmod {

bool CurvatureLike::satisfies_invariants(const DenseTensor &t) {
  if (t.signature() != DenseTensor::mixed(t.dimension(), 3).signature())
    return false;
  if (!is_antisymmetric_in(t, 1, 2))
    return false;
  const int n = t.dimension();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          if (!is_zero(t.at({k, i, j, l}) + t.at({k, l, i, j}) + t.at({k, j, l, i})))
            return false;
  return true;
}

CurvatureLike::CurvatureLike(DenseTensor t) : tensor_(std::move(t)) {
  if (!satisfies_invariants(tensor_))
    throw Error(ErrorCode::SymmetryViolation, "tensor is not curvature-like");
}

CurvatureLike c1_to_curv(const NormalTensor &t) {
  if (t.order() != 1 || !t.symmetric_connection())
    throw Error(ErrorCode::SymmetryViolation, "c1_to_curv expects a symmetric normal tensor of order 1");
  const int n = t.dimension();
  const DenseTensor &g = t.tensor();
  DenseTensor r = DenseTensor::mixed(n, 3);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          r.at({k, i, j, l}) = g.at({k, j, l, i}) - g.at({k, i, l, j});
  return CurvatureLike(std::move(r));
}

NormalTensor curv_to_c1(const CurvatureLike &rc) {
  const int n = rc.dimension();
  const DenseTensor &r = rc.tensor();
  DenseTensor g = DenseTensor::mixed(n, 3);
  const Rat third(1, 3);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          g.at({k, i, j, l}) = third * (r.at({k, l, i, j}) + r.at({k, l, j, i}));
  return NormalTensor(1, true, std::move(g));
}

std::vector<CurvatureLike> curvature_like_basis(int n) {
  DenseTensor shape = DenseTensor::mixed(n, 3);
  IntegerRowEchelon ech(shape.size());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          SparseRatRow anti{{shape.flat(std::array{k, i, j, l}), Rat(1)},
                            {shape.flat(std::array{k, j, i, l}), Rat(1)}};
          ech.add(anti);
          SparseRatRow bianchi{{shape.flat(std::array{k, i, j, l}), Rat(1)},
                               {shape.flat(std::array{k, l, i, j}), Rat(1)},
                               {shape.flat(std::array{k, j, l, i}), Rat(1)}};
          ech.add(bianchi);
        }
  std::vector<CurvatureLike> out;
  for (auto &v : ech.kernel())
    out.emplace_back(DenseTensor(n, shape.signature(), std::move(v)));
  return out;
}

DenseTensor ricci(const CurvatureLike &rc) {
  const int n = rc.dimension();
  DenseTensor out(n, {Variance::Cov, Variance::Cov});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat acc = 0;
      for (int k = 0; k < n; ++k)
        acc += rc.tensor().at({k, i, k, j});
      out.at({i, j}) = acc;
    }
  return out;
}

RicciSplit ricci_split(const CurvatureLike &r) {
  DenseTensor rho = ricci(r);
  std::array<int, 2> both{0, 1};
  return {symmetrize(rho, both), antisymmetrize(rho, both)};
}

RatMatrix ricci_matrix_dim2(const std::vector<CurvatureLike> &basis) {
  RatMatrix m(basis.size(), 4);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (basis[b].dimension() != 2)
      throw Error(ErrorCode::DimensionMismatch, "ricci_matrix_dim2 needs n = 2");
    auto split = ricci_split(basis[b]);
    m(b, 0) = split.symmetric_part.at({0, 0});
    m(b, 1) = split.symmetric_part.at({0, 1});
    m(b, 2) = split.symmetric_part.at({1, 1});
    m(b, 3) = split.antisymmetric_part.at({0, 1});
  }
  return m;
}

Inertia inertia(const RatMatrix &sym) {
  if (sym.rows() != sym.cols())
    throw Error(ErrorCode::DimensionMismatch, "inertia of non-square matrix");
  RatMatrix a = sym;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != a(j, i))
        throw Error(ErrorCode::SymmetryViolation, "inertia needs a symmetric matrix");
  Inertia out;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      if (!done[i] && !is_zero(a(i, i)))
        p = i;
    if (p == n) {
      // all remaining diagonal entries vanish: e_i <- e_i + e_j makes a_ii = 2 a_ij
      std::size_t bi = n, bj = n;
      for (std::size_t i = 0; i < n && bi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && !is_zero(a(i, j))) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == n)
        break;
      for (std::size_t k = 0; k < n; ++k)
        a(bi, k) += a(bj, k);
      for (std::size_t k = 0; k < n; ++k)
        a(k, bi) += a(k, bj);
      p = bi;
    }
    done[p] = true;
    (sgn(a(p, p)) > 0 ? out.positive : out.negative)++;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || is_zero(a(i, p)))
        continue;
      Rat f = a(i, p) / a(p, p);
      for (std::size_t k = 0; k < n; ++k)
        a(i, k) -= f * a(p, k);
      for (std::size_t k = 0; k < n; ++k)
        a(k, i) -= f * a(k, p);
    }
  }
  out.zero = static_cast<int>(n) - out.positive - out.negative;
  return out;
}

const char *isotropy_label_name(IsotropyLabel l) {
  switch (l) {
  case IsotropyLabel::O2: return "O2";
  case IsotropyLabel::O11: return "O11";
  case IsotropyLabel::Larger: return "larger";
  }
  return "unknown";
}

PairIsotropy pair_isotropy(const DenseTensor &t2, const DenseTensor &w2) {
  const std::vector<Variance> cov2{Variance::Cov, Variance::Cov};
  if (t2.dimension() != 2 || w2.dimension() != 2 || t2.signature() != cov2 || w2.signature() != cov2)
    throw Error(ErrorCode::InvalidArgument, "pair_isotropy needs two covariant 2-tensors with n = 2");
  std::array<int, 2> both{0, 1};
  if (!is_symmetric_in(t2, both))
    throw Error(ErrorCode::SymmetryViolation, "pair_isotropy: T2 must be symmetric");
  if (!is_antisymmetric_in(w2, 0, 1))
    throw Error(ErrorCode::SymmetryViolation, "pair_isotropy: w2 must be antisymmetric");
  PairIsotropy out;
  out.lie_dim = stabilizer_dimension({t2, w2}, 2);
  RatMatrix m(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m(i, j) = t2.at({i, j});
  Inertia in = inertia(m);
  if (in.zero > 0)
    out.label = IsotropyLabel::Larger;
  else if (in.positive == 2 || in.negative == 2)
    out.label = IsotropyLabel::O2;
  else
    out.label = IsotropyLabel::O11;
  return out;
}

} // namespace connmod
