#include "reduction.hpp"

#include <algorithm>
#include <string>

namespace connmod {

NormalTensorTuple::NormalTensorTuple(int n, int order, bool symmetric, std::vector<NormalTensor> tensors)
    : n_(n), order_(order), symmetric_(symmetric), tensors_(std::move(tensors)) {
  if (n < 1 || order < 0)
    throw Error(ErrorCode::InvalidArgument, "normal tensor tuple needs n >= 1 and order >= 0");
  if (tensors_.size() != static_cast<std::size_t>(order) + 1)
    throw Error(ErrorCode::DimensionMismatch, "normal tensor tuple of order " + std::to_string(order) +
                                                  " needs " + std::to_string(order + 1) + " tensors");
  for (std::size_t m = 0; m < tensors_.size(); ++m) {
    const auto &t = tensors_[m];
    if (t.dimension() != n)
      throw Error(ErrorCode::DimensionMismatch, "normal tensor dimension differs from tuple dimension");
    if (t.order() != static_cast<int>(m))
      throw Error(ErrorCode::SymmetryViolation, "tuple entry " + std::to_string(m) + " has order " +
                                                    std::to_string(t.order()));
    if (t.symmetric_connection() != symmetric)
      throw Error(ErrorCode::SymmetryViolation, "tuple entry " + std::to_string(m) + " has the wrong symmetry flag");
  }
}

NormalTensorTuple NormalTensorTuple::zero(int n, int order, bool symmetric) {
  std::vector<NormalTensor> ts;
  for (int m = 0; m <= order; ++m)
    ts.push_back(NormalTensor::zero(n, m, symmetric));
  return NormalTensorTuple(n, order, symmetric, std::move(ts));
}

NormalTensorTuple NormalTensorTuple::random(int n, int order, bool symmetric, std::mt19937_64 &rng) {
  std::vector<NormalTensor> ts;
  for (int m = 0; m <= order; ++m)
    ts.push_back(random_normal_tensor(normal_basis(n, m, symmetric), n, m, symmetric, rng));
  return NormalTensorTuple(n, order, symmetric, std::move(ts));
}

bool NormalTensorTuple::is_zero() const {
  for (const auto &t : tensors_)
    if (!t.tensor().is_zero())
      return false;
  return true;
}

NormalTensorTuple gl_act(const GlElement &g, const NormalTensorTuple &t) {
  std::vector<NormalTensor> ts;
  for (const auto &x : t.tensors())
    ts.push_back(gl_act(g, x));
  return NormalTensorTuple(t.dimension(), t.order(), t.symmetric(), std::move(ts));
}

std::vector<DenseTensor> normality_defect(const ConnectionJet &jet) {
  std::vector<DenseTensor> out;
  for (int m = 0; m <= jet.order(); ++m)
    out.push_back(symmetrize(jet.derivative_tensor(m), slot_range(1, m + 2)));
  return out;
}

bool is_normal_chart(const ConnectionJet &jet) {
  for (const auto &d : normality_defect(jet))
    if (!d.is_zero())
      return false;
  return true;
}

Normalization normalize(const ConnectionJet &jet) {
  const int n = jet.dimension();
  const int r = jet.order();
  std::vector<TruncatedSeries> tau = DiffeoJet::identity(n, r + 2).components();
  for (int m = 0; m <= r; ++m) {
    ConnectionJet current = transform(DiffeoJet(tau), jet);
    // Degree-(m+2) part of sum_ij y_i y_j Gamma^k_{ij}; a homogeneous h of that
    // degree changes it by -(m+2)(m+1) h and leaves lower orders alone.
    const Rat scale(1, static_cast<unsigned long>((m + 2) * (m + 1)));
    for (int k = 0; k < n; ++k) {
      TruncatedSeries defect(n, r + 2);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (const auto &[alpha, c] : current.christoffel(k, i, j).terms())
            if (alpha.degree() == m)
              defect.add_term(alpha + MultiIndex::unit(n, i) + MultiIndex::unit(n, j), c);
      if (!defect.is_zero())
        tau[static_cast<std::size_t>(k)] += defect * scale;
    }
  }
  DiffeoJet t(std::move(tau));
  ConnectionJet normal = transform(t, jet);
  return {std::move(t), std::move(normal)};
}

static NormalTensorTuple read_normal_tensors(const ConnectionJet &normal) {
  std::vector<NormalTensor> ts;
  for (int m = 0; m <= normal.order(); ++m)
    ts.emplace_back(m, normal.symmetric(), normal.derivative_tensor(m));
  return NormalTensorTuple(normal.dimension(), normal.order(), normal.symmetric(), std::move(ts));
}

NormalTensorTuple pi_r(const ConnectionJet &jet) { return read_normal_tensors(normalize(jet).jet); }

ConnectionJet section_s_r(const NormalTensorTuple &t) {
  const int n = t.dimension();
  const int r = t.order();
  std::vector<TruncatedSeries> gamma(static_cast<std::size_t>(n) * n * n, TruncatedSeries(n, r));
  for (int m = 0; m <= r; ++m) {
    const DenseTensor &x = t[m].tensor();
    for (std::size_t f = 0; f < x.size(); ++f) {
      const Rat &v = x.entries()[f];
      if (is_zero(v))
        continue;
      auto idx = x.unflat(f);
      // one term per multiset of derivative indices
      if (!std::is_sorted(idx.begin() + 3, idx.end()))
        continue;
      MultiIndex alpha = index_tuple_to_multi(n, std::vector<int>(idx.begin() + 3, idx.end()));
      gamma[(static_cast<std::size_t>(idx[0]) * n + idx[1]) * n + idx[2]].add_term(alpha, v / alpha.factorial());
    }
  }
  return ConnectionJet(n, r, t.symmetric(), std::move(gamma));
}

std::optional<DiffeoJet> h_equivalence_witness(const ConnectionJet &j1, const ConnectionJet &j2) {
  if (j1.dimension() != j2.dimension())
    throw Error(ErrorCode::DimensionMismatch, "equivalence: dimensions differ");
  if (j1.order() != j2.order())
    throw Error(ErrorCode::OrderMismatch, "equivalence: orders differ");
  if (j1.symmetric() != j2.symmetric())
    throw Error(ErrorCode::InvalidArgument, "equivalence: symmetry flags differ");
  Normalization a = normalize(j1);
  Normalization b = normalize(j2);
  // Normal tensors are the Taylor data in the normal chart, so equal tuples
  // means equal normalized jets.
  if (!(a.jet == b.jet))
    return std::nullopt;
  DiffeoJet tau = diffeo_compose(diffeo_invert(b.tau), a.tau);
  if (!tau.has_identity_linear_part() || !(transform(tau, j1) == j2))
    throw Error(ErrorCode::InternalMismatch, "equivalence witness failed verification");
  return tau;
}

bool pi_equivariance_check(const GlElement &g, const ConnectionJet &jet) {
  DiffeoJet linear = DiffeoJet::linear(g.matrix(), jet.order() + 2);
  return pi_r(transform(linear, jet)) == gl_act(g, pi_r(jet));
}

} // namespace connmod
