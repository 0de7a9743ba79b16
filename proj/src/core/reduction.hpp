#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "connection.hpp"

namespace connmod {

// (Gamma^0, ..., Gamma^r): the normal tensors of an r-jet.
class NormalTensorTuple {
public:
  NormalTensorTuple(int n, int order, bool symmetric, std::vector<NormalTensor> tensors);

  static NormalTensorTuple zero(int n, int order, bool symmetric);
  static NormalTensorTuple random(int n, int order, bool symmetric, std::mt19937_64 &rng);

  int dimension() const { return n_; }
  int order() const { return order_; }
  bool symmetric() const { return symmetric_; }
  const std::vector<NormalTensor> &tensors() const { return tensors_; }
  const NormalTensor &operator[](int m) const { return tensors_[static_cast<std::size_t>(m)]; }

  bool is_zero() const;

  friend bool operator==(const NormalTensorTuple &, const NormalTensorTuple &) = default;

private:
  int n_;
  int order_;
  bool symmetric_;
  std::vector<NormalTensor> tensors_;
};

NormalTensorTuple gl_act(const GlElement &g, const NormalTensorTuple &t);

// Per order m <= r: symmetrization over all m+2 covariant slots of the m-th
// derivative tensor. All zero iff the chart is normal to order r.
std::vector<DenseTensor> normality_defect(const ConnectionJet &jet);
bool is_normal_chart(const ConnectionJet &jet);

struct Normalization {
  DiffeoJet tau;      // order r + 2, identity linear part
  ConnectionJet jet;  // transform(tau, input), normal chart
};

Normalization normalize(const ConnectionJet &jet);

NormalTensorTuple pi_r(const ConnectionJet &jet);

// Polynomial Christoffel symbols with coefficient T_{a(alpha)} / alpha! on x^alpha.
ConnectionJet section_s_r(const NormalTensorTuple &t);

// tau with identity linear part and transform(tau, j1) == j2, when the two
// jets have the same normal tensors. The witness is verified before return.
std::optional<DiffeoJet> h_equivalence_witness(const ConnectionJet &j1, const ConnectionJet &j2);

bool pi_equivariance_check(const GlElement &g, const ConnectionJet &jet);

} // namespace connmod
