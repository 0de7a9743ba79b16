#pragma once

#include <random>
#include <vector>

#include "series.hpp"
#include "tensor.hpp"

namespace connmod {

// r-jet at the origin of a linear connection: Christoffel symbols
// Gamma^k_{ij} (nabla_{d_i} d_j = Gamma^k_{ij} d_k) as truncated series.
class ConnectionJet {
public:
  // `gamma` is indexed (k * n + i) * n + j. Throws SymmetryViolation when
  // `symmetric` is set and Gamma^k_{ij} != Gamma^k_{ji}.
  ConnectionJet(int n, int order, bool symmetric, std::vector<TruncatedSeries> gamma);

  static ConnectionJet flat(int n, int order, bool symmetric);

  int dimension() const { return n_; }
  int order() const { return order_; }
  bool symmetric() const { return symmetric_; }
  const TruncatedSeries &christoffel(int k, int i, int j) const { return gamma_[index(k, i, j)]; }
  const std::vector<TruncatedSeries> &christoffels() const { return gamma_; }

  // Tensor of m-th partial derivatives at the origin:
  // T^k_{i j a_1..a_m} = d^m Gamma^k_{ij} / dx_{a_1}..dx_{a_m} (0).
  DenseTensor derivative_tensor(int m) const;

  friend bool operator==(const ConnectionJet &, const ConnectionJet &) = default;

private:
  std::size_t index(int k, int i, int j) const {
    return (static_cast<std::size_t>(k) * n_ + i) * n_ + j;
  }

  int n_;
  int order_;
  bool symmetric_;
  std::vector<TruncatedSeries> gamma_;
};

// Christoffel jet of the same connection read in the chart y = tau(x), as a
// function of y. This is a left action:
// transform(t1 o t2, J) == transform(t1, transform(t2, J)).
ConnectionJet transform(const DiffeoJet &tau, const ConnectionJet &jet);

// T^k_{ij} = Gamma^k_{ij}(0) - Gamma^k_{ji}(0).
DenseTensor torsion_at_origin(const ConnectionJet &jet);

// R^k_{ijl} = d_i Gamma^k_{jl} - d_j Gamma^k_{il}
//            + Gamma^k_{is} Gamma^s_{jl} - Gamma^k_{js} Gamma^s_{il}, at 0.
DenseTensor curvature_at_origin(const ConnectionJet &jet);

ConnectionJet random_connection_jet(int n, int order, bool symmetric, std::mt19937_64 &rng, int lo = -3,
                                    int hi = 3);
// Random diffeomorphism jet; identity linear part when `identity_linear`.
DiffeoJet random_diffeo(int n, int order, bool identity_linear, std::mt19937_64 &rng, int lo = -2, int hi = 2);

} // namespace connmod
