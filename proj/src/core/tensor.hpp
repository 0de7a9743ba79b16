#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace connmod {

enum class Variance { Contra, Cov };

// Dense tensor over Q^n. Entries are row-major over slots: the last slot
// varies fastest. Slot positions used by the operations below are 0-based
// positions in the signature.
class DenseTensor {
public:
  DenseTensor() = default;
  DenseTensor(int n, std::vector<Variance> signature);
  DenseTensor(int n, std::vector<Variance> signature, std::vector<Rat> entries);

  // Signature (Contra, Cov x covariant_slots).
  static DenseTensor mixed(int n, int covariant_slots);

  int dimension() const { return n_; }
  int slots() const { return static_cast<int>(signature_.size()); }
  const std::vector<Variance> &signature() const { return signature_; }
  const std::vector<Rat> &entries() const { return entries_; }
  std::vector<Rat> &entries() { return entries_; }
  std::size_t size() const { return entries_.size(); }

  std::size_t flat(std::span<const int> index) const;
  std::vector<int> unflat(std::size_t flat) const;

  Rat &at(std::span<const int> index) { return entries_[flat(index)]; }
  const Rat &at(std::span<const int> index) const { return entries_[flat(index)]; }
  Rat &at(std::initializer_list<int> index) { return at(std::span<const int>(index.begin(), index.size())); }
  const Rat &at(std::initializer_list<int> index) const {
    return at(std::span<const int>(index.begin(), index.size()));
  }

  bool is_zero() const;
  bool same_shape(const DenseTensor &other) const;

  DenseTensor &operator+=(const DenseTensor &b);
  DenseTensor &operator-=(const DenseTensor &b);
  DenseTensor &operator*=(const Rat &c);

  friend bool operator==(const DenseTensor &, const DenseTensor &) = default;

private:
  int n_ = 0;
  std::vector<Variance> signature_;
  std::vector<Rat> entries_;
};

DenseTensor operator+(DenseTensor a, const DenseTensor &b);
DenseTensor operator-(DenseTensor a, const DenseTensor &b);
DenseTensor operator*(const Rat &c, DenseTensor a);

// Average over all permutations of the named slots (which must share variance;
// `symmetrize` requires covariant slots as the operator s_{m+2} does).
DenseTensor symmetrize(const DenseTensor &t, std::span<const int> slots);
DenseTensor antisymmetrize(const DenseTensor &t, std::span<const int> slots);

bool is_symmetric_in(const DenseTensor &t, std::span<const int> slots);
bool is_antisymmetric_in(const DenseTensor &t, int slot_a, int slot_b);
// Sum over each orbit of the named slots vanishes (full symmetrization is zero).
bool symmetrization_vanishes(const DenseTensor &t, std::span<const int> slots);

std::vector<int> slot_range(int first, int count);

// Element of C_m (or of C~_m when symmetric_connection): a (1, m+2) tensor
// T^l_{i j k_1..k_m} symmetric in the k's, with vanishing symmetrization over
// all m+2 covariant slots, and symmetric in (i, j) for the symmetric variant.
class NormalTensor {
public:
  // Validates every invariant; throws SymmetryViolation.
  NormalTensor(int order, bool symmetric_connection, DenseTensor tensor);

  static NormalTensor zero(int n, int order, bool symmetric_connection);
  static bool satisfies_invariants(const DenseTensor &t, int order, bool symmetric_connection);

  int order() const { return order_; }
  bool symmetric_connection() const { return symmetric_; }
  int dimension() const { return tensor_.dimension(); }
  const DenseTensor &tensor() const { return tensor_; }

  friend bool operator==(const NormalTensor &, const NormalTensor &) = default;

private:
  int order_;
  bool symmetric_;
  DenseTensor tensor_;
};

NormalTensor project_normal(const DenseTensor &t, int m, bool symmetric);

// Exact basis of C_m / C~_m as the kernel of the symmetrization map restricted
// to the tensors with the required partial symmetries.
std::vector<NormalTensor> normal_basis(int n, int m, bool symmetric);

// Same kernel, rank only: dim(domain) - rank(symmetrization). Never
// materializes the basis tensors.
struct KernelRank {
  std::size_t domain_dim;
  std::size_t image_rank;
  std::size_t kernel_dim() const { return domain_dim - image_rank; }
};
KernelRank normal_kernel_rank(int n, int m, bool symmetric);

// n * P * C(n+m-1, m) - n * C(n+m+1, m+2) with P = n(n+1)/2 (symmetric) or n^2.
long long dim_formula(int n, int m, bool symmetric);

// Random integer combination of `basis`, coefficients uniform in [lo, hi].
NormalTensor random_normal_tensor(const std::vector<NormalTensor> &basis, int n, int m, bool symmetric,
                                  std::mt19937_64 &rng, int lo = -5, int hi = 5);

class GlElement {
public:
  explicit GlElement(RatMatrix g);

  static GlElement identity(int n) { return GlElement(RatMatrix::identity(static_cast<std::size_t>(n))); }
  static GlElement scalar(int n, const Rat &lambda);

  int dimension() const { return static_cast<int>(matrix_.rows()); }
  const RatMatrix &matrix() const { return matrix_; }
  const RatMatrix &inverse_matrix() const { return inverse_; }

  friend GlElement operator*(const GlElement &a, const GlElement &b) { return GlElement(a.matrix_ * b.matrix_); }

private:
  RatMatrix matrix_;
  RatMatrix inverse_;
};

// Random invertible matrix with small integer entries (retries on singular draws).
GlElement random_gl(int n, std::mt19937_64 &rng, int lo = -3, int hi = 3);

// Contravariant slots transform by g, covariant slots by pullback along g^{-1}.
DenseTensor gl_act(const GlElement &g, const DenseTensor &t);
NormalTensor gl_act(const GlElement &g, const NormalTensor &t);
// d/de (I + eA) . t at e = 0: +A on contravariant slots, -A^T on covariant slots.
DenseTensor gl_infinitesimal_act(const RatMatrix &a, const DenseTensor &t);

// out[.., k, ..] = sum_c m(k, c) in[.., c, ..] along one slot.
DenseTensor apply_on_slot(const DenseTensor &t, int slot, const RatMatrix &m);

// Sparse tensor used where products of basis tensors would be too large dense.
struct SparseTensor {
  int n = 0;
  std::vector<Variance> signature;
  std::vector<std::pair<std::uint64_t, Rat>> entries; // (flat index, value), no zeros

  static SparseTensor from_dense(const DenseTensor &t);
  std::vector<int> unflat(std::uint64_t flat) const;
};

SparseTensor tensor_product(const SparseTensor &a, const SparseTensor &b);

} // namespace connmod

namespace connmod {

// Dimension of {A in gl_n : A . t = 0 for every t}, via the infinitesimal action.
int stabilizer_dimension(const std::vector<DenseTensor> &tensors, int n);

} // namespace connmod
