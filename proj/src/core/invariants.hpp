#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tensor.hpp"

namespace connmod {

inline constexpr int kDefaultContractionCap = 6;

// Multiplicities (d_0, ..., d_r) of S^{d_0} C_0 (x) ... (x) S^{d_r} C_r.
struct DegreeProfile {
  std::vector<int> d;

  int r() const { return static_cast<int>(d.size()) - 1; }
  int covariant() const;     // p = sum (m+2) d_m
  int contravariant() const; // q = sum d_m
  int excess() const { return covariant() - contravariant(); } // sum (m+1) d_m
  int total() const { return contravariant(); }
  bool is_zero() const { return total() == 0; }

  friend bool operator==(const DegreeProfile &, const DegreeProfile &) = default;
};

// Profiles with sum (m+1) d_m = delta and sum d_m <= max_total, descending
// lexicographic order.
std::vector<DegreeProfile> enumerate_profiles(int r, int delta, int max_total);
// Every profile of length r+1 with sum d_m <= max_total, descending lexicographic.
std::vector<DegreeProfile> enumerate_profiles_by_total(int r, int max_total);

// Rank of the total contractions phi_sigma (sigma in S_p) restricted to the
// span of `basis`. The k-th covariant slot is paired with the sigma(k)-th
// contravariant slot, both counted left to right. Throws UnbalancedVariance
// when the ambient space has p != q and ResourceCap when p > cap.
std::size_t contraction_span_dim(const std::vector<SparseTensor> &basis, int cap = kDefaultContractionCap);
std::size_t contraction_span_dim(const std::vector<DenseTensor> &basis, int cap = kDefaultContractionCap);

// Exact value of phi_sigma on one tensor.
Rat total_contraction(const SparseTensor &t, const std::vector<int> &sigma);

struct ScalarInvariantResult {
  std::size_t dim;
  bool p_neq_q;              // unbalanced ambient variance certificate
  long long homothety_weight; // weight of lambda * Id on the source: -sum (m+1) d_m
  std::string reason;        // "constants" or "p≠q"
};

// Dimension of GL_n-invariant linear functionals on S^{d_0}C_0 (x) ... (x) S^{d_r}C_r.
ScalarInvariantResult scalar_invariant_dimension(int n, const DegreeProfile &profile);

// Symmetry imposed on the target (x)^p T* (x)^q T, covariant slots numbered
// from 1. Parsed from "none", "two-form-endo", "antisym:1,2", "sym:1,2".
struct TargetSymmetry {
  std::vector<std::vector<int>> antisymmetric;
  std::vector<std::vector<int>> symmetric;
  std::string label = "none";

  static TargetSymmetry parse(const std::string &text, int p, int q);
};

struct ProfileCount {
  DegreeProfile profile;
  std::size_t dim;
  std::string reason; // "rank", "C̃_0=0", "zero-source"
};

struct NaturalTensorReport {
  int n, r, p, q;
  bool symmetric;
  std::string target;
  std::vector<ProfileCount> profiles;
  std::size_t total;
};

enum class AdjunctionOrder { SourceFirst, TargetDualFirst };

NaturalTensorReport natural_tensor_dimension(int n, int r, int p, int q, bool symmetric,
                                             const TargetSymmetry &target, int cap = kDefaultContractionCap,
                                             AdjunctionOrder order = AdjunctionOrder::SourceFirst);

// Spanning family of S^{d_0}C_0 (x) ... (x) S^{d_r}C_r (symmetrized products
// of normal-tensor basis elements). Empty when some required C_m is zero.
std::vector<SparseTensor> profile_source_basis(int n, const DegreeProfile &profile, bool symmetric);

// Basis of the dual of the symmetrized target, as tensors with p contravariant
// then q covariant slots.
std::vector<SparseTensor> target_dual_basis(int n, int p, int q, const TargetSymmetry &target);

} // namespace connmod
