#pragma once

#include <string>
#include <vector>

#include "tensor.hpp"

namespace connmod {

// R^k_{ijl}: antisymmetric in (i, j) and R^k_{ijl} + R^k_{lij} + R^k_{jli} = 0.
class CurvatureLike {
public:
  explicit CurvatureLike(DenseTensor t); // throws SymmetryViolation

  static bool satisfies_invariants(const DenseTensor &t);

  int dimension() const { return tensor_.dimension(); }
  const DenseTensor &tensor() const { return tensor_; }

  friend bool operator==(const CurvatureLike &, const CurvatureLike &) = default;

private:
  DenseTensor tensor_;
};

// R^k_{ijl} = T^k_{jli} - T^k_{ilj}
CurvatureLike c1_to_curv(const NormalTensor &t);
// T^k_{ijl} = (R^k_{lij} + R^k_{lji}) / 3
NormalTensor curv_to_c1(const CurvatureLike &r);

// Basis of the curvature-like tensors as the solution space of the linear
// antisymmetry and Bianchi constraints on all (1,3) tensors.
std::vector<CurvatureLike> curvature_like_basis(int n);

// rho(R)_{ij} = sum_k R^k_{ikj}
DenseTensor ricci(const CurvatureLike &r);

struct RicciSplit {
  DenseTensor symmetric_part;
  DenseTensor antisymmetric_part;
};
RicciSplit ricci_split(const CurvatureLike &r);

// Matrix of rho_s (+) rho_a in dimension 2: one row per element of `basis`,
// columns (S_00, S_01, S_11, A_01).
RatMatrix ricci_matrix_dim2(const std::vector<CurvatureLike> &basis);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
// Sylvester inertia of a symmetric rational matrix by congruence reduction.
Inertia inertia(const RatMatrix &symmetric);

enum class IsotropyLabel { O2, O11, Larger };
const char *isotropy_label_name(IsotropyLabel l);

struct PairIsotropy {
  int lie_dim;
  IsotropyLabel label;
};

// Stabilizer in gl_2 of a symmetric 2-tensor T2 and a 2-form w2. The label
// comes from the signature of T2; only lie_dim is computed from the action.
PairIsotropy pair_isotropy(const DenseTensor &t2, const DenseTensor &w2);

} // namespace connmod
