#pragma once

#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace connmod {

inline constexpr int kDefaultIsotropySamples = 20;
inline constexpr std::uint64_t kDefaultIsotropySeed = 20240601;

// Minimum over `samples` seeded random tuples in C_0 x ... x C_r of the
// dimension of their common stabilizer in gl_n. Sample k draws from
// std::seed_seq{seed, k}.
int generic_isotropy(int n, int r, bool symmetric, int samples, std::uint64_t seed);

// i as stated for symmetric connections: n^2 at r = 0 (the moduli space is a
// point), 1 at (n, r) = (2, 1), 0 otherwise. n = 1 gives 1.
int isotropy_rule(int n, int r);

// sum_m dim C_m - (n^2 - i), with m from 1 (symmetric) or 0.
long long generic_dimension_direct(int n, int r, bool symmetric, int i);
// n P sum_{m=0}^r C(n+m-1, n-1) - n sum_{m=1}^{r+2} C(n+m-1, n-1) + i
long long generic_dimension_rearranged(int n, int r, bool symmetric, int i);
// First displayed closed form for symmetric connections, with i replaced by
// the Kronecker correction delta^n_2 delta^r_1:
// n P sum_{m=0}^r C(n+m-1, m) - n sum_{m=0}^r C(n+m+1, m+2) - (n^2 - delta).
long long generic_dimension_closed(int n, int r);
int kronecker_correction(int n, int r);

// Evaluates both forms and throws InternalMismatch if they differ. n = 1 gives 0.
long long generic_dimension(int n, int r, bool symmetric, int i);

// generic_dimension at r = 0..r_max. Symmetric connections use isotropy_rule;
// otherwise i is sampled.
std::vector<long long> poincare_coefficients(int n, int r_max, bool symmetric,
                                             int samples = kDefaultIsotropySamples,
                                             std::uint64_t seed = kDefaultIsotropySeed);

struct ModuliReport {
  int n;
  int r;
  bool symmetric;
  int samples;
  std::uint64_t seed;
  std::vector<long long> normal_dims; // m = 0..r
  int sampled_isotropy;
  int rule_isotropy;                  // -1 when no rule applies
  long long generic_dimension;        // with the sampled i
  std::vector<long long> poincare;    // r' = 0..r
};

ModuliReport moduli_report(int n, int r, bool symmetric, int samples = kDefaultIsotropySamples,
                           std::uint64_t seed = kDefaultIsotropySeed);

} // namespace connmod
