#include "moduli.hpp"

#include <algorithm>
#include <random>

#include "reduction.hpp"

namespace connmod {

namespace {

void check_args(int n, int r) {
  if (n < 1 || r < 0)
    throw Error(ErrorCode::InvalidArgument, "moduli: need n >= 1 and r >= 0");
}

long long pairs(int n, bool symmetric) { return symmetric ? n * (n + 1) / 2 : static_cast<long long>(n) * n; }

long long binom(int a, int b) { return binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(b)).get_si(); }

} // namespace

int generic_isotropy(int n, int r, bool symmetric, int samples, std::uint64_t seed) {
  check_args(n, r);
  if (samples < 1)
    throw Error(ErrorCode::InvalidArgument, "generic_isotropy: samples must be >= 1");
  int best = n * n;
  for (int k = 0; k < samples && best > 0; ++k) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(k)};
    std::mt19937_64 rng(seq);
    auto tuple = NormalTensorTuple::random(n, r, symmetric, rng);
    std::vector<DenseTensor> ts;
    for (int m = symmetric ? 1 : 0; m <= r; ++m)
      ts.push_back(tuple[m].tensor());
    best = std::min(best, stabilizer_dimension(ts, n));
  }
  return best;
}

int isotropy_rule(int n, int r) {
  check_args(n, r);
  if (r == 0 || n == 1)
    return n * n;
  return n == 2 && r == 1 ? 1 : 0;
}

int kronecker_correction(int n, int r) { return n == 2 && r == 1 ? 1 : 0; }

long long generic_dimension_direct(int n, int r, bool symmetric, int i) {
  check_args(n, r);
  long long sum = 0;
  for (int m = symmetric ? 1 : 0; m <= r; ++m)
    sum += dim_formula(n, m, symmetric);
  return sum - (static_cast<long long>(n) * n - i);
}

long long generic_dimension_rearranged(int n, int r, bool symmetric, int i) {
  check_args(n, r);
  long long a = 0, b = 0;
  for (int m = 0; m <= r; ++m)
    a += binom(n + m - 1, n - 1);
  for (int m = 1; m <= r + 2; ++m)
    b += binom(n + m - 1, n - 1);
  return n * pairs(n, symmetric) * a - n * b + i;
}

long long generic_dimension_closed(int n, int r) {
  check_args(n, r);
  long long a = 0, b = 0;
  for (int m = 0; m <= r; ++m) {
    a += binom(n + m - 1, m);
    b += binom(n + m + 1, m + 2);
  }
  return n * pairs(n, true) * a - n * b - (static_cast<long long>(n) * n - kronecker_correction(n, r));
}

long long generic_dimension(int n, int r, bool symmetric, int i) {
  check_args(n, r);
  if (i < 0 || i > n * n)
    throw Error(ErrorCode::InvalidArgument, "generic_dimension: i must lie in [0, n^2]");
  if (n == 1)
    return 0;
  long long direct = generic_dimension_direct(n, r, symmetric, i);
  long long rearranged = generic_dimension_rearranged(n, r, symmetric, i);
  if (direct != rearranged)
    throw Error(ErrorCode::InternalMismatch, "generic_dimension: direct " + std::to_string(direct) +
                                                 " != rearranged " + std::to_string(rearranged));
  return direct;
}

std::vector<long long> poincare_coefficients(int n, int r_max, bool symmetric, int samples, std::uint64_t seed) {
  check_args(n, r_max);
  std::vector<long long> out;
  for (int r = 0; r <= r_max; ++r) {
    int i = symmetric ? isotropy_rule(n, r) : generic_isotropy(n, r, false, samples, seed);
    out.push_back(generic_dimension(n, r, symmetric, i));
  }
  return out;
}

ModuliReport moduli_report(int n, int r, bool symmetric, int samples, std::uint64_t seed) {
  check_args(n, r);
  ModuliReport rep{n, r, symmetric, samples, seed, {}, 0, -1, 0, {}};
  for (int m = 0; m <= r; ++m)
    rep.normal_dims.push_back(dim_formula(n, m, symmetric));
  rep.sampled_isotropy = generic_isotropy(n, r, symmetric, samples, seed);
  if (symmetric)
    rep.rule_isotropy = isotropy_rule(n, r);
  rep.generic_dimension = generic_dimension(n, r, symmetric, rep.sampled_isotropy);
  rep.poincare = poincare_coefficients(n, r, symmetric, samples, seed);
  return rep;
}

} // namespace connmod
