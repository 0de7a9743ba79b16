#include "acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "curvature2.hpp"
#include "moduli.hpp"
#include "reduction.hpp"

namespace connmod {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

ConnectionJet act(const GlElement &g, const ConnectionJet &jet) {
  return transform(DiffeoJet::linear(g.matrix(), jet.order() + 2), jet);
}

Outcome dimension_oracle() {
  auto start = std::chrono::steady_clock::now();
  int cases = 0;
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (bool sym : {true, false}) {
        long long f = dim_formula(n, m, sym);
        auto k = static_cast<long long>(normal_kernel_rank(n, m, sym).kernel_dim());
        if (f != k)
          return {false, "n=" + std::to_string(n) + " m=" + std::to_string(m) + " formula " + std::to_string(f) +
                             " kernel " + std::to_string(k)};
        ++cases;
      }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 120)
    return {false, "took " + std::to_string(secs) + "s"};
  return {true, std::to_string(cases) + " cases agree"};
}

Outcome reduction_round_trip() {
  std::mt19937_64 rng(101);
  int cases = 0;
  for (int n = 2; n <= 3; ++n)
    for (int r = 0; r <= 3; ++r)
      for (bool sym : {true, false})
        for (int s = 0; s < 10; ++s) {
          auto t = NormalTensorTuple::random(n, r, sym, rng);
          if (!(pi_r(section_s_r(t)) == t))
            return {false, "n=" + std::to_string(n) + " r=" + std::to_string(r) + " sample " + std::to_string(s)};
          ++cases;
        }
  return {true, std::to_string(cases) + " tuples"};
}

Outcome fiber_property() {
  std::mt19937_64 rng(202);
  int cases = 0;
  for (int n = 2; n <= 3; ++n)
    for (int r = 0; r <= 2; ++r)
      for (bool sym : {true, false})
        for (int s = 0; s < 3; ++s) {
          auto jet = random_connection_jet(n, r, sym, rng);
          auto tau = random_diffeo(n, r + 2, true, rng);
          auto moved = transform(tau, jet);
          std::string where = "n=" + std::to_string(n) + " r=" + std::to_string(r);
          if (!(pi_r(moved) == pi_r(jet)))
            return {false, "pi_r changed along the fiber at " + where};
          auto w = h_equivalence_witness(jet, moved);
          if (!w || !(transform(*w, jet) == moved) || !w->has_identity_linear_part())
            return {false, "no verified witness at " + where};
          ++cases;
        }
  return {true, std::to_string(cases) + " jets"};
}

Outcome equivariance() {
  std::mt19937_64 rng(303);
  int cases = 0;
  for (int n = 2; n <= 3; ++n)
    for (int r = 0; r <= 2; ++r)
      for (int s = 0; s < 10; ++s) {
        GlElement g = random_gl(n, rng);
        auto jet = random_connection_jet(n, r, s % 2 == 0, rng);
        if (!(pi_r(act(g, jet)) == gl_act(g, pi_r(jet))))
          return {false, "n=" + std::to_string(n) + " r=" + std::to_string(r) + " sample " + std::to_string(s)};
        ++cases;
      }
  return {true, std::to_string(cases) + " (g, J) pairs"};
}

Outcome pointwise_consistency() {
  std::mt19937_64 rng(404);
  for (int n = 2; n <= 3; ++n)
    for (int s = 0; s < 5; ++s) {
      auto ns = random_connection_jet(n, 1, false, rng);
      DenseTensor half = torsion_at_origin(ns);
      half *= Rat(1, 2);
      if (!(pi_r(ns)[0].tensor() == half))
        return {false, "Gamma^0 != torsion/2 at n=" + std::to_string(n)};
      auto sj = random_connection_jet(n, 1 + s % 2, true, rng);
      auto t = pi_r(sj);
      if (!t[0].tensor().is_zero())
        return {false, "Gamma^0 != 0 for a symmetric jet"};
      if (!(c1_to_curv(t[1]).tensor() == curvature_at_origin(sj)))
        return {false, "curvature != c1_to_curv(Gamma^1) at n=" + std::to_string(n)};
    }
  return {true, "torsion, symmetric vanishing and curvature agree"};
}

Outcome collapse_cases() {
  std::mt19937_64 rng(505);
  for (int m = 0; m <= 4; ++m)
    for (bool sym : {true, false})
      if (dim_formula(1, m, sym) != 0 || normal_kernel_rank(1, m, sym).kernel_dim() != 0)
        return {false, "n=1 normal space nonzero at m=" + std::to_string(m)};
  for (int r = 0; r <= 3; ++r)
    for (bool sym : {true, false})
      if (!pi_r(random_connection_jet(1, r, sym, rng)).is_zero())
        return {false, "n=1 pi_r nonzero at r=" + std::to_string(r)};
  for (int n = 1; n <= 4; ++n)
    if (normal_kernel_rank(n, 0, true).kernel_dim() != 0)
      return {false, "symmetric C_0 nonzero at n=" + std::to_string(n)};
  return {true, "n=1 spaces and pi_r vanish; symmetric C_0 = 0 for n <= 4"};
}

Outcome no_scalar_invariants() {
  int profiles = 0;
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 3; ++r)
      for (const auto &p : enumerate_profiles_by_total(r, 6)) {
        if (p.is_zero())
          continue;
        auto res = scalar_invariant_dimension(n, p);
        if (res.dim != 0 || !res.p_neq_q || res.homothety_weight >= 0) {
          std::ostringstream os;
          os << "n=" << n << " r=" << r << " profile";
          for (int d : p.d)
            os << ' ' << d;
          return {false, os.str()};
        }
        ++profiles;
      }
  return {true, std::to_string(profiles) + " profiles, all zero"};
}

Outcome curvature_uniqueness(int cap) {
  auto rep = natural_tensor_dimension(3, 1, 3, 1, true, TargetSymmetry::parse("two-form-endo", 3, 1), cap);
  std::ostringstream os;
  os << "dim " << rep.total << " (expected 1);";
  for (const auto &pc : rep.profiles) {
    os << " (";
    for (std::size_t i = 0; i < pc.profile.d.size(); ++i)
      os << (i ? "," : "") << pc.profile.d[i];
    os << ")->" << pc.dim;
  }
  return {rep.total == 1, os.str()};
}

Outcome bianchi_isomorphism() {
  std::mt19937_64 rng(909);
  for (int n = 2; n <= 4; ++n) {
    auto basis = curvature_like_basis(n);
    auto expected = static_cast<std::size_t>(n * n * (n * n - 1) / 3);
    if (basis.size() != expected || dim_formula(n, 1, true) != static_cast<long long>(expected))
      return {false, "dimension mismatch at n=" + std::to_string(n)};
    for (const auto &r : basis)
      if (!(c1_to_curv(curv_to_c1(r)) == r))
        return {false, "c1_to_curv o curv_to_c1 != id at n=" + std::to_string(n)};
    auto c1 = normal_basis(n, 1, true);
    for (const auto &t : c1)
      if (!(curv_to_c1(c1_to_curv(t)) == t))
        return {false, "curv_to_c1 o c1_to_curv != id at n=" + std::to_string(n)};
    for (int s = 0; s < 3; ++s) {
      GlElement g = random_gl(n, rng);
      const auto &t = c1[static_cast<std::size_t>(s) % c1.size()];
      if (!(c1_to_curv(gl_act(g, t)).tensor() == gl_act(g, c1_to_curv(t).tensor())))
        return {false, "c1_to_curv not equivariant at n=" + std::to_string(n)};
      const auto &r = basis[static_cast<std::size_t>(s) % basis.size()];
      if (!(curv_to_c1(CurvatureLike(gl_act(g, r.tensor()))) == gl_act(g, curv_to_c1(r))))
        return {false, "curv_to_c1 not equivariant at n=" + std::to_string(n)};
    }
  }
  return {true, "inverse and equivariant for n = 2, 3, 4"};
}

Outcome ricci_isomorphism() {
  RatMatrix m = ricci_matrix_dim2(curvature_like_basis(2));
  Rat det = determinant(m);
  return {m.rows() == 4 && !is_zero(det), "det " + rat_to_string(det)};
}

Outcome isotropy_pins() {
  const int samples = 20;
  const auto seed = kDefaultIsotropySeed;
  int a = generic_isotropy(2, 1, true, samples, seed);
  int b = generic_isotropy(2, 2, true, samples, seed);
  int c = generic_isotropy(3, 1, true, samples, seed);
  std::ostringstream os;
  os << "(2,1)=" << a << " (2,2)=" << b << " (3,1)=" << c << " samples=" << samples << " seed=" << seed;
  return {a == 1 && b == 0 && c == 0, os.str()};
}

Outcome moduli_formulas() {
  for (int n = 2; n <= 5; ++n)
    for (int r = 0; r <= 6; ++r) {
      int d = kronecker_correction(n, r);
      long long direct = generic_dimension_direct(n, r, true, d);
      if (direct != generic_dimension_rearranged(n, r, true, d) || direct != generic_dimension_closed(n, r))
        return {false, "forms disagree at n=" + std::to_string(n) + " r=" + std::to_string(r)};
    }
  long long a = generic_dimension(2, 1, true, 1);
  long long b = generic_dimension(2, 2, true, 0);
  long long c = generic_dimension(3, 1, true, 0);
  std::ostringstream os;
  os << "forms agree for n <= 5, r <= 6; values " << a << ", " << b << ", " << c;
  return {a == 1 && b == 8 && c == 15, os.str()};
}

const char *criterion_name(int id) {
  static const char *names[] = {"",
                                "dimension oracle agreement",
                                "reduction round-trip",
                                "fiber property",
                                "equivariance",
                                "pointwise consistency",
                                "collapse cases",
                                "no scalar invariants",
                                "curvature uniqueness",
                                "Bianchi isomorphism",
                                "dimension-2 Ricci isomorphism",
                                "isotropy pins",
                                "moduli formulas"};
  return names[id];
}

} // namespace

CriterionResult run_criterion(int id, int cap) {
  if (id < 1 || id > kCriterionCount)
    throw Error(ErrorCode::InvalidArgument, "criterion id must be in 1.." + std::to_string(kCriterionCount));
  std::function<Outcome()> fns[] = {dimension_oracle,     reduction_round_trip,
                                    fiber_property,       equivariance,
                                    pointwise_consistency, collapse_cases,
                                    no_scalar_invariants, [cap] { return curvature_uniqueness(cap); },
                                    bianchi_isomorphism,  ricci_isomorphism,
                                    isotropy_pins,        moduli_formulas};
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = fns[id - 1]();
  } catch (const std::exception &e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {id, criterion_name(id), out.passed, out.detail, secs};
}

std::vector<CriterionResult> run_acceptance(int cap) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id)
    out.push_back(run_criterion(id, cap));
  return out;
}

} // namespace connmod
