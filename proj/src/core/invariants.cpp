#include "invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace connmod {

int DegreeProfile::covariant() const {
  int p = 0;
  for (std::size_t m = 0; m < d.size(); ++m)
    p += (static_cast<int>(m) + 2) * d[m];
  return p;
}

int DegreeProfile::contravariant() const { return std::accumulate(d.begin(), d.end(), 0); }

namespace {

void profiles_rec(int m, int r, int remaining_excess, int remaining_total, bool exact, std::vector<int> &cur,
                  std::vector<DegreeProfile> &out) {
  if (m > r) {
    if (!exact || remaining_excess == 0)
      out.push_back({cur});
    return;
  }
  const int weight = m + 1;
  int hi = remaining_total;
  if (exact)
    hi = std::min(hi, remaining_excess / weight);
  for (int k = hi; k >= 0; --k) {
    cur[static_cast<std::size_t>(m)] = k;
    profiles_rec(m + 1, r, remaining_excess - k * weight, remaining_total - k, exact, cur, out);
  }
  cur[static_cast<std::size_t>(m)] = 0;
}

std::vector<std::vector<int>> all_permutations(int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> perm(static_cast<std::size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  do
    out.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int permutation_sign(const std::vector<int> &perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      inv += perm[i] > perm[j];
  return inv % 2 == 0 ? 1 : -1;
}

// Sparse accumulator keyed by flat index.
SparseTensor from_map(int n, std::vector<Variance> sig, const std::map<std::uint64_t, Rat> &m) {
  SparseTensor t;
  t.n = n;
  t.signature = std::move(sig);
  for (const auto &[f, x] : m)
    if (!is_zero(x))
      t.entries.emplace_back(f, x);
  return t;
}

std::uint64_t flat_of(int n, const std::vector<int> &idx) {
  std::uint64_t f = 0;
  for (int v : idx)
    f = f * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
  return f;
}

} // namespace

std::vector<DegreeProfile> enumerate_profiles(int r, int delta, int max_total) {
  if (r < 0 || delta < 0 || max_total < 0)
    throw Error(ErrorCode::InvalidArgument, "enumerate_profiles: r, delta and max_total must be non-negative");
  std::vector<int> cur(static_cast<std::size_t>(r) + 1, 0);
  std::vector<DegreeProfile> out;
  profiles_rec(0, r, delta, max_total, true, cur, out);
  return out;
}

std::vector<DegreeProfile> enumerate_profiles_by_total(int r, int max_total) {
  if (r < 0 || max_total < 0)
    throw Error(ErrorCode::InvalidArgument, "enumerate_profiles_by_total: arguments must be non-negative");
  std::vector<int> cur(static_cast<std::size_t>(r) + 1, 0);
  std::vector<DegreeProfile> out;
  profiles_rec(0, r, 0, max_total, false, cur, out);
  return out;
}

Rat total_contraction(const SparseTensor &t, const std::vector<int> &sigma) {
  std::vector<int> cov, contra;
  for (int s = 0; s < static_cast<int>(t.signature.size()); ++s)
    (t.signature[s] == Variance::Cov ? cov : contra).push_back(s);
  Rat acc = 0;
  for (const auto &[f, x] : t.entries) {
    auto idx = t.unflat(f);
    bool hit = true;
    for (std::size_t a = 0; a < cov.size() && hit; ++a)
      hit = idx[cov[a]] == idx[contra[sigma[a]]];
    if (hit)
      acc += x;
  }
  return acc;
}

std::size_t contraction_span_dim(const std::vector<SparseTensor> &basis, int cap) {
  if (basis.empty())
    return 0;
  const auto &sig = basis.front().signature;
  for (const auto &b : basis)
    if (b.signature != sig || b.n != basis.front().n)
      throw Error(ErrorCode::DimensionMismatch, "contraction_span_dim: basis tensors differ in shape");
  const int p = static_cast<int>(std::count(sig.begin(), sig.end(), Variance::Cov));
  const int q = static_cast<int>(sig.size()) - p;
  if (p != q)
    throw Error(ErrorCode::UnbalancedVariance, "contraction_span_dim: ambient space has p = " + std::to_string(p) +
                                                   " covariant and q = " + std::to_string(q) +
                                                   " contravariant slots");
  if (p > cap)
    throw Error(ErrorCode::ResourceCap, "contraction_span_dim: p = " + std::to_string(p) + " exceeds cap " +
                                            std::to_string(cap));
  IntegerRowEchelon ech(basis.size());
  for (const auto &sigma : all_permutations(p)) {
    SparseRatRow row;
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Rat v = total_contraction(basis[c], sigma);
      if (!is_zero(v))
        row.emplace_back(c, std::move(v));
    }
    ech.add(row);
    if (ech.rank() == basis.size())
      break;
  }
  return ech.rank();
}

std::size_t contraction_span_dim(const std::vector<DenseTensor> &basis, int cap) {
  std::vector<SparseTensor> sparse;
  sparse.reserve(basis.size());
  for (const auto &b : basis)
    sparse.push_back(SparseTensor::from_dense(b));
  return contraction_span_dim(sparse, cap);
}

ScalarInvariantResult scalar_invariant_dimension(int n, const DegreeProfile &profile) {
  if (n < 1)
    throw Error(ErrorCode::InvalidArgument, "scalar_invariant_dimension: n must be positive");
  for (int x : profile.d)
    if (x < 0)
      throw Error(ErrorCode::InvalidArgument, "scalar_invariant_dimension: negative multiplicity");
  ScalarInvariantResult res;
  res.homothety_weight = -static_cast<long long>(profile.excess());
  res.p_neq_q = profile.covariant() != profile.contravariant();
  if (profile.is_zero()) {
    res.dim = 1;
    res.reason = "constants";
  } else {
    // No GL_n-invariant functional on a mixed space with p != q; a sub-quotient
    // inherits none either.
    res.dim = 0;
    res.reason = "p≠q";
  }
  return res;
}

TargetSymmetry TargetSymmetry::parse(const std::string &text, int p, int q) {
  TargetSymmetry t;
  t.label = text;
  if (text.empty() || text == "none")
    return t;
  if (text == "two-form-endo") {
    if (p != 3 || q != 1)
      throw Error(ErrorCode::InvalidArgument, "target two-form-endo needs p = 3, q = 1");
    t.antisymmetric.push_back({1, 2});
    return t;
  }
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::InvalidArgument, "unknown target symmetry '" + text + "'");
  std::string kind = text.substr(0, colon);
  std::vector<int> slots;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      slots.push_back(std::stoi(item));
    } catch (const std::exception &) {
      throw Error(ErrorCode::InvalidArgument, "bad slot '" + item + "' in target symmetry");
    }
  }
  if (slots.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "target symmetry needs at least two slots");
  for (int s : slots)
    if (s < 1 || s > p)
      throw Error(ErrorCode::InvalidArgument, "target symmetry slot " + std::to_string(s) +
                                                  " is not a covariant slot of the target");
  if (kind == "antisym")
    t.antisymmetric.push_back(slots);
  else if (kind == "sym")
    t.symmetric.push_back(slots);
  else
    throw Error(ErrorCode::InvalidArgument, "unknown target symmetry kind '" + kind + "'");
  return t;
}

std::vector<SparseTensor> target_dual_basis(int n, int p, int q, const TargetSymmetry &target) {
  // F* has p contravariant slots (dual to the covariant slots of F) then q covariant.
  std::vector<Variance> sig(static_cast<std::size_t>(p), Variance::Contra);
  sig.insert(sig.end(), static_cast<std::size_t>(q), Variance::Cov);
  const int slots = p + q;
  std::uint64_t total = 1;
  for (int s = 0; s < slots; ++s)
    total *= static_cast<std::uint64_t>(n);

  struct Group {
    std::vector<int> slots;
    bool alternating;
  };
  std::vector<Group> groups;
  for (const auto &g : target.antisymmetric)
    groups.push_back({g, true});
  for (const auto &g : target.symmetric)
    groups.push_back({g, false});

  std::vector<SparseTensor> out;
  IntegerRowEchelon ech(total);
  for (std::uint64_t f = 0; f < total; ++f) {
    std::vector<int> idx(static_cast<std::size_t>(slots));
    std::uint64_t rem = f;
    for (int s = slots - 1; s >= 0; --s) {
      idx[s] = static_cast<int>(rem % static_cast<std::uint64_t>(n));
      rem /= static_cast<std::uint64_t>(n);
    }
    std::map<std::uint64_t, Rat> acc{{f, Rat(1)}};
    for (const auto &g : groups) {
      std::map<std::uint64_t, Rat> next;
      auto perms = all_permutations(static_cast<int>(g.slots.size()));
      for (const auto &[fi, x] : acc) {
        std::vector<int> base(static_cast<std::size_t>(slots));
        std::uint64_t r2 = fi;
        for (int s = slots - 1; s >= 0; --s) {
          base[s] = static_cast<int>(r2 % static_cast<std::uint64_t>(n));
          r2 /= static_cast<std::uint64_t>(n);
        }
        for (const auto &perm : perms) {
          auto j = base;
          for (std::size_t a = 0; a < g.slots.size(); ++a)
            j[g.slots[a] - 1] = base[g.slots[perm[a]] - 1];
          Rat w = x;
          if (g.alternating && permutation_sign(perm) < 0)
            w = -w;
          next[flat_of(n, j)] += w;
        }
      }
      acc = std::move(next);
    }
    SparseTensor t = from_map(n, sig, acc);
    SparseRatRow row;
    for (const auto &[fi, x] : t.entries)
      row.emplace_back(fi, x);
    if (!t.entries.empty() && ech.add(row))
      out.push_back(std::move(t));
  }
  return out;
}

std::vector<SparseTensor> profile_source_basis(int n, const DegreeProfile &profile, bool symmetric) {
  SparseTensor unit;
  unit.n = n;
  unit.entries.emplace_back(0, Rat(1));
  std::vector<SparseTensor> current{unit};
  for (int m = 0; m <= profile.r(); ++m) {
    const int d = profile.d[static_cast<std::size_t>(m)];
    if (d == 0)
      continue;
    std::vector<SparseTensor> factor;
    for (const auto &b : normal_basis(n, m, symmetric))
      factor.push_back(SparseTensor::from_dense(b.tensor()));
    if (factor.empty())
      return {};
    // symmetrized products over multisets of basis elements
    std::vector<SparseTensor> powers;
    std::vector<int> pick(static_cast<std::size_t>(d), 0);
    const int k = static_cast<int>(factor.size());
    for (;;) {
      std::map<std::uint64_t, Rat> acc;
      std::vector<Variance> sig;
      auto order = pick;
      do {
        SparseTensor prod = unit;
        for (int which : order)
          prod = tensor_product(prod, factor[static_cast<std::size_t>(which)]);
        sig = prod.signature;
        for (const auto &[f, x] : prod.entries)
          acc[f] += x;
      } while (std::next_permutation(order.begin(), order.end()));
      powers.push_back(from_map(n, sig, acc));
      // next non-decreasing pick
      int pos = d - 1;
      while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == k - 1)
        --pos;
      if (pos < 0)
        break;
      ++pick[static_cast<std::size_t>(pos)];
      for (int q = pos + 1; q < d; ++q)
        pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(pos)];
    }
    std::vector<SparseTensor> next;
    for (const auto &a : current)
      for (const auto &b : powers)
        next.push_back(tensor_product(a, b));
    current = std::move(next);
  }
  return current;
}

NaturalTensorReport natural_tensor_dimension(int n, int r, int p, int q, bool symmetric,
                                             const TargetSymmetry &target, int cap, AdjunctionOrder order) {
  if (n < 1 || r < 0 || p < 0 || q < 0)
    throw Error(ErrorCode::InvalidArgument, "natural_tensor_dimension: bad arguments");
  if (p < q)
    throw Error(ErrorCode::InvalidArgument, "natural_tensor_dimension: needs p >= q");
  NaturalTensorReport rep{n, r, p, q, symmetric, target.label, {}, 0};
  const int delta = p - q;
  auto dual = target_dual_basis(n, p, q, target);
  for (const auto &profile : enumerate_profiles(r, delta, delta)) {
    const int ambient = profile.covariant() + q;
    if (ambient > cap)
      throw Error(ErrorCode::ResourceCap, "natural_tensor_dimension: ambient p = " + std::to_string(ambient) +
                                              " exceeds cap " + std::to_string(cap));
    auto source = profile_source_basis(n, profile, symmetric);
    if (source.empty()) {
      bool c0 = symmetric && profile.d[0] > 0 && n > 1;
      rep.profiles.push_back({profile, 0, c0 ? "C̃_0=0" : "zero-source"});
      continue;
    }
    std::vector<SparseTensor> combined;
    combined.reserve(source.size() * dual.size());
    for (const auto &e : source)
      for (const auto &f : dual)
        combined.push_back(order == AdjunctionOrder::SourceFirst ? tensor_product(e, f) : tensor_product(f, e));
    std::size_t dim = contraction_span_dim(combined, cap);
    rep.profiles.push_back({profile, dim, "rank"});
    rep.total += dim;
  }
  return rep;
}

} // namespace connmod
